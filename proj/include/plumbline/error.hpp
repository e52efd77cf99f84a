// Error type shared by every module.  Each failure carries a stable short
// name (e.g. "NotATree", "EcaEmpty") that the CLI prints and Python re-raises.
#pragma once

#include <stdexcept>
#include <string>

namespace plumbline {

class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace plumbline
