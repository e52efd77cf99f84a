// Bundled example graphs: the worked examples, the ADE families and a few
// minimally elliptic samples.  Referenced on the command line as corpus:<name>.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plumbline/graph.hpp"
#include "plumbline/seifert.hpp"

namespace plumbline {

struct CorpusEntry {
  std::string name;
  std::string description;
  std::string graph_text;                // graph file contents
  std::optional<SeifertData> seifert;    // for star-shaped entries
  enum class Kind { Example, Rational, Elliptic } kind = Kind::Example;
};

// Fixed entries followed by A_1..A_6, D_4..D_7, E_6, E_7, E_8.
const std::vector<CorpusEntry>& corpus_entries();
std::vector<std::string> corpus_names();
// Also accepts parametric names A<n> (n >= 1) and D<n> (n >= 4).  Throws
// UnknownCorpusEntry.
CorpusEntry corpus_entry(const std::string& name);
ResolutionGraph corpus_graph(const std::string& name);

// Chains and trees of (-2)-curves.
std::string graph_text_A(int n);
std::string graph_text_D(int n);
std::string graph_text_E(int n);  // n in {6, 7, 8}

}  // namespace plumbline
