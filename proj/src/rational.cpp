#include "plumbline/rational.hpp"

#include <climits>

#include "plumbline/error.hpp"

namespace plumbline {

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Q& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q parse_rational(const std::string& s) {
  auto bad = [&]() { return DomainError("ParseError", "not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') throw bad();
  Int n(num), d(den);
  if (d == 0) throw DomainError("ParseError", "zero denominator in '" + s + "'");
  Q r(n, d);
  r.canonicalize();
  return r;
}

bool is_integer(const Q& q) { return q.get_den() == 1; }

Int floor_q(const Q& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_q(const Q& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long long to_ll(const Int& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t()))
    throw DomainError("Overflow", "integer " + z.get_str() + " exceeds machine range");
  return z.get_si();
}

RatCycle to_rat(const IntCycle& x) {
  RatCycle r;
  r.reserve(x.size());
  for (long long v : x) r.push_back(make_q(v));
  return r;
}

bool all_integral(const RatCycle& x) {
  for (const auto& q : x)
    if (!is_integer(q)) return false;
  return true;
}

IntCycle to_int(const RatCycle& x) {
  IntCycle r;
  r.reserve(x.size());
  for (const auto& q : x) {
    if (!is_integer(q)) throw DomainError("NotIntegral", "cycle has non-integral coordinate " + to_string(q));
    r.push_back(to_ll(q.get_num()));
  }
  return r;
}

}  // namespace plumbline
