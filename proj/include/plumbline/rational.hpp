// Exact integer / rational scalars used throughout the library.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace plumbline {

using Int = mpz_class;
using Q = mpq_class;

// A cycle with integer coordinates in the E-basis (internal vertex order).
using IntCycle = std::vector<long long>;
// A cycle with rational coordinates in the E-basis (internal vertex order).
using RatCycle = std::vector<Q>;

// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Q& q);
std::string to_string(const Int& z);

// Accepts "p", "-p", "p/q"; throws DomainError("ParseError") otherwise.
Q parse_rational(const std::string& s);

// long is 64-bit on the supported (LP64) platforms.
static_assert(sizeof(long) == sizeof(long long), "LP64 platform required");
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline Q make_q(long long p, long long q = 1) {
  Q r(make_int(p), make_int(q));
  r.canonicalize();
  return r;
}

bool is_integer(const Q& q);
// Floor / ceiling of an exact rational.
Int floor_q(const Q& q);
Int ceil_q(const Q& q);
long long to_ll(const Int& z);  // throws DomainError("Overflow") when out of range

RatCycle to_rat(const IntCycle& x);
bool all_integral(const RatCycle& x);
IntCycle to_int(const RatCycle& x);  // requires all_integral

}  // namespace plumbline
