// Multivariate polynomials over Q and rational functions with a factored
// denominator.  These are the symbolic coefficient field of the chart
// computations (variables c_0, c_1, ... of a cut, or a formal 1/(v - c_0)).
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plumbline/rational.hpp"

namespace plumbline {

class Poly {
 public:
  // Exponent vector with trailing zeros removed; ordered lexicographically
  // with variable 0 most significant, so the last map entry is the leading term.
  using Monomial = std::vector<int>;

  Poly() = default;
  explicit Poly(const Q& c);
  static Poly var(int i);
  static Poly monomial(const Monomial& m, const Q& c);

  const std::map<Monomial, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Q constant_term() const;
  Q coefficient(const Monomial& m) const;
  int num_vars() const;  // 1 + largest variable index that occurs
  int degree_in(int var) const;
  int total_degree() const;
  std::pair<Monomial, Q> leading_term() const;  // requires !is_zero()

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Q& c);
  friend Poly operator*(const Q& c, const Poly& a) { return a * c; }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned n) const;
  Poly derivative(int var) const;
  Q evaluate(const std::vector<Q>& x) const;  // missing variables read as 0
  // Coefficient of var^k, as a polynomial in the remaining variables.
  Poly coefficient_of(int var, int k) const;
  // Exact division: returns true and sets `quotient` when d divides *this.
  bool divide_exact(const Poly& d, Poly& quotient) const;

  // Variables are printed as names[i] (default c0, c1, ...).
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(Monomial m, const Q& c);
  std::map<Monomial, Q> terms_;
};

// num / ∏ den_i^{k_i}.  Denominator factors are non-constant polynomials made
// monic (leading coefficient 1); common factors with the numerator are
// cancelled when they divide exactly.  Equality is decided by
// cross-multiplication, so it is exact even without a canonical form.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const Q& c) : num_(c) {}  // NOLINT: implicit embedding Q -> Q(c)
  RatFunc(int c) : num_(Q(c)) {}    // NOLINT
  explicit RatFunc(const Poly& p) : num_(p) {}
  static RatFunc var(int i) { return RatFunc(Poly::var(i)); }

  const Poly& numerator() const { return num_; }
  const std::vector<std::pair<Poly, int>>& denominator() const { return den_; }
  Poly denominator_product() const;
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // DivisionByZero
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative(int var) const;
  // Throws PoleAtEvaluationPoint if a denominator factor vanishes.
  Q evaluate(const std::vector<Q>& x) const;
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_factor(const Poly& f, int k);
  void cancel();
  Poly num_;
  std::vector<std::pair<Poly, int>> den_;
};

inline bool field_is_zero(const RatFunc& x) { return x.is_zero(); }
inline std::string field_to_string(const RatFunc& x) { return x.to_string(); }
inline bool field_is_zero(const Poly& x) { return x.is_zero(); }
inline std::string field_to_string(const Poly& x) { return x.to_string(); }

}  // namespace plumbline
