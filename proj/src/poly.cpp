#include "plumbline/poly.hpp"

#include <algorithm>
#include <sstream>

#include "plumbline/error.hpp"

namespace plumbline {

namespace {

void trim(Poly::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Poly::Monomial mono_mul(const Poly::Monomial& a, const Poly::Monomial& b) {
  Poly::Monomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool mono_divides(const Poly::Monomial& d, const Poly::Monomial& m) {
  if (d.size() > m.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Poly::Monomial mono_div(const Poly::Monomial& m, const Poly::Monomial& d) {
  Poly::Monomial r = m;
  for (std::size_t i = 0; i < d.size(); ++i) r[i] -= d[i];
  trim(r);
  return r;
}

}  // namespace

Poly::Poly(const Q& c) {
  if (sgn(c) != 0) terms_[{}] = c;
}

Poly Poly::var(int i) {
  Monomial m(static_cast<std::size_t>(i) + 1, 0);
  m[i] = 1;
  return monomial(m, Q(1));
}

Poly Poly::monomial(const Monomial& m, const Q& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

void Poly::add_term(Monomial m, const Q& c) {
  if (sgn(c) == 0) return;
  trim(m);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Q Poly::constant_term() const { return coefficient({}); }

Q Poly::coefficient(const Monomial& m) const {
  Monomial k = m;
  trim(k);
  auto it = terms_.find(k);
  return it == terms_.end() ? Q(0) : it->second;
}

int Poly::num_vars() const {
  int n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, static_cast<int>(m.size()));
  return n;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    if (var < static_cast<int>(m.size())) d = std::max(d, m[var]);
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::pair<Poly::Monomial, Q> Poly::leading_term() const { return *terms_.rbegin(); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, Q(-c));
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), Q(ca * cb));
  return r;
}

Poly operator*(const Poly& a, const Q& c) {
  if (sgn(c) == 0) return Poly();
  Poly r = a;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(Q(1)), base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Poly Poly::derivative(int var) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (var >= static_cast<int>(m.size()) || m[var] == 0) continue;
    Monomial k = m;
    k[var] -= 1;
    r.add_term(k, Q(c * m[var]));
  }
  return r;
}

Q Poly::evaluate(const std::vector<Q>& x) const {
  Q total = 0;
  for (const auto& [m, c] : terms_) {
    Q t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      Q xi = i < x.size() ? x[i] : Q(0);
      Q p = 1;
      for (int e = 0; e < m[i]; ++e) p *= xi;
      t *= p;
    }
    total += t;
  }
  return total;
}

Poly Poly::coefficient_of(int var, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = var < static_cast<int>(m.size()) ? m[var] : 0;
    if (e != k) continue;
    Monomial rest = m;
    if (var < static_cast<int>(rest.size())) rest[var] = 0;
    r.add_term(rest, c);
  }
  return r;
}

bool Poly::divide_exact(const Poly& d, Poly& quotient) const {
  if (d.is_zero()) throw DomainError("DivisionByZero", "polynomial division by zero");
  // With a single divisor in lex order the division algorithm leaves a zero
  // remainder exactly when d divides; a leading term that LT(d) does not
  // divide can never be cancelled later, so stop at the first one.
  auto [md, cd] = d.leading_term();
  Poly r = *this, q;
  while (!r.is_zero()) {
    auto [mr, cr] = r.leading_term();
    if (!mono_divides(md, mr)) return false;
    Poly t = monomial(mono_div(mr, md), Q(cr / cd));
    q += t;
    r -= t * d;
  }
  quotient = q;
  return true;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Q a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1) && !m.empty();
    if (!unit) os << plumbline::to_string(a);
    bool need_star = !unit;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "c" + std::to_string(i));
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFunc

Poly RatFunc::denominator_product() const {
  Poly p(Q(1));
  for (const auto& [f, k] : den_) p = p * f.pow(static_cast<unsigned>(k));
  return p;
}

void RatFunc::add_factor(const Poly& f, int k) {
  if (f.is_zero()) throw DomainError("DivisionByZero", "rational function with zero denominator");
  if (k == 0) return;
  if (f.is_constant()) {
    Q c = f.constant_term();
    Q inv = 1 / c;
    Q s = 1;
    for (int i = 0; i < k; ++i) s *= inv;
    num_ = num_ * s;
    return;
  }
  Q lc = f.leading_term().second;
  Poly monic = f * Q(1 / lc);
  Q s = 1;
  for (int i = 0; i < k; ++i) s /= lc;
  num_ = num_ * s;
  for (auto& [g, m] : den_)
    if (g == monic) {
      m += k;
      return;
    }
  den_.emplace_back(monic, k);
}

void RatFunc::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& [f, k] : den_) {
    Poly q;
    while (k > 0 && num_.divide_exact(f, q)) {
      num_ = q;
      --k;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](const auto& e) { return e.second == 0; }), den_.end());
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFunc r;
  Poly na = a.num_, nb = b.num_;
  std::vector<std::pair<Poly, int>> den = a.den_;
  for (const auto& [f, kb] : b.den_) {
    bool found = false;
    for (auto& [g, ka] : den)
      if (g == f) {
        found = true;
        if (kb > ka) {
          na = na * f.pow(static_cast<unsigned>(kb - ka));
          ka = kb;
        } else if (ka > kb) {
          nb = nb * f.pow(static_cast<unsigned>(ka - kb));
        }
      }
    if (!found) {
      na = na * f.pow(static_cast<unsigned>(kb));
      den.emplace_back(f, kb);
    }
  }
  for (const auto& [g, ka] : a.den_) {
    bool in_b = false;
    for (const auto& [f, kb] : b.den_)
      if (f == g) in_b = true;
    if (!in_b) nb = nb * g.pow(static_cast<unsigned>(ka));
  }
  r.num_ = na + nb;
  r.den_ = std::move(den);
  r.cancel();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc r;
  r.num_ = a.num_ * b.num_;
  if (r.num_.is_zero()) return r;
  r.den_ = a.den_;
  for (const auto& [f, k] : b.den_) r.add_factor(f, k);
  r.cancel();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("DivisionByZero", "division by the zero rational function");
  RatFunc r;
  r.num_ = a.num_ * b.denominator_product();
  r.den_ = a.den_;
  r.add_factor(b.num_, 1);
  r.cancel();
  return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.denominator_product() == b.num_ * a.denominator_product();
}

RatFunc RatFunc::derivative(int var) const {
  // (N / ∏ f_i^{k_i})' = (N' P - N Σ k_i f_i' P / f_i) / (P ∏ f_i^{k_i}),  P = ∏ f_i.
  Poly P(Q(1));
  for (const auto& [f, k] : den_) P = P * f;
  Poly top = num_.derivative(var) * P;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    Poly rest(Q(1));
    for (std::size_t j = 0; j < den_.size(); ++j)
      if (j != i) rest = rest * den_[j].first;
    top -= num_ * den_[i].first.derivative(var) * rest * Q(den_[i].second);
  }
  RatFunc r;
  r.num_ = top;
  r.den_ = den_;
  for (auto& [f, k] : r.den_) k += 1;
  r.cancel();
  return r;
}

Q RatFunc::evaluate(const std::vector<Q>& x) const {
  Q d = 1;
  for (const auto& [f, k] : den_) {
    Q v = f.evaluate(x);
    if (sgn(v) == 0) throw DomainError("PoleAtEvaluationPoint", "denominator vanishes at the evaluation point");
    for (int i = 0; i < k; ++i) d *= v;
  }
  return num_.evaluate(x) / d;
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
  std::string n = num_.to_string(names);
  if (den_.empty()) return n;
  std::ostringstream os;
  os << "(" << n << ")/(";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i) os << "*";
    os << "(" << den_[i].first.to_string(names) << ")";
    if (den_[i].second > 1) os << "^" << den_[i].second;
  }
  os << ")";
  return os.str();
}

}  // namespace plumbline
