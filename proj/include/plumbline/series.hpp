// Truncated Laurent series in one variable over an exact field T
// (Q, Q(i) or RatFunc).  A series knows its coefficients for exponents
// e < prec; every operation propagates the precision, and asking for a
// coefficient at or beyond it throws TruncationInsufficient.  Exact series
// (polynomials) carry prec == kExact.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "plumbline/error.hpp"
#include "plumbline/field.hpp"
#include "plumbline/poly.hpp"

namespace plumbline {

template <class T>
class TruncSeries {
 public:
  static constexpr int kExact = 1 << 29;

  // The zero series known below u^prec (exact zero by default).
  explicit TruncSeries(int prec = kExact) : low_(0), prec_(prec) {}

  // Coefficients coeffs[i] of u^{low + i}; terms at or beyond prec are dropped.
  static TruncSeries from_coeffs(const std::vector<T>& coeffs, int prec, int low = 0) {
    TruncSeries s(prec);
    s.low_ = low;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (low + static_cast<int>(i) < prec) s.c_.push_back(coeffs[i]);
    s.normalize();
    return s;
  }
  static TruncSeries constant(const T& a, int prec = kExact) { return monomial(a, 0, prec); }
  static TruncSeries monomial(const T& a, int e, int prec = kExact) {
    TruncSeries s(prec);
    if (e < prec && !field_is_zero(a)) {
      s.low_ = e;
      s.c_.push_back(a);
    }
    return s;
  }

  int prec() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }

  T coeff(int e) const {
    if (e >= prec_)
      throw DomainError("TruncationInsufficient", "coefficient of u^" + std::to_string(e) +
                                                      " requested, series known below u^" + std::to_string(prec_));
    if (e < low_ || e >= low_ + static_cast<int>(c_.size())) return T(0);
    return c_[e - low_];
  }

  // Smallest exponent with a nonzero coefficient; prec() if none is known.
  int valuation() const { return c_.empty() ? prec_ : low_; }
  // Largest exponent with a stored nonzero coefficient (valuation()-1 if none).
  int top() const { return low_ + static_cast<int>(c_.size()) - 1; }
  bool is_known_zero() const { return c_.empty(); }

  TruncSeries truncate(int p) const {
    TruncSeries s(std::min(p, prec_));
    s.low_ = low_;
    for (int e = low_; e <= top() && e < s.prec_; ++e) s.c_.push_back(c_[e - low_]);
    s.normalize();
    return s;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, false); }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, true); }
  TruncSeries operator-() const {
    TruncSeries s = *this;
    for (auto& x : s.c_) x = T(0) - x;
    return s;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int va = a.valuation(), vb = b.valuation();
    long long p = std::min<long long>(static_cast<long long>(va) + b.prec_, static_cast<long long>(vb) + a.prec_);
    int prec = static_cast<int>(std::min<long long>(p, kExact));
    TruncSeries s(prec);
    if (a.c_.empty() || b.c_.empty()) return s;
    int lo = va + vb;
    int hi = std::min(a.top() + b.top(), prec - 1);
    if (hi < lo) return s;
    s.low_ = lo;
    s.c_.assign(hi - lo + 1, T(0));
    for (int i = 0; i < static_cast<int>(a.c_.size()); ++i) {
      const T& x = a.c_[i];
      if (field_is_zero(x)) continue;
      for (int j = 0; j < static_cast<int>(b.c_.size()) && lo + i + j <= hi; ++j) {
        const T& y = b.c_[j];
        if (field_is_zero(y)) continue;
        s.c_[i + j] = s.c_[i + j] + x * y;
      }
    }
    s.normalize();
    return s;
  }
  friend TruncSeries operator*(const TruncSeries& a, const T& k) {
    TruncSeries s = a;
    for (auto& x : s.c_) x = x * k;
    s.normalize();
    return s;
  }
  // Multiply by u^k.
  TruncSeries shift(int k) const {
    TruncSeries s = *this;
    s.low_ += k;
    if (!exact()) s.prec_ += k;
    return s;
  }

  TruncSeries pow(unsigned n) const {
    TruncSeries result = constant(T(1));
    TruncSeries base = *this;
    while (n) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return result;
  }

  // Multiplicative inverse, returned with relative precision `rel` when the
  // series is exact (otherwise the precision follows from the input).
  TruncSeries inverse(int rel_exact = 32) const {
    if (c_.empty()) throw DomainError("TruncationInsufficient", "cannot invert a series with no known nonzero term");
    int v = low_;
    int rel = exact() ? rel_exact : prec_ - v;
    T inv0 = T(1) / c_[0];
    std::vector<T> b(rel, T(0));
    if (rel > 0) b[0] = inv0;
    for (int n = 1; n < rel; ++n) {
      T s(0);
      for (int k = 1; k <= n && k < static_cast<int>(c_.size()); ++k)
        if (!field_is_zero(c_[k])) s = s + c_[k] * b[n - k];
      b[n] = T(0) - s * inv0;
    }
    return from_coeffs(b, rel - v, -v);
  }

  std::string to_string(const std::string& var = "u") const {
    std::string out;
    for (int e = low_; e <= top(); ++e) {
      const T& x = c_[e - low_];
      if (field_is_zero(x)) continue;
      if (!out.empty()) out += " + ";
      out += "(" + field_to_string(x) + ")";
      if (e != 0) out += "*" + var + "^" + std::to_string(e);
    }
    if (out.empty()) out = "0";
    if (!exact()) out += " + O(" + var + "^" + std::to_string(prec_) + ")";
    return out;
  }

 private:
  static TruncSeries combine(const TruncSeries& a, const TruncSeries& b, bool subtract) {
    TruncSeries s(std::min(a.prec_, b.prec_));
    if (a.c_.empty() && b.c_.empty()) return s;
    int lo = std::min(a.c_.empty() ? b.low_ : a.low_, b.c_.empty() ? a.low_ : b.low_);
    int hi = std::min(std::max(a.top(), b.top()), s.prec_ - 1);
    if (hi < lo) return s;
    s.low_ = lo;
    s.c_.assign(hi - lo + 1, T(0));
    for (int e = lo; e <= hi; ++e) {
      T x = (e >= a.low_ && e <= a.top()) ? a.c_[e - a.low_] : T(0);
      T y = (e >= b.low_ && e <= b.top()) ? b.c_[e - b.low_] : T(0);
      s.c_[e - lo] = subtract ? T(x - y) : T(x + y);
    }
    s.normalize();
    return s;
  }
  void normalize() {
    std::size_t b = 0;
    while (b < c_.size() && field_is_zero(c_[b])) ++b;
    if (b == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    if (b) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(b));
      low_ += static_cast<int>(b);
    }
    while (!c_.empty() && field_is_zero(c_.back())) c_.pop_back();
  }

  int low_;
  int prec_;
  std::vector<T> c_;
};

// Evaluates a polynomial (coefficients in increasing degree) at a series.
template <class T>
TruncSeries<T> poly_at_series(const std::vector<T>& coeffs, const TruncSeries<T>& s) {
  TruncSeries<T> r = TruncSeries<T>::constant(T(0));
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) r = r * s + TruncSeries<T>::constant(coeffs[i]);
  return r;
}

}  // namespace plumbline
