// Small exact fields used by the chart computations: Q itself and the
// Gaussian rationals Q(i) (needed for curve points such as (1, ±i) on
// v^4 = u^5, whose collinear triples have no rational representatives).
#pragma once

#include <string>

#include "plumbline/error.hpp"
#include "plumbline/rational.hpp"

namespace plumbline {

inline bool field_is_zero(const Q& x) { return sgn(x) == 0; }
inline std::string field_to_string(const Q& x) { return to_string(x); }

struct QI {
  Q re, im;
  QI() : re(0), im(0) {}
  QI(const Q& r) : re(r), im(0) {}  // NOLINT: implicit embedding Q -> Q(i)
  QI(int r) : re(r), im(0) {}       // NOLINT
  QI(const Q& r, const Q& i) : re(r), im(i) {}
  static QI i_unit() { return QI(Q(0), Q(1)); }

  friend QI operator+(const QI& a, const QI& b) { return QI(Q(a.re + b.re), Q(a.im + b.im)); }
  friend QI operator-(const QI& a, const QI& b) { return QI(Q(a.re - b.re), Q(a.im - b.im)); }
  friend QI operator-(const QI& a) { return QI(Q(-a.re), Q(-a.im)); }
  friend QI operator*(const QI& a, const QI& b) {
    return QI(Q(a.re * b.re - a.im * b.im), Q(a.re * b.im + a.im * b.re));
  }
  friend QI operator/(const QI& a, const QI& b) {
    Q n = b.re * b.re + b.im * b.im;
    if (sgn(n) == 0) throw DomainError("DivisionByZero", "division by zero in Q(i)");
    return QI(Q((a.re * b.re + a.im * b.im) / n), Q((a.im * b.re - a.re * b.im) / n));
  }
  QI& operator+=(const QI& b) { return *this = *this + b; }
  QI& operator-=(const QI& b) { return *this = *this - b; }
  QI& operator*=(const QI& b) { return *this = *this * b; }
  friend bool operator==(const QI& a, const QI& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const QI& a, const QI& b) { return !(a == b); }
};

inline bool field_is_zero(const QI& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }
inline std::string field_to_string(const QI& x) {
  if (sgn(x.im) == 0) return to_string(x.re);
  std::string im = (x.im == 1) ? "i" : (x.im == -1 ? "-i" : to_string(x.im) + "i");
  if (sgn(x.re) == 0) return im;
  return to_string(x.re) + (sgn(x.im) > 0 ? "+" : "") + im;
}

}  // namespace plumbline
