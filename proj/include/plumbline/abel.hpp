// Local-chart Abel map: δ-polynomials, the pairing of a cut v = c(u) with a
// form f(v)/u^{ℓ+1} dv∧du, Leray-residue pole parts, and the exact linear
// systems whose ranks give dim im(c^{l'}) and h^1.
//
// Global constants of the pairing (2πi factors, the nonzero λ of the tangent
// formula, the du∧dv versus dv∧du orientation) are dropped throughout; all
// conclusions drawn from these values are scale invariant.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plumbline/error.hpp"
#include "plumbline/field.hpp"
#include "plumbline/linalg.hpp"
#include "plumbline/poly.hpp"
#include "plumbline/seifert.hpp"
#include "plumbline/series.hpp"

namespace plumbline {

// ω = f(v) u^{-ℓ-1} dv∧du with f = N(v) · ∏_j (v - p_j)^{-m_j}.
template <class F>
struct ChartForm {
  long long ell = 0;
  std::vector<F> numerator;                      // N, increasing degree
  std::vector<std::pair<F, long long>> poles;    // (p_j, m_j)
};

// Transversal cut v = c_0 + c_1 u + c_2 u^2 + ... with multiplicity `mult`.
template <class F>
struct Cut {
  std::vector<F> c;
  long long mult = 1;
};

// ---------------------------------------------------------------- series helpers

// Taylor coefficients D_k = f^{(k)}(c0)/k!, 0 <= k < order.
template <class F>
std::vector<F> taylor_at(const ChartForm<F>& form, const F& c0, int order) {
  using S = TruncSeries<F>;
  if (order <= 0) return {};
  // s = v - c0
  S s = S::monomial(F(1), 1);
  S shifted = S::constant(c0) + s;
  S f = poly_at_series(form.numerator, shifted).truncate(order);
  for (const auto& [p, m] : form.poles) {
    if (m == 0) continue;
    F base0 = c0 - p;
    S base = S::constant(base0) + s;
    if (m < 0) {
      f = (f * base.pow(static_cast<unsigned>(-m))).truncate(order);
      continue;
    }
    if (field_is_zero(base0))
      throw DomainError("PoleAtEvaluationPoint", "the form has a pole at the cut's centre c0");
    S inv = base.inverse(order);
    f = (f * inv.pow(static_cast<unsigned>(m))).truncate(order);
  }
  std::vector<F> d(order, F(0));
  for (int k = 0; k < order; ++k) d[k] = f.coeff(k);
  return d;
}

template <class F>
TruncSeries<F> cut_series(const Cut<F>& cut) {
  return TruncSeries<F>::from_coeffs(cut.c, TruncSeries<F>::kExact);
}

// f(c(u)) modulo u^order.
template <class F>
TruncSeries<F> along_cut(const ChartForm<F>& form, const Cut<F>& cut, int order) {
  if (order <= 0) return TruncSeries<F>(0);
  F c0 = cut.c.empty() ? F(0) : cut.c[0];
  std::vector<F> d = taylor_at(form, c0, order);
  std::vector<F> tail = cut.c;
  if (!tail.empty()) tail[0] = F(0);
  TruncSeries<F> w = TruncSeries<F>::from_coeffs(tail, TruncSeries<F>::kExact);
  return poly_at_series(d, w.truncate(order)).truncate(order);
}

// ---------------------------------------------------------------- δ-polynomials

// δ_{n,i}(c) = -(1/i) [u^n] (c_1 u + c_2 u^2 + ...)^i; c[0] is ignored.
template <class F>
F delta_poly(int n, int i, const std::vector<F>& c) {
  if (n < 1 || i < 1 || i > n) throw DomainError("BadRange", "delta_poly needs 1 <= i <= n");
  std::vector<F> tail(static_cast<std::size_t>(n) + 1, F(0));
  for (int k = 1; k <= n && k < static_cast<int>(c.size()); ++k) tail[k] = c[k];
  TruncSeries<F> C = TruncSeries<F>::from_coeffs(tail, n + 1);
  return C.pow(static_cast<unsigned>(i)).coeff(n) * F(make_q(-1, i));
}

// Symbolic δ_{n,i} in the variables c_1..c_n (Poly variable k is c_k).
Poly delta_poly_symbolic(int n, int i);
// δ_{n,1..n} read off the Hessenberg determinant: with w = 1/(v - c_0) as
// Poly variable 0, δ_n = -(1/n) det(...) = Σ_i δ_{n,i} w^i.
std::vector<Poly> delta_poly_det(int n);

// ---------------------------------------------------------------- pairing

// Σ_{i=1}^{ℓ} δ_{ℓ,i}(c) · f^{(i-1)}(c_0)/(i-1)!, times the cut multiplicity.
// Regular forms (ℓ <= 0) pair to 0.
template <class F>
F pairing_coord(const ChartForm<F>& form, const Cut<F>& cut) {
  long long ell = form.ell;
  if (ell <= 0) return F(0);
  F c0 = cut.c.empty() ? F(0) : cut.c[0];
  std::vector<F> d = taylor_at(form, c0, static_cast<int>(ell));
  F total(0);
  for (int i = 1; i <= ell; ++i) {
    if (field_is_zero(d[i - 1])) continue;
    total = total + delta_poly<F>(static_cast<int>(ell), i, cut.c) * d[i - 1];
  }
  return total * F(make_q(cut.mult));
}

// Coordinates of the chart Abel map (additive over the cuts of a divisor).
template <class F>
std::vector<F> abel_map_chart(const std::vector<ChartForm<F>>& forms, const std::vector<Cut<F>>& cuts) {
  std::vector<F> x(forms.size(), F(0));
  for (const auto& cut : cuts)
    for (std::size_t a = 0; a < forms.size(); ++a) x[a] = x[a] + pairing_coord(forms[a], cut);
  return x;
}

// Coefficient of u^{-o} in the Leray residue (ω/dv)|_{v=c(u)}, i.e.
// [u^{ℓ+1-o}] f(c(u)).  Along the path c_{o-1} -> c_{o-1} + t one has
// d/dt pairing_coord = -tangent_coord (the sign is the dropped constant).
template <class F>
F tangent_coord(const ChartForm<F>& form, const Cut<F>& cut, int o) {
  if (o < 1) throw DomainError("BadRange", "pole order o must be >= 1");
  long long e = form.ell + 1 - o;
  if (e < 0) return F(0);
  return along_cut(form, cut, static_cast<int>(e) + 1).coeff(static_cast<int>(e));
}

// ---------------------------------------------------------------- constraint systems

template <class F>
struct ConstraintSystem {
  Matrix<F> matrix;                 // one row per (cut, pole order / t-power)
  std::vector<std::string> row_labels;
  long long rank = 0;
  long long h1 = 0;                 // number of forms minus rank
};

template <class F>
long long rank_field(const Matrix<F>& m) {
  return static_cast<long long>(rank_of(m, [](const F& x) { return field_is_zero(x); }));
}

// Pole-freeness of Res_{D_i}(Σ a_α ω_α) for every cut: rows are the
// coefficients of u^{-o}, o = 1..max ℓ + 1, at each cut.
template <class F>
ConstraintSystem<F> residue_constraint_system(const std::vector<ChartForm<F>>& forms, const std::vector<Cut<F>>& cuts) {
  ConstraintSystem<F> sys;
  long long top = -1;
  for (const auto& f : forms) top = std::max(top, f.ell);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i].mult != 1)
      throw DomainError("HypothesisViolated", "residue constraints are implemented for reduced cuts (multiplicity 1)");
    if (cuts[i].c.empty()) throw DomainError("InconsistentTruncation", "cut without a centre");
    for (long long o = 1; o <= top + 1; ++o) {
      std::vector<F> row;
      bool nonzero = false;
      for (const auto& f : forms) {
        row.push_back(tangent_coord(f, cuts[i], static_cast<int>(o)));
        nonzero = nonzero || !field_is_zero(row.back());
      }
      if (!nonzero) continue;
      sys.matrix.push_back(std::move(row));
      sys.row_labels.push_back("cut" + std::to_string(i + 1) + ":u^-" + std::to_string(o));
    }
  }
  sys.rank = rank_field(sys.matrix);
  sys.h1 = static_cast<long long>(forms.size()) - sys.rank;
  return sys;
}

// Gorenstein-type conditions ord_t(Σ a_α g_α∘γ_i) >= order_i: `along[i][α]`
// is the series g_α(γ_i(t)); rows are the coefficients of t^0..t^{order_i-1}.
template <class F>
ConstraintSystem<F> order_vanishing_system(const std::vector<std::vector<TruncSeries<F>>>& along,
                                           const std::vector<int>& order, std::size_t num_functions) {
  if (along.size() != order.size()) throw DomainError("InconsistentTruncation", "one vanishing order per cut");
  ConstraintSystem<F> sys;
  for (std::size_t i = 0; i < along.size(); ++i) {
    if (along[i].size() != num_functions) throw DomainError("InconsistentTruncation", "function count mismatch");
    for (int e = 0; e < order[i]; ++e) {
      std::vector<F> row;
      for (const auto& s : along[i]) row.push_back(s.coeff(e));  // TruncationInsufficient if too short
      sys.matrix.push_back(std::move(row));
      sys.row_labels.push_back("cut" + std::to_string(i + 1) + ":t^" + std::to_string(e));
    }
  }
  sys.rank = rank_field(sys.matrix);
  sys.h1 = static_cast<long long>(num_functions) - sys.rank;
  return sys;
}

// det M(c), M's n-th column the first m coefficients of (Σ_{k>=0} c_k u^k)^{n-1};
// Poly variable k is c_k.
Poly det_Mc(int m);

// ---------------------------------------------------------------- star-shaped charts

// The basis forms ω_{ℓ,n} in the central chart U_0: f = v^n ∏_j (v - p_j)^{-m_j}.
template <class F>
std::vector<ChartForm<F>> wh_chart_forms(const SeifertData& sd, const std::vector<F>& p) {
  if (p.size() != sd.legs.size()) throw DomainError("BadRange", "one leg parameter p_j per leg");
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (field_is_zero(p[a] - p[b])) throw DomainError("BadRange", "leg parameters p_j must be distinct");
  std::vector<ChartForm<F>> out;
  for (const WhForm& w : wh_form_basis(sd)) {
    ChartForm<F> f;
    f.ell = w.ell;
    f.numerator.assign(static_cast<std::size_t>(w.n) + 1, F(0));
    f.numerator[w.n] = F(1);
    for (std::size_t j = 0; j < p.size(); ++j) f.poles.emplace_back(p[j], w.m[j]);
    out.push_back(std::move(f));
  }
  return out;
}

// One transversal jet cut v = c_0 + c_1 u + ... at a point of E_{v0}.
ConstraintSystem<Q> wh_jet_cut_system(const SeifertData& sd, const std::vector<Q>& p, const std::vector<Q>& jet);
// k central orbit cuts v = q_r.
ConstraintSystem<Q> wh_point_cuts_system(const SeifertData& sd, const std::vector<Q>& p, const std::vector<Q>& q);
// The special orbit of leg j (0-based) in the end chart U_{j,s_j}: residues of
// the transformed forms along {v = 0}.
ConstraintSystem<Q> wh_end_chart_system(const SeifertData& sd, int leg, const std::vector<Q>& p);

}  // namespace plumbline
