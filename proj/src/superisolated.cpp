#include "plumbline/superisolated.hpp"

#include <algorithm>

namespace plumbline {

namespace {

long long binom2(long long n) { return n * (n - 1) / 2; }  // C(n, 2)

QI qi_pow(const QI& x, int e) {
  QI r(1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

void require_degree(int d) {
  if (d < 3) throw DomainError("BadRange", "superisolated degree d must be >= 3");
}

}  // namespace

long long si_pg(int d) {
  require_degree(d);
  long long D = d;
  return D * (D - 1) * (D - 2) / 6;
}

long long si_dim_im_generic(int d, long long k) {
  require_degree(d);
  if (k < 0) throw DomainError("BadRange", "k must be >= 0");
  long long s = 0;
  for (int j = 0; j <= d - 3; ++j) s += std::min(k, binom2(j + 2));
  return s;
}

long long si_first_dominant(int d) {
  require_degree(d);
  return binom2(d - 1);
}

bool si_on_curve(int d, const PlanePoint& p) { return qi_pow(p.second, d - 1) == qi_pow(p.first, d); }

PlanePoint si_param_point(int d, const QI& t) { return {qi_pow(t, d - 1), qi_pow(t, d)}; }

void validate_instance(const SiInstance& inst) {
  require_degree(inst.d);
  for (std::size_t a = 0; a < inst.points.size(); ++a) {
    const PlanePoint& p = inst.points[a];
    if (!si_on_curve(inst.d, p)) throw DomainError("HypothesisViolated", "point does not lie on v^{d-1} = u^d");
    if (field_is_zero(p.first) && field_is_zero(p.second))
      throw DomainError("HypothesisViolated", "the cusp (0, 0) is not a smooth point of the curve");
    for (std::size_t b = a + 1; b < inst.points.size(); ++b)
      if (inst.points[b] == p) throw DomainError("HypothesisViolated", "points must be pairwise distinct");
  }
}

long long monomial_eval_rank(const std::vector<PlanePoint>& points, int j) {
  if (j < 0) throw DomainError("BadRange", "degree j must be >= 0");
  Matrix<QI> m;
  for (const auto& [u, v] : points) {
    std::vector<QI> row;
    for (int deg = 0; deg <= j; ++deg)
      for (int a = deg; a >= 0; --a) row.push_back(qi_pow(u, a) * qi_pow(v, deg - a));
    m.push_back(row);
  }
  return rank_field(m);
}

SiBlockAnalysis si_block_analysis(const SiInstance& inst) {
  validate_instance(inst);
  long long k = static_cast<long long>(inst.points.size());
  SiBlockAnalysis out;
  std::vector<int> bad;
  for (int j = 0; j <= inst.d - 3; ++j) {
    long long r = monomial_eval_rank(inst.points, j);
    long long g = std::min(k, binom2(j + 2));
    out.block_rank.push_back(r);
    out.block_generic.push_back(g);
    out.dim_im += r;
    if (r < g) bad.push_back(j);
  }
  if (bad.empty()) return out;
  int j0 = bad.front();
  if (bad.size() > 1 || k < binom2(j0 + 1) || k > binom2(j0 + 3))
    throw DomainError("HypothesisViolated",
                      "more than one degenerate block, or k outside C(j0+1,2) <= k <= C(j0+3,2); "
                      "the diagonal blocks do not determine the rank");
  out.degenerate_block = j0;
  out.drop = out.block_generic[j0] - out.block_rank[j0];
  return out;
}

long long si_dim_im_points(const SiInstance& inst) { return si_block_analysis(inst).dim_im; }

SiInstance si_generic_instance(int d, long long k) {
  require_degree(d);
  if (k < 0) throw DomainError("BadRange", "k must be >= 0");
  for (long long shift = 0; shift < 64; ++shift) {
    SiInstance inst;
    inst.d = d;
    for (long long t = 1; t <= k; ++t) inst.points.push_back(si_param_point(d, QI(make_q(t + shift))));
    bool full = true;
    for (int j = 0; j <= d - 3 && full; ++j)
      full = monomial_eval_rank(inst.points, j) == std::min(k, binom2(j + 2));
    if (full) {
      inst.note = "t = " + std::to_string(1 + shift) + ".." + std::to_string(k + shift);
      if (shift) inst.note += " (re-sampled " + std::to_string(shift) + " times)";
      return inst;
    }
  }
  throw DomainError("HypothesisViolated", "no generic configuration found among small parameters");
}

SiInstance si_collinear_instance(int d) {
  if (d != 5) throw DomainError("BadRange", "the collinear construction is provided for d = 5");
  SiInstance inst;
  inst.d = d;
  for (const QI& t : {QI(1), QI(-1), QI::i_unit()}) inst.points.push_back(si_param_point(d, t));
  inst.note = "t = 1, -1, i: collinear on u = 1";
  return inst;
}

SiInstance si_conic_instance(int d) {
  if (d != 5) throw DomainError("BadRange", "the conic construction is provided for d = 5");
  SiInstance inst;
  inst.d = d;
  QI two(2);
  for (const QI& t : {QI(1), QI(-1), QI::i_unit(), two, QI(-2), two * QI::i_unit()})
    inst.points.push_back(si_param_point(d, t));
  inst.note = "t = 1, -1, i, 2, -2, 2i: on the conic (u - 1)(u - 16) = 0";
  return inst;
}

std::vector<std::vector<int>> si_monomials(int d) {
  require_degree(d);
  std::vector<std::vector<int>> out;
  for (int deg = 0; deg <= d - 3; ++deg)
    for (int a = deg; a >= 0; --a)
      for (int b = deg - a; b >= 0; --b) out.push_back({a, b, deg - a - b});
  return out;
}

ConstraintSystem<QI> si_constraint_system(const SiInstance& inst, int truncation) {
  validate_instance(inst);
  using S = TruncSeries<QI>;
  const int d = inst.d;
  const int N = truncation < 0 ? d - 2 : truncation;
  auto monos = si_monomials(d);
  std::vector<std::vector<S>> along;
  std::vector<int> order;
  for (const auto& [u0, v0] : inst.points) {
    // Line through the point in direction (1, 0), or (0, 1) when u0 = 0;
    // both are transversal to C at a smooth point with that coordinate nonzero.
    QI du = field_is_zero(u0) ? QI(0) : QI(1);
    QI dv = field_is_zero(u0) ? QI(1) : QI(0);
    S s = S::monomial(QI(1), 1);
    S us = S::constant(u0) + s * du;
    S vs = S::constant(v0) + s * dv;
    S w = vs.pow(static_cast<unsigned>(d - 1)) - us.pow(static_cast<unsigned>(d));
    QI c1 = w.coeff(1);
    if (!field_is_zero(w.coeff(0))) throw DomainError("HypothesisViolated", "point is not on the curve");
    if (field_is_zero(c1)) throw DomainError("HypothesisViolated", "cut is tangent to the curve");
    std::vector<QI> wc;
    for (int e = 0; e <= d; ++e) wc.push_back(w.coeff(e));
    // Reverse t = w(s): fixed-point iteration s <- s - (w(s) - t)/c1 gains one
    // order per step.
    S t = S::monomial(QI(1), 1, N);
    QI inv_c1 = QI(1) / c1;
    S st = (t * inv_c1).truncate(N);
    for (int it = 0; it < N + 1; ++it) st = (st - (poly_at_series(wc, st) - t) * inv_c1).truncate(N);
    S ut = S::constant(u0) + st * du;
    S vt = S::constant(v0) + st * dv;
    std::vector<S> row;
    for (const auto& m : monos) row.push_back((ut.pow(m[0]) * vt.pow(m[1])).shift(m[0] + m[1] + m[2]));
    along.push_back(std::move(row));
    order.push_back(d - 2);
  }
  return order_vanishing_system<QI>(along, order, monos.size());
}

}  // namespace plumbline
