#include "plumbline/abel.hpp"

namespace plumbline {

Poly delta_poly_symbolic(int n, int i) {
  std::vector<Poly> c(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) c[k] = Poly::var(k);
  return delta_poly<Poly>(n, i, c);
}

std::vector<Poly> delta_poly_det(int n) {
  if (n < 1) throw DomainError("BadRange", "delta_poly_det needs n >= 1");
  Poly w = Poly::var(0);
  Matrix<Poly> m(n, std::vector<Poly>(n));
  for (int r = 0; r < n; ++r) {
    m[r][0] = Poly::var(r + 1) * w * make_q(r + 1);
    for (int j = 1; j < n; ++j) {
      if (r >= j)
        m[r][j] = Poly::var(r - j + 1) * w;
      else if (j == r + 1)
        m[r][j] = Poly(Q(-1));
    }
  }
  Poly det = det_division_free(m, Poly(), Poly(Q(1))) * make_q(-1, n);
  std::vector<Poly> out;
  for (int i = 1; i <= n; ++i) out.push_back(det.coefficient_of(0, i));
  return out;
}

Poly det_Mc(int m) {
  if (m < 1) throw DomainError("BadRange", "det_Mc needs m >= 1");
  using S = TruncSeries<Poly>;
  std::vector<Poly> c;
  for (int k = 0; k < m; ++k) c.push_back(Poly::var(k));
  S base = S::from_coeffs(c, m);
  Matrix<Poly> mat(m, std::vector<Poly>(m));
  S power = S::constant(Poly(Q(1)), m);
  for (int col = 0; col < m; ++col) {
    for (int row = 0; row < m; ++row) mat[row][col] = power.coeff(row);
    power = (power * base).truncate(m);
  }
  return det_division_free(mat, Poly(), Poly(Q(1)));
}

ConstraintSystem<Q> wh_jet_cut_system(const SeifertData& sd, const std::vector<Q>& p, const std::vector<Q>& jet) {
  auto forms = wh_chart_forms<Q>(sd, p);
  return residue_constraint_system<Q>(forms, {Cut<Q>{jet, 1}});
}

ConstraintSystem<Q> wh_point_cuts_system(const SeifertData& sd, const std::vector<Q>& p, const std::vector<Q>& q) {
  auto forms = wh_chart_forms<Q>(sd, p);
  std::vector<Cut<Q>> cuts;
  for (std::size_t a = 0; a < q.size(); ++a) {
    for (std::size_t b = a + 1; b < q.size(); ++b)
      if (q[a] == q[b]) throw DomainError("BadRange", "orbit cuts must be at distinct points");
    cuts.push_back(Cut<Q>{{q[a]}, 1});
  }
  return residue_constraint_system<Q>(forms, cuts);
}

ConstraintSystem<Q> wh_end_chart_system(const SeifertData& sd, int leg, const std::vector<Q>& p) {
  WhInvariants inv = wh_invariants(sd);
  if (leg < 0 || leg >= static_cast<int>(sd.legs.size())) throw DomainError("BadRange", "leg index out of range");
  if (p.size() != sd.legs.size()) throw DomainError("BadRange", "one leg parameter p_j per leg");
  const Leg& L = sd.legs[leg];
  long long wp = inv.omega_prime[leg], tau = inv.tau[leg];
  std::vector<WhForm> basis = wh_form_basis(sd);
  // In U_{j,s_j} (coordinates u, v with E_{j,s_j} = {u = 0} and the special
  // orbit {v = 0}) the form ω_{ℓ,n} reads
  //   u^A v^B (s + p_j)^n ∏_{j' != j} (s + p_j - p_{j'})^{-m_{j'}} dv∧du,  s = u^{ω'} v^α,
  // with A = τℓ - ω'm_j + ω' - 1 and B = ωℓ - αm_j + α - 1 >= 0.  Its residue
  // along {v = 0} vanishes when B > 0 and equals u^A p_j^n ∏ (p_j - p_{j'})^{-m_{j'}}
  // when B = 0.
  std::vector<long long> a_exp(basis.size());
  std::vector<Q> coeff(basis.size());
  long long max_pole = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const WhForm& w = basis[k];
    long long mj = w.m[leg];
    long long A = tau * w.ell - wp * mj + wp - 1;
    long long B = L.omega * w.ell - L.alpha * mj + L.alpha - 1;
    if (B < 0) throw DomainError("HypothesisViolated", "form is not regular off the exceptional set");
    a_exp[k] = A;
    if (B > 0) {
      coeff[k] = 0;
      continue;
    }
    Q c = 1;
    for (long long e = 0; e < w.n; ++e) c *= p[leg];
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (static_cast<int>(j) == leg) continue;
      Q d = p[leg] - p[j];
      long long mm = w.m[j];
      for (long long e = 0; e < (mm < 0 ? -mm : mm); ++e) c = (mm > 0) ? Q(c / d) : Q(c * d);
    }
    coeff[k] = c;
    if (A < 0 && sgn(c) != 0) max_pole = std::max(max_pole, -A);
  }
  ConstraintSystem<Q> sys;
  for (long long o = 1; o <= max_pole; ++o) {
    std::vector<Q> row(basis.size(), Q(0));
    bool nonzero = false;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (a_exp[k] == -o && sgn(coeff[k]) != 0) {
        row[k] = coeff[k];
        nonzero = true;
      }
    if (!nonzero) continue;
    sys.matrix.push_back(row);
    sys.row_labels.push_back("end" + std::to_string(leg + 1) + ":u^-" + std::to_string(o));
  }
  sys.rank = rank_field(sys.matrix);
  sys.h1 = static_cast<long long>(basis.size()) - sys.rank;
  return sys;
}

}  // namespace plumbline
