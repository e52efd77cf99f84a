#include <doctest.h>

#include <functional>
#include <random>

#include "oracles/pairing_oracle.hpp"
#include "oracles/random_seifert.hpp"
#include "plumbline/abel.hpp"
#include "plumbline/error.hpp"
#include "plumbline/seifert.hpp"

using namespace plumbline;
using namespace plumbline::testing;

namespace {

std::string error_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.name();
  }
  return "";
}

Poly c(int k) { return Poly::var(k); }

}  // namespace

TEST_CASE("delta polynomials: small cases") {
  std::vector<Q> cs{Q(5), Q(2), Q(7), Q(-3)};
  CHECK(delta_poly<Q>(1, 1, cs) == -2);
  CHECK(delta_poly<Q>(2, 1, cs) == -7);
  CHECK(delta_poly<Q>(2, 2, cs) == -2);  // -c1^2/2
  CHECK(delta_poly_symbolic(1, 1) == -c(1));
  CHECK(delta_poly_symbolic(2, 1) == -c(2));
  CHECK(delta_poly_symbolic(2, 2) == c(1) * c(1) * make_q(-1, 2));
  CHECK(delta_poly_symbolic(3, 2) == -(c(1) * c(2)));
  CHECK(error_name([&] { delta_poly<Q>(2, 3, cs); }) == "BadRange");
}

TEST_CASE("delta polynomials: closed form equals the determinant") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Poly> det = delta_poly_det(n);
    REQUIRE(det.size() == static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(det[i - 1] == delta_poly_symbolic(n, i));
    }
  }
  // Evaluating the symbolic closed form matches the numeric one.
  std::vector<Q> cs{Q(0), make_q(1, 2), Q(-3), make_q(2, 5), Q(4), Q(1), make_q(-1, 3)};
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) CHECK(delta_poly_symbolic(n, i).evaluate(cs) == delta_poly<Q>(n, i, cs));
}

TEST_CASE("det M(c) is a power of c1") {
  CHECK(det_Mc(1) == Poly(Q(1)));
  CHECK(det_Mc(2) == c(1));
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    CHECK(det_Mc(m) == c(1).pow(static_cast<unsigned>(m * (m - 1) / 2)));
  }
}

TEST_CASE("pairing: small cases") {
  ChartForm<Q> simple_pole{0, {Q(1)}, {}};
  CHECK(pairing_coord(simple_pole, Cut<Q>{{Q(2), Q(3)}, 1}) == 0);
  ChartForm<Q> one{1, {Q(1)}, {}};
  CHECK(pairing_coord(one, Cut<Q>{{Q(2), Q(3)}, 1}) == -3);
  CHECK(pairing_coord(one, Cut<Q>{{Q(2), Q(3)}, 2}) == -6);
  ChartForm<Q> pole{2, {Q(1)}, {{Q(2), 1}}};
  CHECK(error_name([&] { pairing_coord(pole, Cut<Q>{{Q(2), Q(1)}, 1}); }) == "PoleAtEvaluationPoint");
}

TEST_CASE("pairing agrees with the Laurent-coefficient oracle") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long long> ell_d(1, 5), deg_d(0, 4), poles_d(0, 3), mult_d(1, 3);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ChartForm<Q> form;
    form.ell = ell_d(rng);
    form.numerator = random_rationals(rng, static_cast<std::size_t>(deg_d(rng)) + 1);
    std::vector<Q> cut_c = random_rationals(rng, static_cast<std::size_t>(form.ell) + 1);
    bool polynomial = trial % 2 == 0;
    if (!polynomial) {
      std::vector<Q> ps = random_rationals(rng, static_cast<std::size_t>(poles_d(rng)) + 1, {cut_c[0]});
      for (const Q& p : ps) form.poles.emplace_back(p, mult_d(rng));
    }
    Cut<Q> cut{cut_c, 1};
    Q expected = polynomial ? pairing_oracle_polynomial(form.ell, form.numerator, cut_c)
                            : pairing_oracle_rational(form.ell, form.numerator, form.poles, cut_c);
    CAPTURE(trial);
    CHECK(pairing_coord(form, cut) == expected);
    if (polynomial) CHECK(pairing_oracle_rational(form.ell, form.numerator, {}, cut_c) == expected);
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("tangent coordinates are derivatives of the pairing") {
  std::mt19937_64 rng(77);
  const int t_var = 9;
  for (int trial = 0; trial < 20; ++trial) {
    long long ell = 1 + trial % 4;
    ChartForm<RatFunc> form;
    form.ell = ell;
    for (const Q& a : random_rationals(rng, 3)) form.numerator.push_back(RatFunc(a));
    std::vector<Q> cut_q = random_rationals(rng, static_cast<std::size_t>(ell) + 1);
    for (const Q& p : random_rationals(rng, 2, {cut_q[0]})) form.poles.emplace_back(RatFunc(p), 1);
    for (int o = 1; o <= ell + 1; ++o) {
      std::vector<RatFunc> path;
      for (const Q& x : cut_q) path.push_back(RatFunc(x));
      path[o - 1] = path[o - 1] + RatFunc::var(t_var);
      RatFunc along = pairing_coord(form, Cut<RatFunc>{path, 1});
      std::vector<Q> at_zero(t_var + 1, Q(0));
      Q derivative = along.derivative(t_var).evaluate(at_zero);
      std::vector<RatFunc> base;
      for (const Q& x : cut_q) base.push_back(RatFunc(x));
      Q tangent = tangent_coord(form, Cut<RatFunc>{base, 1}, o).evaluate(at_zero);
      CHECK(derivative == -tangent);
    }
  }
  // No pole along E (ℓ = -1): every residue coefficient vanishes.
  ChartForm<Q> regular{-1, {Q(1)}, {}};
  for (int o = 1; o <= 3; ++o) CHECK(tangent_coord(regular, Cut<Q>{{Q(1), Q(2)}, 1}, o) == 0);
  ChartForm<Q> one{1, {Q(1)}, {}};
  // Res = u^{-2}: only the u^{-2} coefficient is nonzero.
  CHECK(tangent_coord(one, Cut<Q>{{Q(0), Q(0)}, 1}, 1) == 0);
  CHECK(tangent_coord(one, Cut<Q>{{Q(0), Q(0)}, 1}, 2) == 1);
}

TEST_CASE("Abel map on the three-form example is a cone over a conic") {
  SeifertData sd = parse_seifert("b0=4 legs=8,1x8");
  std::vector<RatFunc> p;
  for (const Q& x : default_leg_points(sd)) p.push_back(RatFunc(x));
  auto forms = wh_chart_forms<RatFunc>(sd, p);
  REQUIRE(forms.size() == 3);
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(forms[n].ell == 1);
    CHECK(forms[n].numerator.size() == n + 1);
  }
  std::vector<RatFunc> jet{RatFunc::var(0), RatFunc::var(1)};
  auto x = abel_map_chart(forms, {Cut<RatFunc>{jet, 1}});
  CHECK(x[1] / x[0] == RatFunc::var(0));
  CHECK(x[2] / x[1] == RatFunc::var(0));
  CHECK(x[0] * x[2] == x[1] * x[1]);
  // X_1 = -c1 f(c0) with f = ∏ (v - j)^{-1}.
  RatFunc f(1);
  for (int j = 1; j <= 8; ++j) f = f / (RatFunc::var(0) - RatFunc(j));
  CHECK(x[0] == -(RatFunc::var(1) * f));

  // Additivity over disjoint cuts, and the empty divisor maps to 0.
  std::vector<Q> pq = default_leg_points(sd);
  auto qforms = wh_chart_forms<Q>(sd, pq);
  Cut<Q> a{{make_q(1, 2), Q(3)}, 1}, b{{make_q(-7, 3), Q(1)}, 1};
  auto xa = abel_map_chart(qforms, {a}), xb = abel_map_chart(qforms, {b}), xab = abel_map_chart(qforms, {a, b});
  for (std::size_t i = 0; i < 3; ++i) CHECK(xab[i] == xa[i] + xb[i]);
  for (const Q& v : abel_map_chart(qforms, {})) CHECK(v == 0);
}

TEST_CASE("residue constraint ranks: goldens") {
  SeifertData whsing = parse_seifert("b0=4 legs=8,1x8");
  auto jet = wh_jet_cut_system(whsing, default_leg_points(whsing), {make_q(1, 2), Q(3)});
  CHECK(jet.rank == 2);
  CHECK(jet.h1 == 1);
  CHECK(error_name([&] { wh_jet_cut_system(whsing, default_leg_points(whsing), {Q(2), Q(3)}); }) ==
        "PoleAtEvaluationPoint");

  SeifertData s445 = parse_seifert("b0=1 legs=5,1x4");
  auto p = default_leg_points(s445);
  auto one = wh_point_cuts_system(s445, p, {make_q(21, 2)});
  CHECK(one.rank == 3);
  CHECK(one.h1 == 1);
  CHECK(wh_point_cuts_system(s445, p, {make_q(21, 2), make_q(23, 2)}).rank == 4);
  CHECK(wh_point_cuts_system(s445, p, {make_q(21, 2), make_q(23, 2), make_q(25, 2)}).h1 == 0);

  ConstraintSystem<Q> empty = residue_constraint_system<Q>({}, {Cut<Q>{{Q(1)}, 1}});
  CHECK(empty.rank == 0);
  CHECK(empty.h1 == 0);
  CHECK(error_name([&] {
          residue_constraint_system<Q>(wh_chart_forms<Q>(s445, p), {Cut<Q>{{Q(7)}, 2}});
        }) == "HypothesisViolated");
}

TEST_CASE("residue constraint ranks against the closed forms") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    SeifertData sd = random_seifert(rng, 10);
    CAPTURE(format_seifert(sd));
    WhInvariants inv = wh_invariants(sd);
    std::vector<Q> p = default_leg_points(sd);
    // A random jet can be special; fail only if two independent draws disagree.
    auto jet_rank = [&] {
      return wh_jet_cut_system(sd, p, random_rationals(rng, static_cast<std::size_t>(inv.ell_max) + 1, p)).rank;
    };
    long long r = jet_rank();
    if (r != dim_im_central(sd)) r = jet_rank();
    CHECK(r == dim_im_central(sd));
    long long kmax = 0;
    for (long long l : inv.W) kmax = std::max(kmax, inv.n.at(l) + 2);
    for (long long k = 1; k <= kmax; ++k) {
      long long expect = 0;
      for (long long l : inv.W) expect += std::min(inv.n.at(l) + 1, k);
      auto pts_rank = [&] {
        return wh_point_cuts_system(sd, p, random_rationals(rng, static_cast<std::size_t>(k), p)).rank;
      };
      long long rk = pts_rank();
      if (rk != expect) rk = pts_rank();
      CHECK(rk == expect);
      CHECK(h1_central(sd, k) == inv.pg - expect);
    }
    for (int j = 0; j < static_cast<int>(sd.legs.size()); ++j)
      CHECK(wh_end_chart_system(sd, j, p).h1 == h1_end(sd, j).value);
  }
}
