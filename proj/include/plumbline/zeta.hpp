// Topological Poincaré series Z(t) = ∏_v (1 - t^{E*_v})^{δ_v - 2}, its
// truncated expansion, counting functions and periodic constants.
//
// Exponents are stored in the E*-basis: the tuple a means l' = Σ a_v E*_v.
// In that basis Z(t) is a tensor product of univariate series, so the
// coefficient of a is ∏_v c_v(a_v) with c_v the coefficients of
// (1 - s)^{δ_v - 2}.
#pragma once

#include <map>
#include <vector>

#include "plumbline/graph.hpp"

namespace plumbline {

struct ExpSeries {
  std::map<std::vector<long long>, Int> terms;  // nonzero coefficients only
  std::vector<long long> bound;                 // a_v <= bound_v for stored terms
};

// Coefficient of s^a in (1 - s)^{δ - 2}.
Int factor_coefficient(int degree, long long a);

ExpSeries expand_Z(const ResolutionGraph& g, const std::vector<long long>& bound);
// z(l'); zero outside S'.  Throws ExponentOutOfBound beyond the truncation,
// NotInDualLattice for l' ∉ L'.
Int coefficient(const ResolutionGraph& g, const ExpSeries& series, const RatCycle& lprime);
// Terms whose exponent cycle has class h (h given by any representative).
ExpSeries class_part(const ResolutionGraph& g, const ExpSeries& series, const RatCycle& h);

// Per-vertex caps: a_w >= cap_w forces Σ a E* >= l_target on the coordinates
// in `coords` (all vertices by default), so bound_w >= cap_w - 1 is enough.
std::vector<long long> coverage_caps(const ResolutionGraph& g, const IntCycle& l_target,
                                     const std::vector<int>& coords);
std::vector<long long> coverage_caps(const ResolutionGraph& g, const IntCycle& l_target);

// σ(l) = Σ of z(l̃) over class-0 exponents l̃ ∈ L with l̃ ≱ l, from a stored
// expansion (BoundInsufficient if the truncation does not cover the sum).
Int counting_sigma(const ResolutionGraph& g, const ExpSeries& series, const IntCycle& l_target);
// Counting over the I-reduced series: condition l̃|_I ≱ l|_I.
Int reduced_counting(const ResolutionGraph& g, const ExpSeries& series, const std::vector<int>& subset,
                     const IntCycle& l_target);

// The same counting functions evaluated without expanding the series: a
// dynamic program over E-coordinates x ∈ L ∩ S' on the tree, weighting x by
// ∏_v c_v(-(x, E_v)).  `subset` empty means all vertices (full counting).
Int counting_sigma_dp(const ResolutionGraph& g, const IntCycle& l_target);
Int reduced_counting_dp(const ResolutionGraph& g, const std::vector<int>& subset, const IntCycle& l_target);

struct PeriodicRow {
  long long n;
  Int sigma;
  Int chi;
  Int diff;  // σ(nl) - χ(nl)
  Int reduced_sigma;
};
struct PeriodicConstant {
  Int constant;
  long long stabilization_n;
  std::vector<PeriodicRow> table;
  long long window;  // number of trailing values required to agree
};
// l must be in L with E*-support I (a_v > 0 exactly on I).
PeriodicConstant periodic_constant(const ResolutionGraph& g, const IntCycle& l, long long n0, long long n1);

// E*-support of l (vertices v with (l, E_v) < 0); throws if l ∉ S'.
std::vector<int> dual_support(const ResolutionGraph& g, const IntCycle& l);
// Smallest k >= 1 with k·E*_v ∈ L.
long long dual_order(const ResolutionGraph& g, int v);

}  // namespace plumbline
