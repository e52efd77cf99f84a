// Lattice algorithms: Laufer sequences, integer quadratic minimisation over
// boxes and orthants, dominance / vanishing predicates, generic h^1, cohomology
// cycles and dim V(I) bookkeeping.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plumbline/graph.hpp"

namespace plumbline {

// ---------------------------------------------------------------------------
// Integer quadratic minimisation engine.
//
// Minimises F(l) = l^T A l + beta^T l over the integer box 0 <= l <= upper,
// where A is symmetric positive definite.  Two implementations are provided:
// a depth-first search with branch pruning (the production path) and a plain
// exhaustive enumeration (the test oracle).  Both report every minimiser
// through a count and the coordinatewise meet.

struct QuadForm {
  Matrix<long long> a;
  std::vector<long long> beta;
  int size() const { return static_cast<int>(a.size()); }
};

struct BoxMinimum {
  bool found = false;  // false only if the search space was empty
  Int value;           // min F
  IntCycle meet;       // coordinatewise min of all minimisers
  Int count;           // number of minimisers
  unsigned long long nodes = 0;
};

// `skip_zero` excludes l = 0 from the search (used for "for all l > 0" tests).
BoxMinimum minimize_box_pruned(const QuadForm& f, const IntCycle& upper, bool skip_zero = false);
BoxMinimum minimize_box_exhaustive(const QuadForm& f, const IntCycle& upper, bool skip_zero = false);
Int evaluate(const QuadForm& f, const IntCycle& l);

// Rational lower bound 0 < lambda <= smallest eigenvalue of the positive
// definite matrix A.
Q eigenvalue_lower_bound(const Matrix<long long>& a);

// Box radius R such that every l >= 0 with F(l) <= 0 satisfies l_v <= R.
long long orthant_radius(const QuadForm& f);
long long orthant_radius(const QuadForm& f, const Q& lambda);  // with a known bound λ

// ---------------------------------------------------------------------------
// Lattice operations.

struct MinimizationResult {
  Q min_value;               // min χ(-l' + l)
  IntCycle minimal_minimizer;  // meet of all minimisers (attains the minimum)
  Int minimizer_count;
  IntCycle search_bound;     // upper corner of the enumerated box
};

IntCycle laufer_zmin(const ResolutionGraph& g);
Int h1_zmin(const ResolutionGraph& g);
bool is_rational_graph(const ResolutionGraph& g);    // Artin: χ(Z_min) = 1
bool is_elliptic_graph(const ResolutionGraph& g);    // χ(Z_min) = 0 and min χ on L_{>0} = 0

struct LauferStep {
  int vertex;    // E_v added at this step
  Q chi_after;   // χ of the cycle after the step
};
struct LauferReduction {
  RatCycle s;                   // s(x) = x + l ∈ S'
  IntCycle l;                   // l >= 0
  std::vector<LauferStep> trace;
  Q chi_start;                  // χ(x)
  Q chi_end;                    // χ(s(x))
};
// Generalised Laufer sequence from x ∈ L'.  With x = -l' the bookkeeping
// χ(-l'+l) - χ(-l') is chi_end - chi_start.
LauferReduction laufer_reduce(const ResolutionGraph& g, const RatCycle& x);

// min of χ(-l'+l) over 0 <= l <= Z (Z > 0, effective) and over L_{>=0}.
MinimizationResult min_chi_box(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z);
MinimizationResult min_chi_orthant(const ResolutionGraph& g, const RatCycle& lprime);
// Same searches through the exhaustive oracle (box volume must be modest).
MinimizationResult min_chi_box_exhaustive(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z);

// χ(-l') < χ(-l'+l) for all 0 < l <= Z.  Throws EcaEmpty unless -l' ∈ S'.
bool is_dominant(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z);
Int generic_h1(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z);
Int generic_h0(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z);
// Generic h^1 of the line bundle on the whole resolution: χ(-l') - min over L_{>=0}.
Int generic_h1_orthant(const ResolutionGraph& g, const RatCycle& lprime);

// x ∈ S'_dom  ⇔  χ(l) > (x, l) for all l > 0.
bool in_sdom(const ResolutionGraph& g, const RatCycle& x);
// x ∈ Van'  ⇔  χ(x) <= χ(x + l) for all l >= 0.
bool in_van(const ResolutionGraph& g, const RatCycle& x);
// Minimal l >= 0 with -l' + l ∈ S'_dom, by the fixed-component computation
// sequence of the generic line bundle (each step decided by generic h^1 values).
IntCycle l_dom(const ResolutionGraph& g, const RatCycle& lprime);
// The same by enumerating S'_dom members below a seed and taking their meet
// (test oracle; the seed box can be very large).
IntCycle l_dom_exhaustive(const ResolutionGraph& g, const RatCycle& lprime);

// Cohomology cycles: the minimal minimiser of χ(-l'+l) on the box / orthant.
IntCycle z_coh(const ResolutionGraph& g, const IntCycle& z, const RatCycle& lprime);
IntCycle z_coh_orthant(const ResolutionGraph& g, const RatCycle& lprime);

// dim V(I) = p_g - Σ p_g(components of 𝒱 \ I).  Components that are strings
// or rational (Artin's criterion) contribute 0 automatically; every other
// component needs an entry in `pg_components` (indexed like components_of_complement).
std::vector<std::vector<int>> components_of_complement(const ResolutionGraph& g, const std::vector<int>& subset);
long long dim_V(const ResolutionGraph& g, const std::vector<int>& subset, long long pg_full,
                const std::vector<std::optional<long long>>& pg_components);
// The identity dim V = h^1(O_Z) - h^1(O_{Z|𝒱\I}) for Z >> 0, with both inputs supplied.
long long dim_V_from_h1(long long h1_z, long long h1_z_restricted);

// Vertices v with E_v not in the support of Z_coh(Z, l').
std::vector<int> spt_generators(const ResolutionGraph& g, const IntCycle& z, const RatCycle& lprime);

struct H1Bounds {
  Int lower;
  Int upper;
  Int h1_oz;            // the h^1(O_Z) used (supplied or generic)
  Q h0_zero_bound;      // -χ(Z): bound valid when h^0(Z, L) = 0
};
// Requires -l' ∈ S' (EcaEmpty otherwise).
H1Bounds h1_bounds(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z,
                   std::optional<long long> h1_oz = std::nullopt);

// Helpers shared with other modules.
bool is_effective_nonzero(const IntCycle& z);
bool leq(const IntCycle& a, const IntCycle& b);
IntCycle meet(const IntCycle& a, const IntCycle& b);
RatCycle meet(const RatCycle& a, const RatCycle& b);

}  // namespace plumbline
