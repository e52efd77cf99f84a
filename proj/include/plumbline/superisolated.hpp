// Superisolated germs F_d - x_3^{d+1} whose tangent cone is the rational
// cuspidal curve C = {y^{d-1} z = x^d}: image dimensions of c^{-kE_0^*}
// from monomial-evaluation ranks at points of C, and the full
// order-of-vanishing system along transversal cuts.
//
// Points are affine points (u, v) of the chart z = 1, where C reads
// v^{d-1} = u^d; coordinates live in Q(i) so that special configurations
// (e.g. the collinear points (1, 1), (1, -1), (1, i) for d = 5) are exact.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plumbline/abel.hpp"
#include "plumbline/field.hpp"

namespace plumbline {

using PlanePoint = std::pair<QI, QI>;

struct SiInstance {
  int d = 0;
  std::vector<PlanePoint> points;
  std::string note;  // how the points were chosen (re-sampling is recorded here)
};

long long si_pg(int d);                              // d(d-1)(d-2)/6; BadRange for d < 3
long long si_dim_im_generic(int d, long long k);     // Σ_{j=0}^{d-3} min{k, C(j+2,2)}
long long si_first_dominant(int d);                  // C(d-1, 2)

bool si_on_curve(int d, const PlanePoint& p);
PlanePoint si_param_point(int d, const QI& t);       // (t^{d-1}, t^d)
// Throws HypothesisViolated unless the points are distinct smooth points of C.
void validate_instance(const SiInstance& inst);

// Points at t = 1, 2, ..., k (shifted upwards until every diagonal block has
// full rank, which the note records).
SiInstance si_generic_instance(int d, long long k);
// d = 5: the three collinear points t = 1, -1, i on the line u = 1.
SiInstance si_collinear_instance(int d);
// d = 5: six points on the reducible conic (u - 1)(u - 16) = 0, t = ±1, i, ±2, 2i.
SiInstance si_conic_instance(int d);

// Rank of the k × C(j+2,2) matrix of (u,v)-monomials of degree <= j at the points.
long long monomial_eval_rank(const std::vector<PlanePoint>& points, int j);

struct SiBlockAnalysis {
  std::vector<long long> block_rank;     // rank of the diagonal block j
  std::vector<long long> block_generic;  // min{k, C(j+2,2)}
  long long dim_im = 0;
  int degenerate_block = -1;             // j0, or -1 if none
  long long drop = 0;                    // Δ
};
// Diagonal-block reading of the order-of-vanishing system; valid for generic
// points or exactly one degenerate block j0 with C(j0+1,2) <= k <= C(j0+3,2).
// Otherwise throws HypothesisViolated (use si_constraint_system).
SiBlockAnalysis si_block_analysis(const SiInstance& inst);
long long si_dim_im_points(const SiInstance& inst);

// The (d-2)k × p_g system ord_t(Σ a_m x^m∘γ_i) >= d-2 for transversal line
// cuts through the points, lifted to X' = {w = F_d(u, v, 1)} and
// reparametrised by t = w.  `truncation` is the t-precision of the cut
// parametrisations (default d - 2); a smaller value raises TruncationInsufficient.
ConstraintSystem<QI> si_constraint_system(const SiInstance& inst, int truncation = -1);

// Degree-lex list of exponent triples (m1, m2, m3) with |m| <= d - 3.
std::vector<std::vector<int>> si_monomials(int d);

}  // namespace plumbline
