// Weighted-homogeneous (star-shaped) graphs: Seifert data, Hirzebruch–Jung
// continued fractions, Pinkham's p_g, the form basis and the h^1 formulas.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "plumbline/graph.hpp"

namespace plumbline {

struct Leg {
  long long alpha;
  long long omega;
  bool operator==(const Leg&) const = default;
};

struct SeifertData {
  long long b0 = 0;
  std::vector<Leg> legs;
  bool operator==(const SeifertData&) const = default;
};

// Parses "b0=4 legs=8,1x8" or "b0=1 legs=2,1;3,1;7,1" (";" separates legs,
// "x<count>" repeats a leg).
SeifertData parse_seifert(const std::string& text);
std::string format_seifert(const SeifertData& sd);

// Negative continued fraction α/ω = b1 - 1/(b2 - ...), all b_i >= 2.
std::vector<long long> cont_frac(long long alpha, long long omega);  // NotCoprime, BadRange
std::pair<long long, long long> cf_eval(const std::vector<long long>& b);  // BadRange

// Throws NotCoprime / BadRange on invalid legs.
void validate_seifert(const SeifertData& sd);
Q orbifold_euler(const SeifertData& sd);  // e = -b0 + Σ ω_j/α_j

// Central vertex "v0"; leg j (1-based) is "v<j>" when it has one vertex and
// "v<j>_<i>" (i = 1 next to the centre) otherwise.
ResolutionGraph graph_from_seifert(const SeifertData& sd);

struct StarStructure {
  int center = -1;
  std::vector<std::vector<int>> legs;  // vertex indices from the centre outwards
};
StarStructure star_structure(const ResolutionGraph& g);  // NotStarShaped
SeifertData seifert_from_graph(const ResolutionGraph& g);

struct OmegaPrimeTau {
  std::vector<long long> omega_prime;
  std::vector<long long> tau;
};
OmegaPrimeTau omega_prime_tau(const SeifertData& sd);

struct WhInvariants {
  std::vector<long long> omega_prime;
  std::vector<long long> tau;
  std::vector<long long> W;         // increasing
  std::map<long long, long long> n; // n_ℓ for 0 <= ℓ <= ell_max
  long long pg = 0;
  long long ell_max = 0;
  Q e;
};
long long n_ell(const SeifertData& sd, long long ell);
WhInvariants wh_invariants(const SeifertData& sd);  // requires e < 0

long long h1_central(const SeifertData& sd, long long k);

struct H1End {
  long long value;            // p_g minus the number of relations
  long long relations;        // #{ℓ ∈ W : α_j | ω_jℓ - 1, τ_jℓ - ω'_j m_j + ω'_j - 1 < 0}
  long long printed_formula;  // Σ_{ℓ∈W} n_ℓ · #{...}, evaluated literally for comparison
  std::vector<long long> relation_ells;
};
H1End h1_end(const SeifertData& sd, int leg);  // leg is 0-based

struct SRecursion {
  std::map<long long, long long> s;  // s(ℓ) for 0 <= ℓ <= ell_max + 1
  long long s0 = 0;
};
SRecursion s_recursion(const SeifertData& sd);

long long h1_generic_central(const SeifertData& sd);  // s(0)
long long dim_im_central(const SeifertData& sd);      // p_g - s(0)
bool is_dominant_central(const SeifertData& sd);       // s(0) == 0

// dim V(I) on the star graph of sd: p_g minus the p_g of the components of
// 𝒱 \ I; strings contribute 0, star-shaped components use Pinkham.
long long dim_V_wh(const SeifertData& sd, const std::vector<int>& subset);

struct WhForm {
  long long ell;
  long long n;
  std::vector<long long> m;  // m_j = ⌈ω_j ℓ / α_j⌉
};
std::vector<WhForm> wh_form_basis(const SeifertData& sd);
// Default leg parameters p_j = 1, 2, ..., ν.
std::vector<Q> default_leg_points(const SeifertData& sd);

}  // namespace plumbline
