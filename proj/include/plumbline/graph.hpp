// Resolution graphs (decorated trees, genus 0) and the lattice they define.
//
// A graph is validated on construction: it must be a tree and its
// intersection matrix M (M_vv = e_v, M_vw = 1 on edges) must be negative
// definite.  Cached exact data (E*, det(-M), Z_K) is computed once.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plumbline/linalg.hpp"
#include "plumbline/rational.hpp"

namespace plumbline {

class ResolutionGraph {
 public:
  ResolutionGraph() = default;
  // Validates and throws DomainError (DuplicateVertex, NotATree,
  // NotNegativeDefinite, ParseError for unknown vertex ids).
  ResolutionGraph(std::vector<std::string> ids, std::vector<long long> euler,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int v) const { return ids_[v]; }
  int index_of(const std::string& id) const;  // throws ParseError if unknown
  bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }

  long long euler(int v) const { return euler_[v]; }
  const std::vector<long long>& euler_numbers() const { return euler_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Intersection matrix M and A = -M.
  const Matrix<long long>& intersection_matrix() const { return m_; }
  long long a(int v, int w) const { return -m_[v][w]; }

  // Cached lattice data.
  const std::vector<RatCycle>& dual_base() const { return dual_; }
  const Int& det() const { return det_; }
  const RatCycle& canonical() const { return zk_; }

 private:
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<long long> euler_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  Matrix<long long> m_;
  std::vector<RatCycle> dual_;
  Int det_;
  RatCycle zk_;
};

// Graph file format: `vertex <id> <euler> [genus]`, `edge <id> <id>`, `#` comments.
ResolutionGraph parse_graph(const std::string& text);
std::string format_graph(const ResolutionGraph& g);
std::string to_dot(const ResolutionGraph& g);

// Intersection numbers.
Q pairing(const ResolutionGraph& g, const RatCycle& x, const RatCycle& y);
Q pairing_e(const ResolutionGraph& g, const RatCycle& x, int v);  // (x, E_v)
long long pairing_e(const ResolutionGraph& g, const IntCycle& x, int v);
Int pairing_int(const ResolutionGraph& g, const IntCycle& x, const IntCycle& y);

const std::vector<RatCycle>& dual_base(const ResolutionGraph& g);
Int discriminant(const ResolutionGraph& g);
const RatCycle& canonical_cycle(const ResolutionGraph& g);

Q chi(const ResolutionGraph& g, const RatCycle& x);
Int chi(const ResolutionGraph& g, const IntCycle& x);

bool in_dual_lattice(const ResolutionGraph& g, const RatCycle& x);
RatCycle class_rep(const ResolutionGraph& g, const RatCycle& x);  // NotInDualLattice
bool in_lipman_cone(const ResolutionGraph& g, const RatCycle& x);
// ECa^{l'}(Z) is nonempty iff l' ∈ -S'.
bool eca_nonempty(const ResolutionGraph& g, const RatCycle& lprime);

// Cycle helpers.
RatCycle zero_cycle(const ResolutionGraph& g);
RatCycle basis_cycle(const ResolutionGraph& g, int v);  // E_v
RatCycle add(const RatCycle& x, const RatCycle& y);
RatCycle sub(const RatCycle& x, const RatCycle& y);
RatCycle scale(const Q& c, const RatCycle& x);
RatCycle neg(const RatCycle& x);
// E*-coordinates a with x = Σ a_v E*_v, i.e. a_v = -(x, E_v).
RatCycle dual_coords(const ResolutionGraph& g, const RatCycle& x);
RatCycle from_dual_coords(const ResolutionGraph& g, const RatCycle& a);

// Induced subgraph on `vertices` (kept in graph order) and the connected
// components of the induced subgraph on a vertex subset.
ResolutionGraph induced_subgraph(const ResolutionGraph& g, const std::vector<int>& vertices);
std::vector<std::vector<int>> components(const ResolutionGraph& g, const std::vector<int>& vertices);

// Cycle text formats: "(a,b,c,...)" in graph order, or "id=value,id=value".
RatCycle parse_cycle(const ResolutionGraph& g, const std::string& text);
std::string format_cycle(const RatCycle& x);
std::string format_cycle(const IntCycle& x);

}  // namespace plumbline
