#include "plumbline/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "plumbline/error.hpp"

namespace plumbline {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long long parse_ll(const std::string& s, const std::string& what) {
  Q q = parse_rational(s);
  if (!is_integer(q)) throw DomainError("ParseError", what + " must be an integer, got '" + s + "'");
  return to_ll(q.get_num());
}

}  // namespace

ResolutionGraph::ResolutionGraph(std::vector<std::string> ids, std::vector<long long> euler,
                                 const std::vector<std::pair<std::string, std::string>>& edges)
    : ids_(std::move(ids)), euler_(std::move(euler)) {
  if (ids_.empty()) throw DomainError("ParseError", "graph has no vertices");
  if (ids_.size() != euler_.size()) throw DomainError("ParseError", "euler list length mismatch");
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) throw DomainError("DuplicateVertex", "vertex '" + ids_[i] + "' declared twice");
  }
  int n = size();
  adj_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    int i = index_of(a), j = index_of(b);
    if (i == j) throw DomainError("NotATree", "self-loop at '" + a + "'");
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second) throw DomainError("NotATree", "repeated edge " + a + "-" + b);
    edges_.emplace_back(i, j);
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  if (static_cast<int>(edges_.size()) != n - 1)
    throw DomainError("NotATree", std::to_string(edges_.size()) + " edges on " + std::to_string(n) + " vertices");
  // Connectivity (with |E| = |V| - 1 this is equivalent to being a tree).
  std::vector<bool> vis(n, false);
  std::vector<int> stack{0};
  vis[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!vis[w]) {
        vis[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n) throw DomainError("NotATree", "graph is disconnected");

  m_.assign(n, std::vector<long long>(n, 0));
  for (int v = 0; v < n; ++v) m_[v][v] = euler_[v];
  for (auto [i, j] : edges_) m_[i][j] = m_[j][i] = 1;

  // -M is positive definite iff all leading principal minors are positive.
  Matrix<Int> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = make_int(-m_[i][j]);
  std::vector<Int> minors;
  det_ = bareiss_leading_minors(a, minors);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    if (minors[k] <= 0)
      throw DomainError("NotNegativeDefinite",
                        "leading principal minor " + std::to_string(k + 1) + " of -M is " + minors[k].get_str());
  }

  Matrix<Q> aq(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) aq[i][j] = Q(a[i][j]);
  Matrix<Q> inv = inverse_q(aq);
  dual_.assign(n, RatCycle(n));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) dual_[v][w] = inv[w][v];

  // (Z_K, E_w) = e_w + 2 and (E*_v, E_w) = -δ_vw  ⇒  Z_K = -Σ (e_v + 2) E*_v.
  zk_.assign(n, Q(0));
  for (int v = 0; v < n; ++v) {
    Q c = -make_q(euler_[v] + 2);
    if (c == 0) continue;
    for (int w = 0; w < n; ++w) zk_[w] += c * dual_[v][w];
  }
}

int ResolutionGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("ParseError", "unknown vertex '" + id + "'");
  return it->second;
}

ResolutionGraph parse_graph(const std::string& text) {
  std::vector<std::string> ids;
  std::vector<long long> euler;
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::string> declared;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    std::string where = " (line " + std::to_string(lineno) + ")";
    if (tok[0] == "vertex") {
      if (tok.size() < 3 || tok.size() > 4) throw DomainError("ParseError", "expected 'vertex <id> <euler> [genus]'" + where);
      if (!declared.insert(tok[1]).second) throw DomainError("DuplicateVertex", "vertex '" + tok[1] + "' declared twice" + where);
      if (tok.size() == 4) {
        std::string gs = tok[3];
        for (const char* prefix : {"genus=", "g="})
          if (gs.rfind(prefix, 0) == 0) gs = gs.substr(std::string(prefix).size());
        if (parse_ll(gs, "genus") != 0) throw DomainError("GenusNonzero", "vertex '" + tok[1] + "' has genus " + gs + where);
      }
      ids.push_back(tok[1]);
      euler.push_back(parse_ll(tok[2], "euler number"));
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw DomainError("ParseError", "expected 'edge <id> <id>'" + where);
      edges.emplace_back(tok[1], tok[2]);
    } else if (tok[0] == "genus") {
      if (tok.size() != 3) throw DomainError("ParseError", "expected 'genus <id> <g>'" + where);
      if (parse_ll(tok[2], "genus") != 0) throw DomainError("GenusNonzero", "vertex '" + tok[1] + "' has genus " + tok[2] + where);
    } else {
      throw DomainError("ParseError", "unknown directive '" + tok[0] + "'" + where);
    }
  }
  return ResolutionGraph(std::move(ids), std::move(euler), edges);
}

std::string format_graph(const ResolutionGraph& g) {
  std::ostringstream os;
  for (int v = 0; v < g.size(); ++v) os << "vertex " << g.id(v) << " " << g.euler(v) << "\n";
  for (auto [i, j] : g.edges()) os << "edge " << g.id(i) << " " << g.id(j) << "\n";
  return os.str();
}

std::string to_dot(const ResolutionGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.size(); ++v) os << "  \"" << g.id(v) << "\" [label=\"" << g.id(v) << " (" << g.euler(v) << ")\"];\n";
  for (auto [i, j] : g.edges()) os << "  \"" << g.id(i) << "\" -- \"" << g.id(j) << "\";\n";
  os << "}\n";
  return os.str();
}

Q pairing_e(const ResolutionGraph& g, const RatCycle& x, int v) {
  Q r = make_q(g.euler(v)) * x[v];
  for (int w : g.neighbors(v)) r += x[w];
  return r;
}

long long pairing_e(const ResolutionGraph& g, const IntCycle& x, int v) {
  long long r = g.euler(v) * x[v];
  for (int w : g.neighbors(v)) r += x[w];
  return r;
}

Q pairing(const ResolutionGraph& g, const RatCycle& x, const RatCycle& y) {
  if (static_cast<int>(x.size()) != g.size() || static_cast<int>(y.size()) != g.size())
    throw DomainError("ParseError", "cycle length does not match vertex count");
  Q r = 0;
  for (int v = 0; v < g.size(); ++v)
    if (y[v] != 0) r += pairing_e(g, x, v) * y[v];
  return r;
}

Int pairing_int(const ResolutionGraph& g, const IntCycle& x, const IntCycle& y) {
  Int r = 0;
  for (int v = 0; v < g.size(); ++v) {
    Int t = make_int(g.euler(v)) * make_int(x[v]);
    for (int w : g.neighbors(v)) t += make_int(x[w]);
    r += t * make_int(y[v]);
  }
  return r;
}

const std::vector<RatCycle>& dual_base(const ResolutionGraph& g) { return g.dual_base(); }
Int discriminant(const ResolutionGraph& g) { return g.det(); }
const RatCycle& canonical_cycle(const ResolutionGraph& g) { return g.canonical(); }

Q chi(const ResolutionGraph& g, const RatCycle& x) {
  return -pairing(g, x, sub(x, g.canonical())) / 2;
}

Int chi(const ResolutionGraph& g, const IntCycle& x) {
  Q c = chi(g, to_rat(x));
  return c.get_num();  // integral on L by adjunction
}

bool in_dual_lattice(const ResolutionGraph& g, const RatCycle& x) {
  for (int v = 0; v < g.size(); ++v)
    if (!is_integer(pairing_e(g, x, v))) return false;
  return true;
}

RatCycle class_rep(const ResolutionGraph& g, const RatCycle& x) {
  if (!in_dual_lattice(g, x)) throw DomainError("NotInDualLattice", "cycle " + format_cycle(x) + " is not in L'");
  RatCycle r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - Q(floor_q(x[i]));
  return r;
}

bool in_lipman_cone(const ResolutionGraph& g, const RatCycle& x) {
  for (int v = 0; v < g.size(); ++v)
    if (pairing_e(g, x, v) > 0) return false;
  return true;
}

bool eca_nonempty(const ResolutionGraph& g, const RatCycle& lprime) { return in_lipman_cone(g, neg(lprime)); }

RatCycle zero_cycle(const ResolutionGraph& g) { return RatCycle(g.size(), Q(0)); }

RatCycle basis_cycle(const ResolutionGraph& g, int v) {
  RatCycle r = zero_cycle(g);
  r[v] = 1;
  return r;
}

RatCycle add(const RatCycle& x, const RatCycle& y) {
  RatCycle r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

RatCycle sub(const RatCycle& x, const RatCycle& y) {
  RatCycle r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

RatCycle scale(const Q& c, const RatCycle& x) {
  RatCycle r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

RatCycle neg(const RatCycle& x) { return scale(Q(-1), x); }

RatCycle dual_coords(const ResolutionGraph& g, const RatCycle& x) {
  RatCycle a(g.size());
  for (int v = 0; v < g.size(); ++v) a[v] = -pairing_e(g, x, v);
  return a;
}

RatCycle from_dual_coords(const ResolutionGraph& g, const RatCycle& a) {
  RatCycle r = zero_cycle(g);
  for (int v = 0; v < g.size(); ++v)
    if (a[v] != 0) r = add(r, scale(a[v], g.dual_base()[v]));
  return r;
}

ResolutionGraph induced_subgraph(const ResolutionGraph& g, const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  std::vector<std::string> ids;
  std::vector<long long> eu;
  std::set<int> in(vs.begin(), vs.end());
  for (int v : vs) {
    ids.push_back(g.id(v));
    eu.push_back(g.euler(v));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [i, j] : g.edges())
    if (in.count(i) && in.count(j)) edges.emplace_back(g.id(i), g.id(j));
  return ResolutionGraph(std::move(ids), std::move(eu), edges);
}

std::vector<std::vector<int>> components(const ResolutionGraph& g, const std::vector<int>& vertices) {
  std::vector<int> mark(g.size(), 0);  // 0 = excluded, 1 = unvisited, 2 = visited
  for (int v : vertices) mark[v] = 1;
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.size(); ++s) {
    if (mark[s] != 1) continue;
    std::vector<int> comp, stack{s};
    mark[s] = 2;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (mark[w] == 1) {
          mark[w] = 2;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

RatCycle parse_cycle(const ResolutionGraph& g, const std::string& text_in) {
  std::string text;
  for (char c : text_in)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text == "0") return zero_cycle(g);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  // ';' is accepted as a separator too, matching the "(3,6,1,1;2)" notation.
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  RatCycle r = zero_cycle(g);
  bool keyed = text.find('=') != std::string::npos;
  if (keyed) {
    for (const auto& p : parts) {
      if (p.empty()) continue;
      auto eq = p.find('=');
      if (eq == std::string::npos) throw DomainError("ParseError", "expected id=value in '" + p + "'");
      r[g.index_of(p.substr(0, eq))] = parse_rational(p.substr(eq + 1));
    }
    return r;
  }
  if (static_cast<int>(parts.size()) != g.size())
    throw DomainError("ParseError", "cycle has " + std::to_string(parts.size()) + " coordinates, graph has " +
                                        std::to_string(g.size()) + " vertices");
  for (int v = 0; v < g.size(); ++v) r[v] = parse_rational(parts[v]);
  return r;
}

std::string format_cycle(const RatCycle& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += to_string(x[i]);
  }
  return s + ")";
}

std::string format_cycle(const IntCycle& x) { return format_cycle(to_rat(x)); }

}  // namespace plumbline
