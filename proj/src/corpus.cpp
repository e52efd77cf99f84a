#include "plumbline/corpus.hpp"

#include <sstream>

#include "plumbline/error.hpp"

namespace plumbline {

namespace {

std::string minus_two_tree(const std::vector<std::pair<int, int>>& edges, int n) {
  std::ostringstream out;
  for (int i = 1; i <= n; ++i) out << "vertex e" << i << " -2\n";
  for (const auto& [a, b] : edges) out << "edge e" << a << " e" << b << "\n";
  return out.str();
}

std::vector<std::pair<int, int>> chain_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

CorpusEntry star_entry(const std::string& name, const std::string& description, const std::string& seifert,
                       CorpusEntry::Kind kind) {
  SeifertData sd = parse_seifert(seifert);
  return {name, description, format_graph(graph_from_seifert(sd)), sd, kind};
}

std::vector<CorpusEntry> build() {
  using K = CorpusEntry::Kind;
  std::vector<CorpusEntry> out;
  out.push_back({"ex-dimim",
                 "chain (-2)-(-1)-(-7)-(-2) with a (-3) on the (-1); numerically Gorenstein elliptic",
                 "# v4 is the end vertex E_v with E*_v = Z_min\n"
                 "vertex v1 -2\nvertex v2 -1\nvertex v3 -7\nvertex v4 -2\nvertex v5 -3\n"
                 "edge v1 v2\nedge v2 v3\nedge v3 v4\nedge v2 v5\n",
                 std::nullopt, K::Elliptic});
  const std::string g1 =
      "vertex a -3\nvertex b -1\nvertex v -13\nvertex c -1\nvertex d -3\nvertex b2 -2\nvertex c2 -2\n";
  const std::string g1_edges = "edge a b\nedge b v\nedge v c\nedge c d\nedge b b2\nedge c c2\n";
  out.push_back({"ex-notclosed-g1", "(-3)-(-1)-(-13)-(-1)-(-3) with a (-2) on each (-1)", g1 + g1_edges,
                 std::nullopt, K::Example});
  out.push_back({"ex-notclosed-g2", "ex-notclosed-g1 with an extra (-2) on the (-13)",
                 g1 + "vertex v2 -2\n" + g1_edges + "edge v v2\n", std::nullopt, K::Example});
  out.push_back({"ex-nonfibration", "chain (-2)-(-1)-(-8)-(-2) with a (-3) on the (-1); elliptic",
                 "vertex a -2\nvertex b -1\nvertex E1 -8\nvertex E2 -2\nvertex c -3\n"
                 "edge a b\nedge b E1\nedge E1 E2\nedge b c\n",
                 std::nullopt, K::Elliptic});
  out.push_back(star_entry("ex-445", "star: (-1) centre with four (-5) legs, p_g = 4", "b0=1 legs=5,1x4", K::Example));
  out.push_back(star_entry("ex-whsing", "star: (-4) centre with eight (-8) legs, p_g = 3", "b0=4 legs=8,1x8",
                           K::Example));
  out.push_back(star_entry("ell-2-3-7", "star (1; (2,1),(3,1),(7,1)), minimally elliptic", "b0=1 legs=2,1;3,1;7,1",
                           K::Elliptic));
  out.push_back(star_entry("ell-5-5-5", "star (1; (5,1)x3), minimally elliptic", "b0=1 legs=5,1x3", K::Elliptic));
  for (int n = 1; n <= 6; ++n)
    out.push_back({"A" + std::to_string(n), "A_" + std::to_string(n) + " chain of (-2)-curves", graph_text_A(n),
                   std::nullopt, K::Rational});
  for (int n = 4; n <= 7; ++n)
    out.push_back({"D" + std::to_string(n), "D_" + std::to_string(n) + " tree of (-2)-curves", graph_text_D(n),
                   std::nullopt, K::Rational});
  for (int n = 6; n <= 8; ++n)
    out.push_back({"E" + std::to_string(n), "E_" + std::to_string(n) + " tree of (-2)-curves", graph_text_E(n),
                   std::nullopt, K::Rational});
  for (auto& e : out) parse_graph(e.graph_text);  // every entry must validate
  return out;
}

bool parse_suffix(const std::string& name, char head, int& n) {
  if (name.size() < 2 || name[0] != head) return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return false;
  if (name.size() > 4) return false;
  n = std::stoi(name.substr(1));
  return true;
}

}  // namespace

std::string graph_text_A(int n) {
  if (n < 1) throw DomainError("BadRange", "A_n needs n >= 1");
  return minus_two_tree(chain_edges(n), n);
}

std::string graph_text_D(int n) {
  if (n < 4) throw DomainError("BadRange", "D_n needs n >= 4");
  // Chain e1..e_{n-1} with e_n attached to e_{n-2}.
  auto e = chain_edges(n - 1);
  e.emplace_back(n - 2, n);
  return minus_two_tree(e, n);
}

std::string graph_text_E(int n) {
  if (n < 6 || n > 8) throw DomainError("BadRange", "E_n needs n in {6, 7, 8}");
  // Chain e1..e_{n-1} with e_n attached to e3.
  auto e = chain_edges(n - 1);
  e.emplace_back(3, n);
  return minus_two_tree(e, n);
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& e : corpus_entries()) names.push_back(e.name);
  return names;
}

CorpusEntry corpus_entry(const std::string& name) {
  for (const auto& e : corpus_entries())
    if (e.name == name) return e;
  int n = 0;
  if (parse_suffix(name, 'A', n) && n >= 1)
    return {name, "A_n chain of (-2)-curves", graph_text_A(n), std::nullopt, CorpusEntry::Kind::Rational};
  if (parse_suffix(name, 'D', n) && n >= 4)
    return {name, "D_n tree of (-2)-curves", graph_text_D(n), std::nullopt, CorpusEntry::Kind::Rational};
  throw DomainError("UnknownCorpusEntry", "no corpus graph named '" + name + "'");
}

ResolutionGraph corpus_graph(const std::string& name) { return parse_graph(corpus_entry(name).graph_text); }

}  // namespace plumbline
