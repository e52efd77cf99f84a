#include <doctest.h>

#include <functional>
#include <random>

#include "plumbline/corpus.hpp"
#include "plumbline/error.hpp"
#include "plumbline/graph.hpp"
#include "plumbline/json_io.hpp"

using namespace plumbline;

namespace {

std::string error_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.name();
  }
  return "";
}

RatCycle random_cycle(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long long> num(-12, 12), den(1, 6);
  RatCycle x(n);
  for (auto& c : x) c = make_q(num(rng), den(rng));
  return x;
}

}  // namespace

TEST_CASE("parse_graph: valid inputs") {
  ResolutionGraph single = parse_graph("vertex a -2\n");
  CHECK(single.size() == 1);
  CHECK(single.edges().empty());

  ResolutionGraph g = corpus_graph("ex-dimim");
  CHECK(g.size() == 5);
  CHECK(g.edges().size() == 4);
  CHECK(g.degree(g.index_of("v2")) == 3);
  CHECK(g.euler(g.index_of("v3")) == -7);

  // Comments, blank lines and an explicit genus 0 are accepted.
  ResolutionGraph h = parse_graph("# chain\nvertex x -2 0\n\nvertex y -3 genus=0  # end\nedge x y\n");
  CHECK(h.size() == 2);
}

TEST_CASE("parse_graph: error names") {
  CHECK(error_name([] { parse_graph("vertex a -1\nvertex b -1\nedge a b\n"); }) == "NotNegativeDefinite");
  CHECK(error_name([] { parse_graph("vertex a -2\nvertex b -2\n"); }) == "NotATree");
  CHECK(error_name([] { parse_graph("vertex a -2\nvertex b -2\nvertex c -2\nedge a b\nedge b c\nedge c a\n"); }) ==
        "NotATree");
  CHECK(error_name([] { parse_graph("vertex a -2\nvertex a -3\n"); }) == "DuplicateVertex");
  CHECK(error_name([] { parse_graph("vertex a -2 1\n"); }) == "GenusNonzero");
  CHECK(error_name([] { parse_graph("vertex a -2\ngenus a 2\n"); }) == "GenusNonzero");
  CHECK(error_name([] { parse_graph("vertex a -2\nedge a b\n"); }) == "ParseError");
  CHECK(error_name([] { parse_graph("vertex a x\n"); }) == "ParseError");
  CHECK(error_name([] { parse_graph("vertex a 0\n"); }) == "NotNegativeDefinite");
}

TEST_CASE("pairing and dual base") {
  ResolutionGraph g = corpus_graph("ex-dimim");
  for (int v = 0; v < g.size(); ++v) CHECK(pairing(g, basis_cycle(g, v), basis_cycle(g, v)) == make_q(g.euler(v)));
  IntCycle zmin{3, 6, 1, 1, 2};
  CHECK(pairing_int(g, zmin, zmin) == -1);
  CHECK(dual_base(g)[g.index_of("v4")] == to_rat(zmin));

  ResolutionGraph single = parse_graph("vertex a -2\n");
  CHECK(dual_base(single)[0] == RatCycle{make_q(1, 2)});
  ResolutionGraph a2 = corpus_graph("A2");
  CHECK(dual_base(a2)[0] == RatCycle{make_q(2, 3), make_q(1, 3)});
}

TEST_CASE("discriminant") {
  CHECK(discriminant(parse_graph("vertex a -2\n")) == 2);
  CHECK(discriminant(corpus_graph("A2")) == 3);
  CHECK(discriminant(corpus_graph("ex-445")) == 125);
  CHECK(discriminant(corpus_graph("ex-whsing")) == Int("50331648"));  // 8^8 · 3
  CHECK(discriminant(corpus_graph("E8")) == 1);
  CHECK(discriminant(corpus_graph("D4")) == 4);
}

TEST_CASE("canonical cycle and chi") {
  CHECK(canonical_cycle(parse_graph("vertex a -2\n")) == RatCycle{Q(0)});
  CHECK(canonical_cycle(parse_graph("vertex a -3\n")) == RatCycle{make_q(1, 3)});
  ResolutionGraph g = corpus_graph("ex-dimim");
  CHECK(canonical_cycle(g) == RatCycle{4, 8, 2, 1, 3});
  CHECK(chi(g, zero_cycle(g)) == 0);
  CHECK(chi(g, canonical_cycle(g)) == 0);
  CHECK(chi(g, IntCycle{3, 6, 1, 1, 2}) == 0);
  ResolutionGraph w = corpus_graph("ex-whsing");
  CHECK(canonical_cycle(w)[0] == make_q(8, 3));
  CHECK(canonical_cycle(w)[1] == make_q(13, 12));
}

TEST_CASE("class representatives and the Lipman cone") {
  ResolutionGraph single = parse_graph("vertex a -2\n");
  RatCycle estar = dual_base(single)[0];
  CHECK(class_rep(single, estar) == RatCycle{make_q(1, 2)});
  CHECK(class_rep(single, neg(estar)) == RatCycle{make_q(1, 2)});
  CHECK(class_rep(single, RatCycle{Q(3)}) == RatCycle{Q(0)});
  CHECK(error_name([&] { class_rep(single, RatCycle{make_q(1, 3)}); }) == "NotInDualLattice");

  CHECK(in_lipman_cone(single, zero_cycle(single)));
  CHECK(in_lipman_cone(single, estar));
  CHECK_FALSE(in_lipman_cone(single, RatCycle{Q(-1)}));
  CHECK(eca_nonempty(single, neg(estar)));
  CHECK_FALSE(eca_nonempty(single, estar));
}

TEST_CASE("graph-core invariants on the corpus") {
  std::mt19937_64 rng(11);
  for (const auto& entry : corpus_entries()) {
    CAPTURE(entry.name);
    ResolutionGraph g = parse_graph(entry.graph_text);
    const auto& E = dual_base(g);
    Int det = discriminant(g);
    for (int v = 0; v < g.size(); ++v) {
      for (int w = 0; w < g.size(); ++w) CHECK(pairing_e(g, E[v], w) == (v == w ? -1 : 0));
      for (const Q& c : E[v]) {
        CHECK(c > 0);
        CHECK(is_integer(c * Q(det)));
      }
    }
    const RatCycle& zk = canonical_cycle(g);
    for (int v = 0; v < g.size(); ++v) CHECK(pairing_e(g, zk, v) == make_q(g.euler(v) + 2));
    for (int trial = 0; trial < 10; ++trial) {
      RatCycle a = random_cycle(rng, g.size()), b = random_cycle(rng, g.size());
      CHECK(chi(g, add(a, b)) == chi(g, a) + chi(g, b) - pairing(g, a, b));
      CHECK(chi(g, sub(zk, a)) == chi(g, a));
    }
    // Text and JSON round trips.
    ResolutionGraph again = parse_graph(format_graph(g));
    CHECK(again.ids() == g.ids());
    CHECK(again.intersection_matrix() == g.intersection_matrix());
    ResolutionGraph from_json = graph_from_json(Json::parse(graph_json(g).dump()));
    CHECK(from_json.intersection_matrix() == g.intersection_matrix());
  }
}

TEST_CASE("cycle text and JSON formats") {
  ResolutionGraph g = corpus_graph("ex-dimim");
  RatCycle z = parse_cycle(g, "(3,6,1,1,2)");
  CHECK(z == RatCycle{3, 6, 1, 1, 2});
  CHECK(parse_cycle(g, "v2=6, v1=3,v5=2,v3=1,v4=1") == z);
  CHECK(parse_cycle(g, "0") == zero_cycle(g));
  CHECK(format_cycle(RatCycle{make_q(1, 2), Q(-3)}) == "(1/2,-3)");
  Json j = cycle_json(g, z);
  CHECK(j.dump() == R"({"v1":"3","v2":"6","v3":"1","v4":"1","v5":"2"})");
  CHECK(cycle_from_json(g, Json::parse(j.dump())) == z);
  CHECK(error_name([&] { parse_cycle(g, "(1,2)"); }) == "ParseError");
  CHECK(error_name([&] { cycle_from_json(g, Json::parse(R"({"v1":"1"})")); }) == "ParseError");
}

TEST_CASE("DOT export") {
  std::string dot = to_dot(corpus_graph("A2"));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("e1") != std::string::npos);
  CHECK(dot.find("-2") != std::string::npos);
}
