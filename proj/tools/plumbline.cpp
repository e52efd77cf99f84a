// plumbline: command-line front end to the library.
//
//   plumbline <command> [options]      human-readable table on stdout
//   plumbline --json <command> ...     one JSON document on stdout
//
// Graph arguments are a graph file path, corpus:<name> or seifert:<data>.
// Exit status: 0 success, 1 domain error (its name on stderr), 2 usage error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "plumbline/abel.hpp"
#include "plumbline/corpus.hpp"
#include "plumbline/error.hpp"
#include "plumbline/graph.hpp"
#include "plumbline/json_io.hpp"
#include "plumbline/lattice.hpp"
#include "plumbline/seifert.hpp"
#include "plumbline/superisolated.hpp"
#include "plumbline/zeta.hpp"

using namespace plumbline;

namespace {

constexpr unsigned long long kDefaultSeed = 20240611ULL;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ----------------------------------------------------------------- reporting

class Report {
 public:
  void add(const std::string& key, const Json& value, const std::string& human) {
    json_[key] = value;
    rows_.emplace_back(key, human);
  }
  void add(const std::string& key, const Json& value) { add(key, value, human_of(value)); }
  void add_json_only(const std::string& key, const Json& value) { json_[key] = value; }
  void add_human_only(const std::string& key, const std::string& human) { rows_.emplace_back(key, human); }

  void print(bool as_json) const {
    if (as_json) {
      std::cout << json_.dump(2) << "\n";
      return;
    }
    std::size_t w = 0;
    for (const auto& r : rows_) w = std::max(w, r.first.size());
    for (const auto& [k, v] : rows_) std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
  }

 private:
  static std::string human_of(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
  }
  Json json_ = Json::object();
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string keyed_cycle(const ResolutionGraph& g, const RatCycle& x) {
  std::string s;
  for (int v = 0; v < g.size(); ++v) s += (v ? " " : "") + g.id(v) + "=" + to_string(x[v]);
  return s;
}

void add_cycle(Report& r, const ResolutionGraph& g, const std::string& key, const RatCycle& x) {
  r.add(key, cycle_json(g, x), format_cycle(x) + "   [" + keyed_cycle(g, x) + "]");
}
void add_cycle(Report& r, const ResolutionGraph& g, const std::string& key, const IntCycle& x) {
  add_cycle(r, g, key, to_rat(x));
}

std::string join(const std::vector<long long>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

// ----------------------------------------------------------------- inputs

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ResolutionGraph load_graph(const std::string& arg) {
  if (arg.rfind("corpus:", 0) == 0) return corpus_graph(arg.substr(7));
  if (arg.rfind("seifert:", 0) == 0) return graph_from_seifert(parse_seifert(arg.substr(8)));
  return parse_graph(read_file(arg));
}

// Cycle syntax: "(a,b,...)", "id=value,...", "0", the keywords Zmin / ZK, or
// "dual(...)" for coordinates in the E*-basis; any of them may be negated
// with a leading '-'.
RatCycle parse_cycle_arg(const ResolutionGraph& g, std::string text) {
  bool negate = false;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(text.begin());
  if (!text.empty() && text.front() == '-' && text.size() > 1 && !std::isdigit(static_cast<unsigned char>(text[1]))) {
    negate = true;
    text.erase(text.begin());
  }
  RatCycle x;
  if (text == "Zmin")
    x = to_rat(laufer_zmin(g));
  else if (text == "ZK")
    x = canonical_cycle(g);
  else if (text.rfind("dual(", 0) == 0 && text.back() == ')')
    x = from_dual_coords(g, parse_cycle(g, text.substr(4)));
  else
    x = parse_cycle(g, text);
  return negate ? neg(x) : x;
}

IntCycle parse_int_cycle_arg(const ResolutionGraph& g, const std::string& text) {
  RatCycle x = parse_cycle_arg(g, text);
  if (!all_integral(x)) throw DomainError("NotInLattice", "cycle " + format_cycle(x) + " must have integer coordinates");
  return to_int(x);
}

std::vector<int> parse_subset(const ResolutionGraph& g, const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(g.index_of(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      cur += c;
  }
  flush();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Q> parse_rational_list(const std::string& text) {
  std::vector<Q> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(parse_rational(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return out;
}

// CSV point file: one "u,v" pair of rationals per line, '#' comments.
std::vector<PlanePoint> read_points_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<PlanePoint> pts;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<Q> xs = parse_rational_list(line);
    if (xs.empty()) continue;
    if (xs.size() != 2) throw DomainError("ParseError", "point lines must read 'u,v': '" + line + "'");
    pts.emplace_back(QI(xs[0]), QI(xs[1]));
  }
  return pts;
}

// Small random rationals (numerator in [-50, 50], denominator in [1, 7]),
// avoiding the values in `avoid` and each other.
std::vector<Q> draw_rationals(std::mt19937_64& rng, std::size_t count, std::vector<Q> avoid) {
  std::uniform_int_distribution<long long> num(-50, 50), den(1, 7);
  std::vector<Q> out;
  while (out.size() < count) {
    Q x = make_q(num(rng), den(rng));
    if (std::find(avoid.begin(), avoid.end(), x) != avoid.end()) continue;
    avoid.push_back(x);
    out.push_back(x);
  }
  return out;
}

Json rationals_json(const std::vector<Q>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(rational_json(x));
  return j;
}

std::string rationals_text(const std::vector<Q>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_string(xs[i]);
  return s;
}

Json qi_json(const QI& x) { return field_to_string(x); }

// ----------------------------------------------------------------- options

struct Options {
  bool json = false;
  unsigned long long seed = kDefaultSeed;
  std::string graph, cycle, lprime, z, subset, l;
  std::string seifert;
  long long n0 = 1, n1 = 12, k = -1, leg = 1, d = 0, n = 0, m = 0, order = 2;
  std::string bound;
  std::string jet, p, q, points_file, tvals, config = "generic";
  bool dot = false, exhaustive = false, use_series = false;
};

// ----------------------------------------------------------------- graph commands

Report cmd_invariants(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  Report r;
  r.add("vertices", g.ids(), std::to_string(g.size()) + " (" + [&] {
          std::string s;
          for (int v = 0; v < g.size(); ++v) s += (v ? " " : "") + g.id(v) + ":" + std::to_string(g.euler(v));
          return s;
        }() + ")");
  r.add("det", to_string(discriminant(g)));
  add_cycle(r, g, "Z_K", canonical_cycle(g));
  r.add("chi(Z_K)", rational_json(chi(g, canonical_cycle(g))));
  IntCycle zmin = laufer_zmin(g);
  add_cycle(r, g, "Z_min", zmin);
  r.add("chi(Z_min)", to_string(chi(g, zmin)));
  r.add("(Z_min,Z_min)", to_string(pairing_int(g, zmin, zmin)));
  r.add("h1(O_Zmin)", to_string(h1_zmin(g)));
  r.add("rational", is_rational_graph(g));
  r.add("elliptic", is_elliptic_graph(g));
  Json duals = Json::object();
  for (int v = 0; v < g.size(); ++v) {
    duals[g.id(v)] = cycle_json(g, dual_base(g)[v]);
    r.add_human_only("E*_" + g.id(v), format_cycle(dual_base(g)[v]));
  }
  r.add_json_only("dual_base", duals);
  r.add_json_only("graph", graph_json(g));
  return r;
}

Report cmd_zmin(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  Report r;
  IntCycle z = laufer_zmin(g);
  add_cycle(r, g, "Z_min", z);
  r.add("chi", to_string(chi(g, z)));
  r.add("h1", to_string(h1_zmin(g)));
  return r;
}

Report cmd_zk(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  Report r;
  add_cycle(r, g, "Z_K", canonical_cycle(g));
  return r;
}

Report cmd_chi(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  RatCycle x = parse_cycle_arg(g, o.cycle);
  Report r;
  add_cycle(r, g, "cycle", x);
  r.add("chi", rational_json(chi(g, x)));
  r.add("self_intersection", rational_json(pairing(g, x, x)));
  r.add("in_dual_lattice", in_dual_lattice(g, x));
  r.add("in_lipman_cone", in_lipman_cone(g, x));
  return r;
}

IntCycle z_or_default(const ResolutionGraph& g, const Options& o, const RatCycle& lprime) {
  if (!o.z.empty()) return parse_int_cycle_arg(g, o.z);
  // Default Z: a box large enough to contain the orthant minimisers.
  return min_chi_orthant(g, lprime).search_bound;
}

Report cmd_dominant(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  RatCycle lp = parse_cycle_arg(g, o.lprime);
  IntCycle z = z_or_default(g, o, lp);
  Report r;
  add_cycle(r, g, "l'", lp);
  add_cycle(r, g, "Z", z);
  r.add("dominant", is_dominant(g, lp, z));
  r.add("generic_h1", to_string(generic_h1(g, lp, z)));
  return r;
}

Report cmd_generic_h1(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  RatCycle lp = parse_cycle_arg(g, o.lprime);
  Report r;
  add_cycle(r, g, "l'", lp);
  if (o.z.empty()) {
    r.add("Z", "orthant", "orthant (Z >> 0)");
    r.add("generic_h1", to_string(generic_h1_orthant(g, lp)));
    return r;
  }
  IntCycle z = parse_int_cycle_arg(g, o.z);
  add_cycle(r, g, "Z", z);
  r.add("generic_h1", to_string(generic_h1(g, lp, z)));
  r.add("generic_h0", to_string(generic_h0(g, lp, z)));
  H1Bounds b = h1_bounds(g, lp, z);
  r.add("h1_lower_bound", to_string(b.lower));
  r.add("h1_upper_bound", to_string(b.upper));
  return r;
}

Report cmd_sdom(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  RatCycle x = parse_cycle_arg(g, o.cycle);
  Report r;
  add_cycle(r, g, "cycle", x);
  r.add("in_sdom", in_sdom(g, x));
  return r;
}

Report cmd_van(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  RatCycle x = parse_cycle_arg(g, o.cycle);
  Report r;
  add_cycle(r, g, "cycle", x);
  r.add("in_van", in_van(g, x));
  return r;
}

Report cmd_ldom(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  RatCycle lp = parse_cycle_arg(g, o.lprime);
  Report r;
  add_cycle(r, g, "l'", lp);
  IntCycle l = l_dom(g, lp);
  add_cycle(r, g, "l_dom", l);
  add_cycle(r, g, "-l'+l_dom", add(neg(lp), to_rat(l)));
  return r;
}

Report cmd_zcoh(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  RatCycle lp = o.lprime.empty() ? zero_cycle(g) : parse_cycle_arg(g, o.lprime);
  Report r;
  add_cycle(r, g, "l'", lp);
  if (o.z.empty()) {
    MinimizationResult m = min_chi_orthant(g, lp);
    add_cycle(r, g, "Z_coh", m.minimal_minimizer);
    r.add("min_chi", rational_json(m.min_value));
    r.add("minimizer_count", to_string(m.minimizer_count));
    add_cycle(r, g, "search_bound", m.search_bound);
    return r;
  }
  IntCycle z = parse_int_cycle_arg(g, o.z);
  MinimizationResult m = o.exhaustive ? min_chi_box_exhaustive(g, lp, z) : min_chi_box(g, lp, z);
  add_cycle(r, g, "Z", z);
  add_cycle(r, g, "Z_coh", m.minimal_minimizer);
  r.add("min_chi", rational_json(m.min_value));
  r.add("minimizer_count", to_string(m.minimizer_count));
  std::vector<int> spt = spt_generators(g, z, lp);
  std::vector<std::string> ids;
  for (int v : spt) ids.push_back(g.id(v));
  r.add("spt_generators", ids, [&] {
    std::string s;
    for (const auto& id : ids) s += (s.empty() ? "" : ",") + id;
    return s.empty() ? std::string("(none)") : s;
  }());
  return r;
}

std::vector<long long> parse_bound(const ResolutionGraph& g, const std::string& text) {
  std::vector<Q> xs = parse_rational_list(text);
  std::vector<long long> b;
  for (const auto& x : xs) {
    if (!is_integer(x) || x < 0) throw DomainError("BadRange", "bounds must be nonnegative integers");
    b.push_back(to_ll(x.get_num()));
  }
  if (b.size() == 1) b.assign(g.size(), b[0]);
  if (static_cast<int>(b.size()) != g.size()) throw UsageError("--bound takes one value or one per vertex");
  return b;
}

Report cmd_series(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  std::vector<long long> bound = parse_bound(g, o.bound.empty() ? "3" : o.bound);
  ExpSeries s = expand_Z(g, bound);
  Report r;
  r.add("bound", bound, join(bound));
  r.add("terms", static_cast<long long>(s.terms.size()));
  Json terms = Json::array();
  std::string human;
  for (const auto& [a, c] : s.terms) {
    terms.push_back({{"exponent", a}, {"coefficient", to_string(c)}});
    human += "\n    " + to_string(c) + " * t^E*(" + join(a) + ")";
  }
  r.add("series", terms, human.empty() ? "0" : "(E*-exponents)" + human);
  return r;
}

Report cmd_counting(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  IntCycle l = parse_int_cycle_arg(g, o.l);
  std::vector<int> subset = o.subset.empty() ? std::vector<int>{} : parse_subset(g, o.subset);
  Report r;
  add_cycle(r, g, "l", l);
  r.add("chi(l)", to_string(chi(g, l)));
  if (o.use_series) {
    ExpSeries s = expand_Z(g, coverage_caps(g, l));
    r.add("sigma", to_string(counting_sigma(g, s, l)));
    if (!subset.empty()) r.add("reduced_sigma", to_string(reduced_counting(g, s, subset, l)));
    r.add("method", "series");
  } else {
    r.add("sigma", to_string(counting_sigma_dp(g, l)));
    if (!subset.empty()) r.add("reduced_sigma", to_string(reduced_counting_dp(g, subset, l)));
    r.add("method", "dp");
  }
  return r;
}

Report cmd_periodic(const Options& o) {
  ResolutionGraph g = load_graph(o.graph);
  IntCycle l;
  if (!o.l.empty()) {
    l = parse_int_cycle_arg(g, o.l);
  } else {
    if (o.subset.empty()) throw UsageError("periodic-constant needs --l or --subset");
    // l = Σ_{v ∈ I} k_v E*_v with k_v the order of E*_v in H.
    RatCycle a = zero_cycle(g);
    for (int v : parse_subset(g, o.subset)) a[v] = make_q(dual_order(g, v));
    l = to_int(from_dual_coords(g, a));
  }
  PeriodicConstant pc = periodic_constant(g, l, o.n0, o.n1);
  Report r;
  add_cycle(r, g, "l", l);
  std::vector<std::string> ids;
  for (int v : dual_support(g, l)) ids.push_back(g.id(v));
  r.add("support_I", ids, [&] {
    std::string s;
    for (const auto& id : ids) s += (s.empty() ? "" : ",") + id;
    return s;
  }());
  r.add("constant", to_string(pc.constant));
  r.add("stabilization_n", pc.stabilization_n);
  r.add("window", pc.window);
  Json table = Json::array();
  std::string human = "n  sigma  chi  sigma-chi  reduced";
  bool agree = true;
  for (const auto& row : pc.table) {
    table.push_back({{"n", row.n},
                     {"sigma", to_string(row.sigma)},
                     {"chi", to_string(row.chi)},
                     {"diff", to_string(row.diff)},
                     {"reduced_sigma", to_string(row.reduced_sigma)}});
    human += "\n    " + std::to_string(row.n) + "  " + to_string(row.sigma) + "  " + to_string(row.chi) + "  " +
             to_string(row.diff) + "  " + to_string(row.reduced_sigma);
    agree = agree && row.sigma == row.reduced_sigma;
  }
  r.add("reduced_equals_full", agree);
  r.add("table", table, human);
  return r;
}

// ----------------------------------------------------------------- wh

SeifertData seifert_arg(const Options& o) {
  if (o.seifert.empty()) throw UsageError("--seifert is required");
  SeifertData sd = parse_seifert(o.seifert);
  validate_seifert(sd);
  return sd;
}

Report cmd_wh(const std::string& what, const Options& o) {
  SeifertData sd = seifert_arg(o);
  Report r;
  r.add("seifert", seifert_json(sd), format_seifert(sd));
  if (what == "pg") {
    r.add("pg", wh_invariants(sd).pg);
    return r;
  }
  if (what == "invariants") {
    WhInvariants w = wh_invariants(sd);
    r.add("e", rational_json(w.e));
    r.add("omega_prime", w.omega_prime, join(w.omega_prime));
    r.add("tau", w.tau, join(w.tau));
    Json cfs = Json::array();
    std::string human;
    for (const auto& leg : sd.legs) {
      auto b = cont_frac(leg.alpha, leg.omega);
      cfs.push_back(b);
      human += (human.empty() ? "" : " | ") + join(b);
    }
    r.add("continued_fractions", cfs, human);
    r.add("ell_max", w.ell_max);
    r.add("W", w.W, "{" + join(w.W) + "}");
    Json n = Json::object();
    std::string nh;
    for (const auto& [ell, v] : w.n) {
      n[std::to_string(ell)] = v;
      nh += (nh.empty() ? "" : " ") + std::to_string(ell) + ":" + std::to_string(v);
    }
    r.add("n_ell", n, nh);
    r.add("pg", w.pg);
    SRecursion s = s_recursion(sd);
    r.add("s0", s.s0);
    r.add("dim_im_central", dim_im_central(sd));
    r.add("dominant_central", is_dominant_central(sd));
    return r;
  }
  if (what == "forms") {
    Json forms = Json::array();
    std::string human;
    std::vector<long long> poles;
    for (const auto& f : wh_form_basis(sd)) {
      forms.push_back({{"ell", f.ell}, {"n", f.n}, {"m", f.m}, {"pole_order", f.ell + 1}});
      human += "\n    l=" + std::to_string(f.ell) + " n=" + std::to_string(f.n) + " m=(" + join(f.m) + ")";
      poles.push_back(f.ell + 1);
    }
    r.add("forms", forms, human);
    std::sort(poles.begin(), poles.end());
    r.add("pole_orders", poles, "{" + join(poles) + "}");
    return r;
  }
  if (what == "h1-central") {
    if (o.k < 0) throw UsageError("--k is required");
    r.add("k", o.k);
    r.add("h1", h1_central(sd, o.k));
    r.add("dim_im", wh_invariants(sd).pg - h1_central(sd, o.k));
    return r;
  }
  if (what == "h1-end") {
    H1End h = h1_end(sd, static_cast<int>(o.leg - 1));
    r.add("leg", o.leg);
    r.add("h1", h.value);
    r.add("relations", h.relations);
    r.add("relation_ells", h.relation_ells, "{" + join(h.relation_ells) + "}");
    r.add("printed_formula_value", h.printed_formula);
    return r;
  }
  if (what == "s") {
    SRecursion s = s_recursion(sd);
    Json t = Json::object();
    std::string human;
    for (const auto& [ell, v] : s.s) {
      t[std::to_string(ell)] = v;
      human += (human.empty() ? "" : " ") + std::to_string(ell) + ":" + std::to_string(v);
    }
    r.add("s", t, human);
    r.add("s0", s.s0);
    r.add("h1_generic_central", h1_generic_central(sd));
    r.add("dim_im_central", dim_im_central(sd));
    r.add("dominant", is_dominant_central(sd));
    return r;
  }
  if (what == "dimv") {
    ResolutionGraph g = graph_from_seifert(sd);
    std::vector<int> subset = parse_subset(g, o.subset.empty() ? "v0" : o.subset);
    std::vector<std::string> ids;
    for (int v : subset) ids.push_back(g.id(v));
    r.add("I", ids, [&] {
      std::string s;
      for (const auto& id : ids) s += (s.empty() ? "" : ",") + id;
      return s;
    }());
    r.add("dim_V", dim_V_wh(sd, subset));
    return r;
  }
  if (what == "graph") {
    ResolutionGraph g = graph_from_seifert(sd);
    r.add("graph", graph_json(g), "\n" + format_graph(g));
    return r;
  }
  throw UsageError("unknown wh command");
}

// ----------------------------------------------------------------- abel

std::vector<Q> leg_points(const SeifertData& sd, const Options& o) {
  return o.p.empty() ? default_leg_points(sd) : parse_rational_list(o.p);
}

void add_system(Report& r, long long rank, long long h1, long long rows) {
  r.add("rows", rows);
  r.add("rank", rank);
  r.add("h1", h1);
}

Report cmd_abel(const std::string& what, const Options& o) {
  Report r;
  if (what == "delta") {
    if (o.n < 1) throw UsageError("--n >= 1 is required");
    std::vector<Poly> det = delta_poly_det(static_cast<int>(o.n));
    Json rows = Json::array();
    bool all = true;
    std::string human;
    for (int i = 1; i <= o.n; ++i) {
      Poly closed = delta_poly_symbolic(static_cast<int>(o.n), i);
      bool same = closed == det[i - 1];
      all = all && same;
      rows.push_back({{"i", i}, {"delta", closed.to_string()}, {"matches_determinant", same}});
      human += "\n    i=" + std::to_string(i) + ": " + closed.to_string() + (same ? "" : "   (determinant differs)");
    }
    r.add("n", o.n);
    r.add("delta", rows, human);
    r.add("determinant_identity", all);
    return r;
  }
  if (what == "detmc") {
    if (o.m < 1) throw UsageError("--m >= 1 is required");
    Poly det = det_Mc(static_cast<int>(o.m));
    Poly expected = Poly::var(1).pow(static_cast<unsigned>(o.m * (o.m - 1) / 2));
    r.add("m", o.m);
    r.add("det", det.to_string());
    r.add("equals_c1_power", det == expected);
    return r;
  }
  SeifertData sd = seifert_arg(o);
  std::vector<Q> p = leg_points(sd, o);
  std::mt19937_64 rng(o.seed);
  r.add("seifert", seifert_json(sd), format_seifert(sd));
  r.add("leg_points", rationals_json(p), rationals_text(p));
  if (what == "jet") {
    std::vector<Q> jet = o.jet.empty() ? draw_rationals(rng, static_cast<std::size_t>(wh_invariants(sd).ell_max + 1), p)
                                       : parse_rational_list(o.jet);
    if (o.jet.empty()) r.add("seed", o.seed);
    r.add("jet", rationals_json(jet), rationals_text(jet));
    auto sys = wh_jet_cut_system(sd, p, jet);
    add_system(r, sys.rank, sys.h1, static_cast<long long>(sys.matrix.size()));
    r.add("pg_minus_s0", wh_invariants(sd).pg - s_recursion(sd).s0);
    return r;
  }
  if (what == "points") {
    std::vector<Q> q;
    if (!o.q.empty()) {
      q = parse_rational_list(o.q);
    } else {
      if (o.k < 0) throw UsageError("--q or --k is required");
      q = draw_rationals(rng, static_cast<std::size_t>(o.k), p);
      r.add("seed", o.seed);
    }
    r.add("q", rationals_json(q), rationals_text(q));
    auto sys = wh_point_cuts_system(sd, p, q);
    add_system(r, sys.rank, sys.h1, static_cast<long long>(sys.matrix.size()));
    r.add("closed_form_h1", h1_central(sd, static_cast<long long>(q.size())));
    return r;
  }
  if (what == "end") {
    auto sys = wh_end_chart_system(sd, static_cast<int>(o.leg - 1), p);
    r.add("leg", o.leg);
    add_system(r, sys.rank, sys.h1, static_cast<long long>(sys.matrix.size()));
    r.add("closed_form_h1", h1_end(sd, static_cast<int>(o.leg - 1)).value);
    return r;
  }
  if (what == "map") {
    // Symbolic Abel map of a single cut v = c0 + c1 u + ... + c_{order-1} u^{order-1}.
    std::vector<RatFunc> pr;
    for (const auto& x : p) pr.push_back(RatFunc(x));
    auto forms = wh_chart_forms<RatFunc>(sd, pr);
    Cut<RatFunc> cut;
    for (int k = 0; k < std::max<long long>(1, o.order); ++k) cut.c.push_back(RatFunc::var(k));
    std::vector<RatFunc> x = abel_map_chart<RatFunc>(forms, {cut});
    Json coords = Json::array();
    std::string human;
    auto basis = wh_form_basis(sd);
    for (std::size_t a = 0; a < x.size(); ++a) {
      coords.push_back({{"ell", basis[a].ell}, {"n", basis[a].n}, {"X", x[a].to_string()}});
      human += "\n    X" + std::to_string(a + 1) + " (l=" + std::to_string(basis[a].ell) +
               ", n=" + std::to_string(basis[a].n) + ") = " + x[a].to_string();
    }
    r.add("coordinates", coords, human);
    Json ratios = Json::array();
    std::string rh;
    for (std::size_t a = 1; a < x.size(); ++a) {
      if (x[a - 1].is_zero()) continue;
      RatFunc q = x[a] / x[a - 1];
      ratios.push_back(q.to_string());
      rh += "\n    X" + std::to_string(a + 1) + "/X" + std::to_string(a) + " = " + q.to_string();
    }
    r.add("consecutive_ratios", ratios, rh);
    return r;
  }
  throw UsageError("unknown abel command");
}

// ----------------------------------------------------------------- si

SiInstance si_instance(const Options& o) {
  if (o.d < 3) throw DomainError("BadRange", "--d must be >= 3");
  SiInstance inst;
  if (!o.points_file.empty()) {
    inst.d = static_cast<int>(o.d);
    inst.points = read_points_csv(o.points_file);
    inst.note = "points from " + o.points_file;
  } else if (!o.tvals.empty()) {
    inst.d = static_cast<int>(o.d);
    for (const auto& t : parse_rational_list(o.tvals)) inst.points.push_back(si_param_point(inst.d, QI(t)));
    inst.note = "t = " + o.tvals;
  } else if (o.config == "collinear") {
    inst = si_collinear_instance(static_cast<int>(o.d));
  } else if (o.config == "conic") {
    inst = si_conic_instance(static_cast<int>(o.d));
  } else if (o.config == "generic") {
    if (o.k < 0) throw UsageError("--k is required for generic points");
    inst = si_generic_instance(static_cast<int>(o.d), o.k);
  } else {
    throw UsageError("--config must be generic, collinear or conic");
  }
  validate_instance(inst);
  return inst;
}

Report cmd_si(const std::string& what, const Options& o) {
  Report r;
  if (o.d < 3) throw DomainError("BadRange", "--d must be >= 3");
  int d = static_cast<int>(o.d);
  r.add("d", o.d);
  r.add("pg", si_pg(d));
  if (what == "pg") {
    r.add("first_dominant_k", si_first_dominant(d));
    return r;
  }
  if (what == "dimim" && o.points_file.empty() && o.tvals.empty() && o.config == "generic") {
    // Closed form for generic points.
    if (o.k < 0) throw UsageError("--k is required");
    r.add("k", o.k);
    r.add("dim_im", si_dim_im_generic(d, o.k));
    r.add("h1", si_pg(d) - si_dim_im_generic(d, o.k));
    r.add("dominant", si_dim_im_generic(d, o.k) == si_pg(d));
    return r;
  }
  SiInstance inst = si_instance(o);
  long long k = static_cast<long long>(inst.points.size());
  r.add("k", k);
  Json pts = Json::array();
  for (const auto& [u, v] : inst.points) pts.push_back({qi_json(u), qi_json(v)});
  r.add("points", pts, inst.note);
  r.add("generic_dim_im", si_dim_im_generic(d, k));
  if (what == "dimim") {
    SiBlockAnalysis b = si_block_analysis(inst);
    r.add("block_rank", b.block_rank, join(b.block_rank));
    r.add("block_generic", b.block_generic, join(b.block_generic));
    r.add("dim_im", b.dim_im);
    r.add("degenerate_block", b.degenerate_block);
    r.add("drop", b.drop);
    return r;
  }
  if (what == "rank") {
    auto sys = si_constraint_system(inst);
    add_system(r, sys.rank, sys.h1, static_cast<long long>(sys.matrix.size()));
    return r;
  }
  throw UsageError("unknown si command");
}

// ----------------------------------------------------------------- corpus

Report cmd_corpus(const std::string& what, const std::string& name, const Options& o) {
  Report r;
  if (what == "list") {
    Json names = Json::array();
    std::string human;
    for (const auto& e : corpus_entries()) {
      names.push_back({{"name", e.name}, {"description", e.description}});
      human += "\n    " + e.name + std::string(e.name.size() < 18 ? 18 - e.name.size() : 1, ' ') + e.description;
    }
    r.add("corpus", names, human);
    return r;
  }
  CorpusEntry e = corpus_entry(name);
  ResolutionGraph g = parse_graph(e.graph_text);
  r.add("name", e.name);
  r.add("description", e.description);
  if (e.seifert) r.add("seifert", seifert_json(*e.seifert), format_seifert(*e.seifert));
  if (o.dot)
    r.add("dot", to_dot(g), "\n" + to_dot(g));
  else
    r.add("graph", graph_json(g), "\n" + e.graph_text);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plumbline: exact lattice, Poincaré-series and Abel-map invariants of plumbing graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print one JSON document instead of a table");
  app.add_option("--seed", o.seed, "Seed of every randomized genericity draw (default " + std::to_string(kDefaultSeed) + ")");

  std::function<Report()> run;
  auto graph_cmd = [&](const std::string& name, const std::string& help, Report (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", o.graph, "graph file, corpus:<name> or seifert:<data>")->required();
    sub->callback([&run, fn, &o] { run = [fn, &o] { return fn(o); }; });
    return sub;
  };
  graph_cmd("invariants", "det, E*, Z_K, Z_min, χ and rationality of a graph", cmd_invariants);
  graph_cmd("zmin", "minimal cycle via Laufer's algorithm", cmd_zmin);
  graph_cmd("zk", "canonical cycle", cmd_zk);
  graph_cmd("chi", "χ of a rational cycle", cmd_chi)->add_option("--cycle", o.cycle)->required();
  {
    auto* s = graph_cmd("dominant", "dominance of the Abel map c^{l'} on Z", cmd_dominant);
    s->add_option("--lprime", o.lprime, "Chern class l' (-l' must be in S')")->required();
    s->add_option("--z", o.z, "effective cycle Z (default: a box containing all orthant minimisers)");
  }
  {
    auto* s = graph_cmd("generic-h1", "h^1 of the generic line bundle with Chern class l'", cmd_generic_h1);
    s->add_option("--lprime", o.lprime)->required();
    s->add_option("--z", o.z, "cycle Z (omit for Z >> 0)");
  }
  graph_cmd("sdom", "membership in S'_dom", cmd_sdom)->add_option("--cycle", o.cycle)->required();
  graph_cmd("van", "membership in Van'", cmd_van)->add_option("--cycle", o.cycle)->required();
  graph_cmd("ldom", "minimal l >= 0 with -l'+l in S'_dom", cmd_ldom)->add_option("--lprime", o.lprime)->required();
  {
    auto* s = graph_cmd("zcoh", "cohomology cycle (minimal minimiser of χ(-l'+l))", cmd_zcoh);
    s->add_option("--lprime", o.lprime, "default 0");
    s->add_option("--z", o.z, "box corner Z (omit for the orthant)");
    s->add_flag("--exhaustive", o.exhaustive, "use the plain enumeration instead of the pruned search");
  }
  graph_cmd("series", "truncated expansion of Z(t) in E*-exponents", cmd_series)
      ->add_option("--bound", o.bound, "one bound or one per vertex (default 3)");
  {
    auto* s = graph_cmd("counting", "counting function σ(l) (and its I-reduced version)", cmd_counting);
    s->add_option("--l", o.l)->required();
    s->add_option("--subset", o.subset, "vertex ids of I for the reduced counting");
    s->add_flag("--series", o.use_series, "count from an explicit series expansion instead of the tree DP");
  }
  {
    auto* s = graph_cmd("periodic-constant", "periodic constant of σ(nl) - χ(nl)", cmd_periodic);
    s->add_option("--l", o.l, "l in L with E*-support I");
    s->add_option("--subset", o.subset, "I; l defaults to Σ_{v∈I} ord(E*_v) E*_v");
    s->add_option("--n0", o.n0, "first n (default 1)");
    s->add_option("--n1", o.n1, "last n (default 12)");
  }

  CLI::App* wh = app.add_subcommand("wh", "weighted-homogeneous (Seifert) invariants");
  wh->require_subcommand(1);
  for (const std::string w : {"pg", "invariants", "forms", "h1-central", "h1-end", "s", "dimv", "graph"}) {
    CLI::App* s = wh->add_subcommand(w);
    s->add_option("--seifert", o.seifert, "e.g. \"b0=1 legs=5,1x4\"")->required();
    if (w == "h1-central") s->add_option("--k", o.k)->required();
    if (w == "h1-end") s->add_option("--leg", o.leg, "1-based leg index");
    if (w == "dimv") s->add_option("--subset", o.subset, "vertex ids (default v0)");
    s->callback([&run, w, &o] { run = [w, &o] { return cmd_wh(w, o); }; });
  }

  CLI::App* abel = app.add_subcommand("abel", "local-chart Abel map computations");
  abel->require_subcommand(1);
  for (const std::string w : {"jet", "points", "end", "map", "delta", "detmc"}) {
    CLI::App* s = abel->add_subcommand(w);
    if (w == "delta") {
      s->add_option("--n", o.n)->required();
    } else if (w == "detmc") {
      s->add_option("--m", o.m)->required();
    } else {
      s->add_option("--seifert", o.seifert)->required();
      s->add_option("--p", o.p, "leg parameters p_j (default 1..ν)");
    }
    if (w == "jet") s->add_option("--jet", o.jet, "c0,c1,... (default: seeded random)");
    if (w == "points") {
      s->add_option("--q", o.q, "centres of the central orbit cuts");
      s->add_option("--k", o.k, "number of seeded random cuts");
    }
    if (w == "end") s->add_option("--leg", o.leg, "1-based leg index");
    if (w == "map") s->add_option("--order", o.order, "number of symbolic jet coefficients c0.. (default 2)");
    s->callback([&run, w, &o] { run = [w, &o] { return cmd_abel(w, o); }; });
  }

  CLI::App* si = app.add_subcommand("si", "superisolated singularities with tangent cone y^{d-1}z = x^d");
  si->require_subcommand(1);
  for (const std::string w : {"pg", "dimim", "rank"}) {
    CLI::App* s = si->add_subcommand(w);
    s->add_option("--d", o.d)->required();
    if (w != "pg") {
      s->add_option("--k", o.k, "number of generic points");
      s->add_option("--points", o.points_file, "CSV file of points u,v");
      s->add_option("--t", o.tvals, "curve parameters t (points (t^{d-1}, t^d))");
      s->add_option("--config", o.config, "generic | collinear | conic");
    }
    s->callback([&run, w, &o] { run = [w, &o] { return cmd_si(w, o); }; });
  }

  CLI::App* corpus = app.add_subcommand("corpus", "bundled example graphs");
  corpus->require_subcommand(1);
  corpus->add_subcommand("list")->callback([&run, &o] { run = [&o] { return cmd_corpus("list", "", o); }; });
  std::string corpus_name;
  CLI::App* show = corpus->add_subcommand("show");
  show->add_option("name", corpus_name)->required();
  show->add_flag("--dot", o.dot, "print Graphviz DOT");
  show->callback([&run, &o, &corpus_name] { run = [&o, &corpus_name] { return cmd_corpus("show", corpus_name, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    Report r = run();
    r.print(o.json);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
