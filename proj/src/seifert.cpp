#include "plumbline/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "plumbline/error.hpp"
#include "plumbline/lattice.hpp"

namespace plumbline {

namespace {

long long ceil_div(long long a, long long b) {
  // b > 0
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& s) {
  Q q = parse_rational(trim(s));
  if (!is_integer(q)) throw DomainError("ParseError", "expected an integer, got '" + s + "'");
  return to_ll(q.get_num());
}

}  // namespace

SeifertData parse_seifert(const std::string& text) {
  SeifertData sd;
  bool have_b0 = false, have_legs = false;
  std::istringstream is(text);
  std::string tok;
  // Tokens are "b0=<int>" and "legs=<spec>"; the leg spec may contain spaces
  // after ';' so re-join everything following "legs=".
  std::string rest;
  std::vector<std::string> toks;
  while (is >> tok) toks.push_back(tok);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const std::string& t = toks[i];
    if (t.rfind("b0=", 0) == 0) {
      sd.b0 = parse_int(t.substr(3));
      have_b0 = true;
    } else if (t.rfind("legs=", 0) == 0) {
      std::string spec = t.substr(5);
      while (i + 1 < toks.size() && toks[i + 1].rfind("b0=", 0) != 0) spec += toks[++i];
      have_legs = true;
      std::string item;
      std::istringstream ls(spec);
      while (std::getline(ls, item, ';')) {
        item = trim(item);
        if (item.empty()) continue;
        long long count = 1;
        auto x = item.find('x');
        if (x != std::string::npos) {
          count = parse_int(item.substr(x + 1));
          item = item.substr(0, x);
        }
        auto comma = item.find(',');
        if (comma == std::string::npos) throw DomainError("ParseError", "leg must be '<alpha>,<omega>': '" + item + "'");
        Leg leg{parse_int(item.substr(0, comma)), parse_int(item.substr(comma + 1))};
        if (count < 0) throw DomainError("ParseError", "negative leg count");
        for (long long c = 0; c < count; ++c) sd.legs.push_back(leg);
      }
    } else {
      throw DomainError("ParseError", "unexpected token in Seifert data: '" + t + "'");
    }
  }
  if (!have_b0 || !have_legs) throw DomainError("ParseError", "Seifert data needs b0=<int> and legs=<spec>");
  validate_seifert(sd);
  return sd;
}

std::string format_seifert(const SeifertData& sd) {
  std::ostringstream os;
  os << "b0=" << sd.b0 << " legs=";
  for (std::size_t i = 0; i < sd.legs.size(); ++i) {
    std::size_t j = i;
    while (j + 1 < sd.legs.size() && sd.legs[j + 1] == sd.legs[i]) ++j;
    if (i) os << ";";
    os << sd.legs[i].alpha << "," << sd.legs[i].omega;
    if (j > i) os << "x" << (j - i + 1);
    i = j;
  }
  return os.str();
}

std::vector<long long> cont_frac(long long alpha, long long omega) {
  if (!(0 < omega && omega < alpha)) throw DomainError("BadRange", "need 0 < omega < alpha");
  if (std::gcd(alpha, omega) != 1) throw DomainError("NotCoprime", "alpha and omega must be coprime");
  std::vector<long long> b;
  long long p = alpha, q = omega;
  while (q != 0) {
    long long bi = ceil_div(p, q);
    b.push_back(bi);
    long long r = bi * q - p;
    p = q;
    q = r;
  }
  return b;
}

std::pair<long long, long long> cf_eval(const std::vector<long long>& b) {
  if (b.empty()) throw DomainError("BadRange", "empty continued fraction");
  for (long long x : b)
    if (x < 2) throw DomainError("BadRange", "continued fraction entries must be >= 2");
  long long p = b.back(), q = 1;
  for (int i = static_cast<int>(b.size()) - 2; i >= 0; --i) {
    long long np = b[i] * p - q;
    q = p;
    p = np;
  }
  return {p, q};
}

void validate_seifert(const SeifertData& sd) {
  for (const Leg& l : sd.legs) {
    if (!(0 < l.omega && l.omega < l.alpha)) throw DomainError("BadRange", "leg needs 0 < omega < alpha");
    if (std::gcd(l.alpha, l.omega) != 1) throw DomainError("NotCoprime", "leg (alpha, omega) must be coprime");
  }
}

Q orbifold_euler(const SeifertData& sd) {
  Q e = make_q(-sd.b0);
  for (const Leg& l : sd.legs) e += make_q(l.omega, l.alpha);
  return e;
}

ResolutionGraph graph_from_seifert(const SeifertData& sd) {
  validate_seifert(sd);
  std::vector<std::string> ids{"v0"};
  std::vector<long long> euler{-sd.b0};
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t j = 0; j < sd.legs.size(); ++j) {
    auto b = cont_frac(sd.legs[j].alpha, sd.legs[j].omega);
    std::string prev = "v0";
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::string id = "v" + std::to_string(j + 1);
      if (b.size() > 1) id += "_" + std::to_string(i + 1);
      ids.push_back(id);
      euler.push_back(-b[i]);
      edges.emplace_back(prev, id);
      prev = id;
    }
  }
  return ResolutionGraph(std::move(ids), std::move(euler), edges);
}

StarStructure star_structure(const ResolutionGraph& g) {
  StarStructure st;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) >= 3) {
      if (st.center >= 0) throw DomainError("NotStarShaped", "more than one vertex of degree >= 3");
      st.center = v;
    }
  if (st.center < 0) throw DomainError("NotStarShaped", "no vertex of degree >= 3");
  for (int first : g.neighbors(st.center)) {
    std::vector<int> leg{first};
    int prev = st.center, cur = first;
    while (true) {
      int next = -1;
      for (int w : g.neighbors(cur))
        if (w != prev) next = w;
      if (next < 0) break;
      leg.push_back(next);
      prev = cur;
      cur = next;
    }
    st.legs.push_back(leg);
  }
  return st;
}

SeifertData seifert_from_graph(const ResolutionGraph& g) {
  StarStructure st = star_structure(g);
  SeifertData sd;
  sd.b0 = -g.euler(st.center);
  for (const auto& leg : st.legs) {
    std::vector<long long> b;
    for (int v : leg) b.push_back(-g.euler(v));
    auto [a, w] = cf_eval(b);
    sd.legs.push_back({a, w});
  }
  return sd;
}

OmegaPrimeTau omega_prime_tau(const SeifertData& sd) {
  validate_seifert(sd);
  OmegaPrimeTau out;
  for (const Leg& l : sd.legs) {
    long long wp = 0;
    for (long long c = 1; c < l.alpha; ++c)
      if ((l.omega * c) % l.alpha == 1) {
        wp = c;
        break;
      }
    out.omega_prime.push_back(wp);
    out.tau.push_back((l.omega * wp - 1) / l.alpha);
  }
  return out;
}

long long n_ell(const SeifertData& sd, long long ell) {
  long long n = -sd.b0 * ell - 2;
  for (const Leg& l : sd.legs) n += ceil_div(l.omega * ell, l.alpha);
  return n;
}

WhInvariants wh_invariants(const SeifertData& sd) {
  validate_seifert(sd);
  WhInvariants inv;
  inv.e = orbifold_euler(sd);
  if (inv.e >= 0) throw DomainError("NotNegativeDefinite", "orbifold Euler number must be negative");
  auto opt = omega_prime_tau(sd);
  inv.omega_prime = opt.omega_prime;
  inv.tau = opt.tau;
  // n_ℓ < eℓ + ν - 2, so n_ℓ < 0 once ℓ >= (ν - 2)/(-e).
  long long nu = static_cast<long long>(sd.legs.size());
  Q bound = make_q(nu - 2) / (-inv.e);
  inv.ell_max = std::max<long long>(0, to_ll(ceil_q(bound)));
  for (long long ell = 0; ell <= inv.ell_max; ++ell) {
    long long n = n_ell(sd, ell);
    inv.n[ell] = n;
    if (n >= 0) {
      inv.W.push_back(ell);
      inv.pg += n + 1;
    }
  }
  return inv;
}

long long h1_central(const SeifertData& sd, long long k) {
  if (k < 1) throw DomainError("BadRange", "k must be >= 1");
  WhInvariants inv = wh_invariants(sd);
  long long h = 0;
  for (long long ell : inv.W) h += std::max<long long>(0, inv.n.at(ell) + 1 - k);
  return h;
}

H1End h1_end(const SeifertData& sd, int leg) {
  WhInvariants inv = wh_invariants(sd);
  if (leg < 0 || leg >= static_cast<int>(sd.legs.size())) throw DomainError("BadRange", "leg index out of range");
  const Leg& L = sd.legs[leg];
  long long wp = inv.omega_prime[leg], tau = inv.tau[leg];
  H1End out{};
  for (long long ell : inv.W) {
    long long m = ceil_div(L.omega * ell, L.alpha);
    long long exp_u = tau * ell - wp * m + wp - 1;
    bool divides = ((L.omega * ell - 1) % L.alpha + L.alpha) % L.alpha == 0;
    if (divides && exp_u < 0) out.relation_ells.push_back(ell);
  }
  out.relations = static_cast<long long>(out.relation_ells.size());
  out.value = inv.pg - out.relations;
  long long nsum = 0;
  for (long long ell : inv.W) nsum += inv.n.at(ell);
  out.printed_formula = nsum * out.relations;
  return out;
}

SRecursion s_recursion(const SeifertData& sd) {
  WhInvariants inv = wh_invariants(sd);
  SRecursion r;
  long long s = 0;
  r.s[inv.ell_max + 1] = 0;
  for (long long ell = inv.ell_max; ell >= 0; --ell) {
    long long n = inv.n.at(ell);
    if (n >= 0)
      s = s + n;
    else
      s = std::max<long long>(0, s - 1);
    r.s[ell] = s;
  }
  r.s0 = r.s.at(0);
  return r;
}

long long h1_generic_central(const SeifertData& sd) { return s_recursion(sd).s0; }

long long dim_im_central(const SeifertData& sd) { return wh_invariants(sd).pg - s_recursion(sd).s0; }

bool is_dominant_central(const SeifertData& sd) { return s_recursion(sd).s0 == 0; }

long long dim_V_wh(const SeifertData& sd, const std::vector<int>& subset) {
  ResolutionGraph g = graph_from_seifert(sd);
  long long pg = wh_invariants(sd).pg;
  for (int v : subset)
    if (v < 0 || v >= g.size()) throw DomainError("BadRange", "vertex index out of range");
  long long total = 0;
  for (const auto& comp : components_of_complement(g, subset)) {
    ResolutionGraph sub = induced_subgraph(g, comp);
    bool string = true;
    for (int v = 0; v < sub.size(); ++v)
      if (sub.degree(v) >= 3) string = false;
    if (string) continue;
    SeifertData part;
    try {
      part = seifert_from_graph(sub);
    } catch (const DomainError&) {
      throw DomainError("ComponentNotSupported", "complement component is neither a string nor star-shaped");
    }
    total += wh_invariants(part).pg;
  }
  return pg - total;
}

std::vector<WhForm> wh_form_basis(const SeifertData& sd) {
  WhInvariants inv = wh_invariants(sd);
  std::vector<WhForm> out;
  for (long long ell : inv.W) {
    std::vector<long long> m;
    for (const Leg& l : sd.legs) m.push_back(ceil_div(l.omega * ell, l.alpha));
    for (long long n = 0; n <= inv.n.at(ell); ++n) out.push_back({ell, n, m});
  }
  return out;
}

std::vector<Q> default_leg_points(const SeifertData& sd) {
  std::vector<Q> p;
  for (std::size_t j = 0; j < sd.legs.size(); ++j) p.push_back(make_q(static_cast<long long>(j + 1)));
  return p;
}

}  // namespace plumbline
