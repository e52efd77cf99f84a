#include "plumbline/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "plumbline/error.hpp"

namespace plumbline {

using i128 = __int128;

namespace {

bool mul_ok(i128 a, i128 b, i128& out) { return !__builtin_mul_overflow(a, b, &out); }
bool add_ok(i128 a, i128 b, i128& out) { return !__builtin_add_overflow(a, b, &out); }

Int to_int(i128 v) {
  bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Int r = 0;
  Int base = 1;
  const Int two64 = Int("18446744073709551616");
  while (u != 0) {
    unsigned long long lo = static_cast<unsigned long long>(u);
    r += base * Int(static_cast<unsigned long>(lo));
    base *= two64;
    u >>= 64;
  }
  return negative ? Int(-r) : r;
}

// Adjugate and determinant of every trailing principal block A[k..n-1],
// stored as 128-bit integers when they fit (usable = false otherwise).
struct SuffixData {
  bool usable = false;
  i128 det = 0;
  std::vector<std::vector<i128>> adj;
};

std::vector<SuffixData> suffix_blocks(const Matrix<long long>& a) {
  int n = static_cast<int>(a.size());
  std::vector<SuffixData> out(n + 1);
  for (int k = 1; k < n; ++k) {
    int m = n - k;
    Matrix<Q> b(m, std::vector<Q>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) b[i][j] = make_q(a[k + i][k + j]);
    Matrix<Int> bi(m, std::vector<Int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) bi[i][j] = make_int(a[k + i][k + j]);
    std::vector<Int> minors;
    Int det = bareiss_leading_minors(bi, minors);
    Matrix<Q> inv = inverse_q(b);
    SuffixData s;
    s.usable = mpz_fits_slong_p(det.get_mpz_t());
    s.det = det.get_si();
    s.adj.assign(m, std::vector<i128>(m));
    for (int i = 0; i < m && s.usable; ++i)
      for (int j = 0; j < m; ++j) {
        Q e = inv[i][j] * Q(det);
        if (!is_integer(e) || !mpz_fits_slong_p(e.get_num_mpz_t())) {
          s.usable = false;
          break;
        }
        s.adj[i][j] = e.get_num().get_si();
      }
    out[k] = std::move(s);
  }
  return out;
}

struct PrunedSearch {
  const QuadForm& f;
  const IntCycle& upper;
  bool skip_zero;
  int n;
  std::vector<SuffixData> suffix;
  std::vector<long long> g;  // A·l for the currently assigned prefix
  IntCycle l;
  bool have_best = false;
  i128 best = 0;
  IntCycle meet_;
  Int count = 0;
  unsigned long long nodes = 0;
  long long nonzero = 0;  // number of assigned nonzero coordinates

  PrunedSearch(const QuadForm& form, const IntCycle& up, bool skip)
      : f(form), upper(up), skip_zero(skip), n(form.size()), suffix(suffix_blocks(form.a)), g(n, 0), l(n, 0) {}

  // Exact lower bound of F over the real completion of the prefix 0..k-1,
  // scaled by 4·det: returns false if it cannot be computed in 128 bits.
  bool scaled_bound(int k, i128 fprefix, i128& num, i128& den) const {
    const SuffixData& s = suffix[k];
    if (!s.usable) return false;
    int m = n - k;
    std::vector<i128> gamma(m);
    for (int j = 0; j < m; ++j) gamma[j] = static_cast<i128>(f.beta[k + j]) + 2 * static_cast<i128>(g[k + j]);
    i128 quad = 0;
    for (int i = 0; i < m; ++i) {
      if (gamma[i] == 0) continue;
      i128 row = 0;
      for (int j = 0; j < m; ++j) {
        i128 t;
        if (!mul_ok(s.adj[i][j], gamma[j], t) || !add_ok(row, t, row)) return false;
      }
      i128 t;
      if (!mul_ok(row, gamma[i], t) || !add_ok(quad, t, quad)) return false;
    }
    i128 scaled;
    if (!mul_ok(4 * s.det, fprefix, scaled)) return false;
    if (__builtin_sub_overflow(scaled, quad, &num)) return false;
    den = 4 * s.det;
    return true;
  }

  void record(i128 value) {
    if (skip_zero && nonzero == 0) return;
    if (!have_best || value < best) {
      have_best = true;
      best = value;
      meet_ = l;
      count = 1;
    } else if (value == best) {
      count += 1;
      for (int i = 0; i < n; ++i) meet_[i] = std::min(meet_[i], l[i]);
    }
  }

  void run(int k, i128 fval) {
    ++nodes;
    if (k == n) {
      record(fval);
      return;
    }
    long long cap = upper[k];
    long long steps = 0;
    bool have_prev = false;
    i128 prev_num = 0;
    for (long long t = 0; t <= cap; ++t) {
      // l_k = t has been applied to fval and g.
      bool pruned = false;
      if (have_best) {
        if (k + 1 == n) {
          // Exact value at the leaf; F is convex in t, so once it rises above
          // the incumbent it stays above.
          if (fval > best && !(skip_zero && nonzero == 0)) {
            if (have_prev && fval >= prev_num) break;
            pruned = true;
          }
          have_prev = true;
          prev_num = fval;
        } else {
          i128 num, den;
          if (scaled_bound(k + 1, fval, num, den)) {
            i128 lim;
            if (mul_ok(den, best, lim) && num > lim) {
              // The partial minimum over the real completion is convex in t.
              if (have_prev && num >= prev_num) break;
              pruned = true;
            }
            have_prev = true;
            prev_num = num;
          } else {
            have_prev = false;
          }
        }
      }
      if (!pruned) run(k + 1, fval);
      if (t == cap) break;
      // Step l_k: t -> t + 1.
      fval += 2 * static_cast<i128>(g[k]) + f.a[k][k] + f.beta[k];
      for (int i = 0; i < n; ++i) g[i] += f.a[i][k];
      if (l[k] == 0) ++nonzero;
      ++l[k];
      ++steps;
    }
    for (int i = 0; i < n; ++i) g[i] -= f.a[i][k] * steps;
    if (l[k] != 0) --nonzero;
    l[k] = 0;
  }
};

void check_form(const QuadForm& f, const IntCycle& upper) {
  int n = f.size();
  if (static_cast<int>(f.beta.size()) != n || static_cast<int>(upper.size()) != n)
    throw DomainError("ParseError", "quadratic form dimension mismatch");
  for (long long u : upper)
    if (u < 0) throw DomainError("NonEffectiveZ", "negative box bound");
}

}  // namespace

Int evaluate(const QuadForm& f, const IntCycle& l) {
  int n = f.size();
  Int r = 0;
  for (int i = 0; i < n; ++i) {
    if (l[i] == 0) continue;
    Int li = make_int(l[i]);
    Int row = make_int(f.beta[i]);
    for (int j = 0; j < n; ++j)
      if (l[j] != 0) row += make_int(f.a[i][j]) * make_int(l[j]);
    r += row * li;
  }
  return r;
}

BoxMinimum minimize_box_pruned(const QuadForm& f, const IntCycle& upper, bool skip_zero) {
  check_form(f, upper);
  PrunedSearch s(f, upper, skip_zero);
  s.run(0, 0);
  BoxMinimum out;
  out.found = s.have_best;
  out.nodes = s.nodes;
  if (s.have_best) {
    out.value = to_int(s.best);
    out.meet = s.meet_;
    out.count = s.count;
  }
  return out;
}

BoxMinimum minimize_box_exhaustive(const QuadForm& f, const IntCycle& upper, bool skip_zero) {
  check_form(f, upper);
  int n = f.size();
  BoxMinimum out;
  IntCycle l(n, 0);
  while (true) {
    ++out.nodes;
    bool zero = std::all_of(l.begin(), l.end(), [](long long x) { return x == 0; });
    if (!(skip_zero && zero)) {
      Int v = evaluate(f, l);
      if (!out.found || v < out.value) {
        out.found = true;
        out.value = v;
        out.meet = l;
        out.count = 1;
      } else if (v == out.value) {
        out.count += 1;
        out.meet = meet(out.meet, l);
      }
    }
    int i = n - 1;
    while (i >= 0 && l[i] == upper[i]) {
      l[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++l[i];
  }
  return out;
}

namespace {

// A - mu·I positive definite, by exact symmetric elimination.
bool positive_definite_shift(const Matrix<long long>& a, const Q& mu) {
  int n = static_cast<int>(a.size());
  Matrix<Q> m(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = make_q(a[i][j]) - (i == j ? mu : Q(0));
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Q fct = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= fct * m[k][j];
    }
  }
  return true;
}

}  // namespace

Q eigenvalue_lower_bound(const Matrix<long long>& a) {
  int n = static_cast<int>(a.size());
  // Seed: λ_min >= det / λ_max^{n-1}, with λ_max bounded by Gershgorin.
  long long gmax = 0;
  for (int i = 0; i < n; ++i) {
    long long r = 0;
    for (int j = 0; j < n; ++j) r += std::llabs(a[i][j]);
    gmax = std::max(gmax, r);
  }
  Matrix<Int> ai(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ai[i][j] = make_int(a[i][j]);
  std::vector<Int> minors;
  Int det = bareiss_leading_minors(ai, minors);
  Int gpow = 1;
  for (int i = 0; i + 1 < n; ++i) gpow *= make_int(gmax);
  Q lo(det, gpow);
  lo.canonicalize();
  // Upper estimate: λ_min <= min diagonal entry.
  long long dmin = a[0][0];
  for (int i = 0; i < n; ++i) dmin = std::min(dmin, a[i][i]);
  Q hi = make_q(dmin);
  // Bisection keeps the invariant A - lo·I positive definite.
  for (int it = 0; it < 24; ++it) {
    Q mid = (lo + hi) / 2;
    if (positive_definite_shift(a, mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

long long orthant_radius(const QuadForm& f) { return orthant_radius(f, eigenvalue_lower_bound(f.a)); }

long long orthant_radius(const QuadForm& f, const Q& lambda) {
  // F(l) >= λ |l|_∞^2 - |β|_1 |l|_∞, so F(l) <= 0 forces |l|_∞ <= |β|_1 / λ.
  Int b1 = 0;
  for (long long b : f.beta) b1 += make_int(std::llabs(b));
  Q r = Q(b1) / lambda;
  return to_ll(floor_q(r)) + 1;
}

// ---------------------------------------------------------------------------

bool is_effective_nonzero(const IntCycle& z) {
  bool pos = false;
  for (long long v : z) {
    if (v < 0) return false;
    if (v > 0) pos = true;
  }
  return pos;
}

bool leq(const IntCycle& a, const IntCycle& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntCycle meet(const IntCycle& a, const IntCycle& b) {
  IntCycle r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

RatCycle meet(const RatCycle& a, const RatCycle& b) {
  RatCycle r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

namespace {

// 2·D·(χ(l) + sign·(x, l)) written as l^T (D·A) l + (D·b)^T l, where A = -M
// and b_v = e_v + 2 + 2·sign·(x, E_v).  Returns D.
Int build_form(const ResolutionGraph& g, const RatCycle& x, int sign, QuadForm& f) {
  int n = g.size();
  std::vector<Q> b(n);
  Int den = 1;
  for (int v = 0; v < n; ++v) {
    b[v] = make_q(g.euler(v) + 2) + 2 * sign * pairing_e(g, x, v);
    den = lcm(den, b[v].get_den());
  }
  long long d = to_ll(den);
  f.a.assign(n, std::vector<long long>(n));
  f.beta.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f.a[i][j] = g.a(i, j) * d;
  for (int v = 0; v < n; ++v) f.beta[v] = to_ll(Q(b[v] * Q(den)).get_num());
  return den;
}

// q(l) = χ(-l'+l) - χ(-l') = χ(l) + (l', l).
MinimizationResult finish(const ResolutionGraph& g, const RatCycle& lprime, const BoxMinimum& m, const Int& den,
                          const IntCycle& bound) {
  MinimizationResult r;
  r.min_value = chi(g, neg(lprime)) + Q(m.value) / Q(2 * den);
  r.minimal_minimizer = m.meet;
  r.minimizer_count = m.count;
  r.search_bound = bound;
  return r;
}

void require_z(const IntCycle& z, int n) {
  if (static_cast<int>(z.size()) != n) throw DomainError("ParseError", "Z has wrong length");
  if (!is_effective_nonzero(z)) throw DomainError("NonEffectiveZ", "Z must be effective and nonzero: " + format_cycle(z));
}

std::vector<int> support(const IntCycle& z) {
  std::vector<int> s;
  for (int v = 0; v < static_cast<int>(z.size()); ++v)
    if (z[v] != 0) s.push_back(v);
  return s;
}

}  // namespace

IntCycle laufer_zmin(const ResolutionGraph& g) {
  int n = g.size();
  IntCycle x(n, 1);
  while (true) {
    int hit = -1;
    for (int v = 0; v < n && hit < 0; ++v)
      if (pairing_e(g, x, v) > 0) hit = v;
    if (hit < 0) return x;
    ++x[hit];
  }
}

Int h1_zmin(const ResolutionGraph& g) { return 1 - chi(g, laufer_zmin(g)); }

bool is_rational_graph(const ResolutionGraph& g) { return chi(g, laufer_zmin(g)) == 1; }

bool is_elliptic_graph(const ResolutionGraph& g) {
  QuadForm f;
  RatCycle zero = zero_cycle(g);
  Int den = build_form(g, zero, 1, f);
  IntCycle up(g.size(), orthant_radius(f));
  BoxMinimum m = minimize_box_pruned(f, up, true);
  return m.value == 0 && den == 1;
}

LauferReduction laufer_reduce(const ResolutionGraph& g, const RatCycle& x) {
  if (!in_dual_lattice(g, x)) throw DomainError("NotInDualLattice", "laufer_reduce needs x in L'");
  int n = g.size();
  LauferReduction r;
  r.s = x;
  r.l.assign(n, 0);
  r.chi_start = chi(g, x);
  Q c = r.chi_start;
  while (true) {
    int hit = -1;
    for (int v = 0; v < n && hit < 0; ++v)
      if (pairing_e(g, r.s, v) > 0) hit = v;
    if (hit < 0) break;
    // χ(y + E_v) = χ(y) + 1 - (y, E_v).
    c += 1 - pairing_e(g, r.s, hit);
    r.s[hit] += 1;
    r.l[hit] += 1;
    r.trace.push_back({hit, c});
  }
  r.chi_end = c;
  return r;
}

MinimizationResult min_chi_box(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z) {
  require_z(z, g.size());
  QuadForm f;
  Int den = build_form(g, lprime, 1, f);
  BoxMinimum m = minimize_box_pruned(f, z, false);
  return finish(g, lprime, m, den, z);
}

MinimizationResult min_chi_box_exhaustive(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z) {
  require_z(z, g.size());
  QuadForm f;
  Int den = build_form(g, lprime, 1, f);
  BoxMinimum m = minimize_box_exhaustive(f, z, false);
  return finish(g, lprime, m, den, z);
}

MinimizationResult min_chi_orthant(const ResolutionGraph& g, const RatCycle& lprime) {
  QuadForm f;
  Int den = build_form(g, lprime, 1, f);
  IntCycle up(g.size(), orthant_radius(f));
  BoxMinimum m = minimize_box_pruned(f, up, false);
  return finish(g, lprime, m, den, up);
}

bool is_dominant(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z) {
  require_z(z, g.size());
  // Restrict to |Z|: only E_v with v in the support matter.
  for (int v : support(z))
    if (pairing_e(g, lprime, v) < 0)
      throw DomainError("EcaEmpty", "-l' is not in the Lipman cone (on |Z|), so ECa^{l'}(Z) is empty");
  QuadForm f;
  build_form(g, lprime, 1, f);
  BoxMinimum m = minimize_box_pruned(f, z, true);
  return m.value > 0;
}

Int generic_h1(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z) {
  MinimizationResult r = min_chi_box(g, lprime, z);
  Q h = chi(g, neg(lprime)) - r.min_value;
  return h.get_num();
}

Int generic_h0(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z) {
  // max_{0<=l<=Z} χ(Z-l) + (Z-l, l'-l) equals χ(Z) + (Z, l') + generic h^1.
  Int h1 = generic_h1(g, lprime, z);
  RatCycle zr = to_rat(z);
  Q h0 = chi(g, zr) + pairing(g, zr, lprime) + Q(h1);
  if (!is_integer(h0)) throw DomainError("NotInDualLattice", "h^0 requires l' in L'");
  return h0.get_num();
}

Int generic_h1_orthant(const ResolutionGraph& g, const RatCycle& lprime) {
  MinimizationResult r = min_chi_orthant(g, lprime);
  return Q(chi(g, neg(lprime)) - r.min_value).get_num();
}

namespace {

// λ_min(-M) bound, shared by repeated membership tests on one graph.
Q graph_lambda(const ResolutionGraph& g) {
  Matrix<long long> a(g.size(), std::vector<long long>(g.size()));
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) a[i][j] = g.a(i, j);
  return eigenvalue_lower_bound(a);
}

bool in_sdom_lambda(const ResolutionGraph& g, const RatCycle& x, const Q& lambda) {
  // χ(l) - (x, l) > 0 for l > 0; the form is 2χ(l) - 2(x,l) (scaled by D).
  QuadForm f;
  Int den = build_form(g, x, -1, f);
  IntCycle up(g.size(), orthant_radius(f, lambda * Q(den)));
  BoxMinimum m = minimize_box_pruned(f, up, true);
  return m.value > 0;
}

}  // namespace

bool in_sdom(const ResolutionGraph& g, const RatCycle& x) { return in_sdom_lambda(g, x, graph_lambda(g)); }

bool in_van(const ResolutionGraph& g, const RatCycle& x) {
  // χ(x + l) - χ(x) = χ(l) - (x, l) >= 0 for all l >= 0.
  QuadForm f;
  build_form(g, x, -1, f);
  IntCycle up(g.size(), orthant_radius(f));
  BoxMinimum m = minimize_box_pruned(f, up, false);
  return m.value >= 0;
}

IntCycle l_dom(const ResolutionGraph& g, const RatCycle& lprime) {
  if (!in_dual_lattice(g, lprime)) throw DomainError("NotInDualLattice", "l_dom needs l' in L'");
  // Computation sequence z_0 = 0, z_{i+1} = z_i + E_v while E_v is a fixed
  // component of H^0(L(-z_i)) for generic L.  With c = l' - z_i, the sequence
  // 0 -> L(-E_v) -> L -> L|E_v -> 0 shows that E_v is fixed iff
  //   h^1(c - E_v) - h^1(c) = (c, E_v) + 1,
  // and both twists are generic in their Chern classes, so h^1 is the
  // orthant formula χ(-c) - min_{l>=0} χ(-c+l).
  int n = g.size();
  IntCycle z(n, 0);
  RatCycle c = lprime;
  Int h = generic_h1_orthant(g, c);
  while (true) {
    int hit = -1;
    Int h_next;
    for (int v = 0; v < n && hit < 0; ++v) {
      RatCycle cv = c;
      cv[v] -= 1;
      Int hv = generic_h1_orthant(g, cv);
      if (Q(hv - h) == pairing_e(g, c, v) + 1) {
        hit = v;
        h_next = hv;
      }
    }
    if (hit < 0) break;
    c[hit] -= 1;
    ++z[hit];
    h = h_next;
  }
  if (!in_sdom(g, neg(c)))
    throw DomainError("NotStabilized", "fixed-component sequence stopped outside S'_dom");
  return z;
}

IntCycle l_dom_exhaustive(const ResolutionGraph& g, const RatCycle& lprime) {
  if (!in_dual_lattice(g, lprime)) throw DomainError("NotInDualLattice", "l_dom needs l' in L'");
  int n = g.size();
  RatCycle x0 = neg(lprime);
  const RatCycle& zk = g.canonical();
  // Seed: the minimal y ∈ x0 + L_{>=0} with (y, E_v) <= min(0, (Z_K, E_v)/2),
  // an element of S' ∩ (Z_K/2 + S'_Q) ⊂ S'_dom, found by a Laufer-type sequence.
  std::vector<Q> cap(n);
  for (int v = 0; v < n; ++v) cap[v] = std::min(Q(0), Q(pairing_e(g, zk, v) / 2));
  RatCycle y = x0;
  IntCycle top(n, 0);
  while (true) {
    int hit = -1;
    for (int v = 0; v < n && hit < 0; ++v)
      if (pairing_e(g, y, v) > cap[v]) hit = v;
    if (hit < 0) break;
    y[hit] += 1;
    ++top[hit];
  }
  // Enumerate l in [0, top] with x0 + l ∈ S' (necessary for S'_dom) and take
  // the meet of the members; points above an already found member are skipped
  // since they cannot lower the meet.
  std::vector<int> close_at(n, 0);  // (x0+l, E_v) is determined once coords <= close_at[v] are fixed
  for (int v = 0; v < n; ++v) {
    close_at[v] = v;
    for (int w : g.neighbors(v)) close_at[v] = std::max(close_at[v], w);
  }
  std::vector<std::vector<int>> closing(n);
  for (int v = 0; v < n; ++v) closing[close_at[v]].push_back(v);

  Q lambda = graph_lambda(g);
  std::vector<IntCycle> members;
  IntCycle l(n, 0);
  RatCycle cur = x0;
  auto above_member = [&]() {
    for (const auto& m : members)
      if (leq(m, l)) return true;
    return false;
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      if (above_member()) return;
      if (in_sdom_lambda(g, cur, lambda)) members.push_back(l);
      return;
    }
    for (long long t = 0; t <= top[k]; ++t) {
      l[k] = t;
      cur[k] = x0[k] + make_q(t);
      bool ok = true;
      for (int v : closing[k])
        if (pairing_e(g, cur, v) > 0) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1);
    }
    l[k] = 0;
    cur[k] = x0[k];
  };
  rec(rec, 0);
  if (members.empty()) throw DomainError("NotStabilized", "no S'_dom member found below the seed");
  IntCycle m = members[0];
  for (const auto& c : members) m = meet(m, c);
  RatCycle check = x0;
  for (int v = 0; v < n; ++v) check[v] += make_q(m[v]);
  if (!in_sdom(g, check)) throw DomainError("NotStabilized", "meet of S'_dom members is not a member");
  return m;
}

IntCycle z_coh(const ResolutionGraph& g, const IntCycle& z, const RatCycle& lprime) {
  return min_chi_box(g, lprime, z).minimal_minimizer;
}

IntCycle z_coh_orthant(const ResolutionGraph& g, const RatCycle& lprime) {
  return min_chi_orthant(g, lprime).minimal_minimizer;
}

std::vector<std::vector<int>> components_of_complement(const ResolutionGraph& g, const std::vector<int>& subset) {
  std::vector<bool> in(g.size(), false);
  for (int v : subset) in[v] = true;
  std::vector<int> rest;
  for (int v = 0; v < g.size(); ++v)
    if (!in[v]) rest.push_back(v);
  return components(g, rest);
}

long long dim_V(const ResolutionGraph& g, const std::vector<int>& subset, long long pg_full,
                const std::vector<std::optional<long long>>& pg_components) {
  auto comps = components_of_complement(g, subset);
  long long total = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::optional<long long> pg;
    if (c < pg_components.size()) pg = pg_components[c];
    if (!pg) {
      ResolutionGraph sub = induced_subgraph(g, comps[c]);
      if (is_rational_graph(sub))
        pg = 0;
      else
        throw DomainError("ComponentNotSupported",
                          "p_g of the non-rational component containing '" + g.id(comps[c][0]) + "' is not supplied");
    }
    total += *pg;
  }
  return pg_full - total;
}

long long dim_V_from_h1(long long h1_z, long long h1_z_restricted) { return h1_z - h1_z_restricted; }

std::vector<int> spt_generators(const ResolutionGraph& g, const IntCycle& z, const RatCycle& lprime) {
  IntCycle zc = z_coh(g, z, lprime);
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v)
    if (zc[v] == 0) out.push_back(v);
  return out;
}

H1Bounds h1_bounds(const ResolutionGraph& g, const RatCycle& lprime, const IntCycle& z,
                   std::optional<long long> h1_oz) {
  require_z(z, g.size());
  if (!in_lipman_cone(g, neg(lprime))) throw DomainError("EcaEmpty", "h1_bounds requires -l' in S'");
  H1Bounds b;
  b.lower = generic_h1(g, lprime, z);
  b.h1_oz = h1_oz ? make_int(*h1_oz) : generic_h1(g, zero_cycle(g), z);
  b.upper = b.h1_oz + b.lower;
  b.h0_zero_bound = -chi(g, to_rat(z));
  return b;
}

}  // namespace plumbline
