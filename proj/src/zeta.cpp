#include "plumbline/zeta.hpp"

#include <algorithm>
#include <functional>

#include "plumbline/error.hpp"

namespace plumbline {

namespace {

using i128 = __int128;

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("Overflow", "counting DP exceeded 128-bit range");
  return r;
}

void checked_add(i128& acc, i128 v) {
  if (__builtin_add_overflow(acc, v, &acc)) throw DomainError("Overflow", "counting DP exceeded 128-bit range");
}

Int to_int128(i128 v) {
  bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Int lo(static_cast<unsigned long>(static_cast<unsigned long long>(u)));
  Int hi(static_cast<unsigned long>(static_cast<unsigned long long>(u >> 64)));
  Int r = hi * Int("18446744073709551616") + lo;
  return negative ? Int(-r) : r;
}

i128 binom_small(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  i128 r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

i128 weight(int degree, long long a) {
  if (a < 0) return 0;
  if (degree == 0) return a + 1;
  if (degree == 1) return 1;
  if (degree == 2) return a == 0 ? 1 : 0;
  i128 b = binom_small(degree - 2, a);
  return (a % 2 == 0) ? b : -b;
}

RatCycle exponent_cycle(const ResolutionGraph& g, const std::vector<long long>& a) {
  RatCycle x = zero_cycle(g);
  for (int w = 0; w < g.size(); ++w)
    if (a[w] != 0)
      for (int v = 0; v < g.size(); ++v) x[v] += make_q(a[w]) * g.dual_base()[w][v];
  return x;
}

std::vector<int> all_vertices(const ResolutionGraph& g) {
  std::vector<int> all(g.size());
  for (int v = 0; v < g.size(); ++v) all[v] = v;
  return all;
}

}  // namespace

Int factor_coefficient(int degree, long long a) { return to_int128(weight(degree, a)); }

ExpSeries expand_Z(const ResolutionGraph& g, const std::vector<long long>& bound) {
  int n = g.size();
  if (static_cast<int>(bound.size()) != n) throw DomainError("ParseError", "bound has wrong length");
  ExpSeries s;
  s.bound = bound;
  // Tensor product of the univariate factors, skipping vanishing coefficients.
  std::vector<std::vector<std::pair<long long, Int>>> factors(n);
  for (int v = 0; v < n; ++v) {
    if (bound[v] < 0) throw DomainError("BadRange", "negative truncation bound");
    for (long long a = 0; a <= bound[v]; ++a) {
      Int c = factor_coefficient(g.degree(v), a);
      if (c != 0) factors[v].emplace_back(a, c);
    }
  }
  std::vector<long long> a(n, 0);
  std::function<void(int, const Int&)> rec = [&](int v, const Int& c) {
    if (v == n) {
      s.terms.emplace(a, c);
      return;
    }
    for (const auto& [e, coeff] : factors[v]) {
      a[v] = e;
      rec(v + 1, c * coeff);
    }
    a[v] = 0;
  };
  rec(0, Int(1));
  return s;
}

Int coefficient(const ResolutionGraph& g, const ExpSeries& series, const RatCycle& lprime) {
  RatCycle a = dual_coords(g, lprime);
  std::vector<long long> key(g.size());
  for (int v = 0; v < g.size(); ++v) {
    if (!is_integer(a[v])) throw DomainError("NotInDualLattice", "exponent " + format_cycle(lprime) + " is not in L'");
    if (a[v] < 0) return 0;  // outside S'
    key[v] = to_ll(a[v].get_num());
  }
  for (int v = 0; v < g.size(); ++v)
    if (key[v] > series.bound[v])
      throw DomainError("ExponentOutOfBound", "exponent beyond truncation at vertex '" + g.id(v) + "'");
  auto it = series.terms.find(key);
  return it == series.terms.end() ? Int(0) : it->second;
}

ExpSeries class_part(const ResolutionGraph& g, const ExpSeries& series, const RatCycle& h) {
  RatCycle target = class_rep(g, h);
  ExpSeries out;
  out.bound = series.bound;
  for (const auto& [a, c] : series.terms)
    if (class_rep(g, exponent_cycle(g, a)) == target) out.terms.emplace(a, c);
  return out;
}

std::vector<long long> coverage_caps(const ResolutionGraph& g, const IntCycle& l_target, const std::vector<int>& coords) {
  std::vector<long long> caps(g.size(), 0);
  for (int w = 0; w < g.size(); ++w) {
    Q best = 0;
    for (int u : coords) best = std::max(best, Q(make_q(l_target[u]) / g.dual_base()[w][u]));
    caps[w] = to_ll(ceil_q(best));
  }
  return caps;
}

std::vector<long long> coverage_caps(const ResolutionGraph& g, const IntCycle& l_target) {
  return coverage_caps(g, l_target, all_vertices(g));
}

namespace {

Int brute_count(const ResolutionGraph& g, const ExpSeries& series, const std::vector<int>& coords,
                const IntCycle& l_target) {
  auto caps = coverage_caps(g, l_target, coords);
  for (int w = 0; w < g.size(); ++w)
    if (series.bound[w] < caps[w] - 1)
      throw DomainError("BoundInsufficient", "truncation at '" + g.id(w) + "' is " + std::to_string(series.bound[w]) +
                                                 ", need at least " + std::to_string(caps[w] - 1));
  Int total = 0;
  for (const auto& [a, c] : series.terms) {
    RatCycle x = exponent_cycle(g, a);
    if (!all_integral(x)) continue;
    bool geq = true;
    for (int u : coords)
      if (x[u] < make_q(l_target[u])) {
        geq = false;
        break;
      }
    if (!geq) total += c;
  }
  return total;
}

// Tree DP for Σ_{x ∈ L ∩ S', x|_F ≱ l|_F} ∏_v c_v(-(x, E_v)).
Int dp_count(const ResolutionGraph& g, const std::vector<int>& flagged, const IntCycle& l) {
  int n = g.size();
  std::vector<bool> flag(n, false);
  std::vector<int> active;  // flagged vertices with l_u >= 1
  for (int u : flagged)
    if (l[u] >= 1) {
      flag[u] = true;
      active.push_back(u);
    }
  if (active.empty()) return 0;
  // x|_F ≱ l|_F means x_u <= l_u - 1 for some u ∈ F, and then
  // x_v <= max_w (E*_{w,v} / E*_{w,u}) x_u for every v.
  std::vector<long long> xmax(n, 0);
  const auto& es = g.dual_base();
  for (int v = 0; v < n; ++v) {
    Q best = 0;
    for (int u : active)
      for (int w = 0; w < n; ++w) best = std::max(best, Q(es[w][v] / es[w][u] * make_q(l[u] - 1)));
    xmax[v] = to_ll(floor_q(best));
  }
  // Root at a vertex of maximal degree; orient the tree.
  int root = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > g.degree(root)) root = v;
  std::vector<int> parent(n, -1), order;
  std::vector<int> stack{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        stack.push_back(w);
      }
  }
  // table[c][(x_c * (X_p + 1) + x_p) * 2 + f]: sum over the subtree below c
  // (including c's own weight) given x_c, the parent's value x_p and flag f.
  std::vector<std::vector<i128>> table(n);
  i128 total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int c = *it;
    int p = parent[c];
    long long xp_max = p < 0 ? 0 : xmax[p];
    std::vector<int> kids;
    for (int w : g.neighbors(c))
      if (w != p) kids.push_back(w);
    long long kid_sum = 0;
    for (int d : kids) kid_sum += xmax[d];
    std::vector<i128>& out = table[c];
    out.assign(static_cast<std::size_t>((xmax[c] + 1) * (xp_max + 1) * 2), 0);
    long long ec = g.euler(c);
    int deg = g.degree(c);
    for (long long xc = 0; xc <= xmax[c]; ++xc) {
      long long smax = std::min(-ec * xc, kid_sum);
      if (smax < 0) continue;
      // Distribution of (Σ children x_d, flag) below c.
      std::vector<i128> vec(static_cast<std::size_t>((smax + 1) * 2), 0);
      vec[0] = 1;
      for (int d : kids) {
        std::vector<i128> nxt(vec.size(), 0);
        const std::vector<i128>& td = table[d];
        long long dp_max = xmax[c];
        for (long long s = 0; s <= smax; ++s)
          for (int f = 0; f < 2; ++f) {
            i128 base = vec[s * 2 + f];
            if (base == 0) continue;
            for (long long xd = 0; xd <= std::min(xmax[d], smax - s); ++xd)
              for (int fd = 0; fd < 2; ++fd) {
                i128 val = td[static_cast<std::size_t>((xd * (dp_max + 1) + xc) * 2 + fd)];
                if (val == 0) continue;
                checked_add(nxt[(s + xd) * 2 + (f | fd)], checked_mul(base, val));
              }
          }
        vec.swap(nxt);
      }
      int own = (flag[c] && xc < l[c]) ? 1 : 0;
      for (long long xp = 0; xp <= xp_max; ++xp)
        for (long long s = 0; s <= smax; ++s)
          for (int f = 0; f < 2; ++f) {
            i128 base = vec[s * 2 + f];
            if (base == 0) continue;
            i128 w = weight(deg, -ec * xc - xp - s);
            if (w == 0) continue;
            checked_add(out[static_cast<std::size_t>((xc * (xp_max + 1) + xp) * 2 + (f | own))], checked_mul(base, w));
          }
    }
    for (int d : kids) std::vector<i128>().swap(table[d]);
    if (p < 0)
      for (long long xc = 0; xc <= xmax[c]; ++xc) checked_add(total, out[static_cast<std::size_t>(xc * 2 + 1)]);
  }
  return to_int128(total);
}

}  // namespace

Int counting_sigma(const ResolutionGraph& g, const ExpSeries& series, const IntCycle& l_target) {
  return brute_count(g, series, all_vertices(g), l_target);
}

Int reduced_counting(const ResolutionGraph& g, const ExpSeries& series, const std::vector<int>& subset,
                     const IntCycle& l_target) {
  return brute_count(g, series, subset, l_target);
}

Int counting_sigma_dp(const ResolutionGraph& g, const IntCycle& l_target) {
  return dp_count(g, all_vertices(g), l_target);
}

Int reduced_counting_dp(const ResolutionGraph& g, const std::vector<int>& subset, const IntCycle& l_target) {
  return dp_count(g, subset.empty() ? all_vertices(g) : subset, l_target);
}

std::vector<int> dual_support(const ResolutionGraph& g, const IntCycle& l) {
  std::vector<int> s;
  for (int v = 0; v < g.size(); ++v) {
    long long p = pairing_e(g, l, v);
    if (p > 0) throw DomainError("HypothesisViolated", "cycle is not in the Lipman cone");
    if (p < 0) s.push_back(v);
  }
  return s;
}

long long dual_order(const ResolutionGraph& g, int v) {
  Int d = 1;
  for (const Q& q : g.dual_base()[v]) d = lcm(d, q.get_den());
  return to_ll(d);
}

PeriodicConstant periodic_constant(const ResolutionGraph& g, const IntCycle& l, long long n0, long long n1) {
  if (n0 < 1 || n1 < n0 + 1) throw DomainError("BadRange", "need 1 <= n0 < n1");
  std::vector<int> support = dual_support(g, l);
  if (support.empty()) throw DomainError("HypothesisViolated", "l must be a nonzero element of S'");
  PeriodicConstant pc;
  long long len = n1 - n0 + 1;
  pc.window = std::max<long long>(2, (len + 2) / 3);
  for (long long n = n0; n <= n1; ++n) {
    IntCycle nl(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) nl[i] = n * l[i];
    PeriodicRow row;
    row.n = n;
    row.sigma = counting_sigma_dp(g, nl);
    row.reduced_sigma = reduced_counting_dp(g, support, nl);
    row.chi = chi(g, nl);
    row.diff = row.sigma - row.chi;
    pc.table.push_back(row);
  }
  const Int& last = pc.table.back().diff;
  long long first = n1;
  for (auto it = pc.table.rbegin(); it != pc.table.rend() && it->diff == last; ++it) first = it->n;
  if (n1 - first + 1 < pc.window)
    throw DomainError("NotStabilized", "σ(nl) - χ(nl) is not constant on the last " + std::to_string(pc.window) +
                                           " values of [" + std::to_string(n0) + ", " + std::to_string(n1) + "]");
  pc.constant = last;
  pc.stabilization_n = first;
  return pc;
}

}  // namespace plumbline
