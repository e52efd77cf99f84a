// Sampling helpers and brute-force oracles shared by the lattice tests and
// the acceptance runner.
#pragma once

#include <functional>
#include <random>
#include <vector>

#include "plumbline/graph.hpp"
#include "plumbline/lattice.hpp"

namespace plumbline::testing {

// Σ a_v E*_v with a_v uniform in [lo, hi].
inline RatCycle random_dual_cycle(const ResolutionGraph& g, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  RatCycle a(g.size());
  for (auto& c : a) c = dist(rng);
  return from_dual_coords(g, a);
}

inline IntCycle random_int_cycle(int n, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntCycle l(n);
  for (auto& c : l) c = dist(rng);
  return l;
}

// Calls f on every integer cycle 0 <= l <= upper.
inline void for_each_in_box(const IntCycle& upper, const std::function<void(const IntCycle&)>& f) {
  const int n = static_cast<int>(upper.size());
  IntCycle l(n, 0);
  while (true) {
    f(l);
    int i = 0;
    while (i < n && l[i] == upper[i]) l[i++] = 0;
    if (i == n) return;
    ++l[i];
  }
}

inline bool in_lipman_cone_int(const ResolutionGraph& g, const IntCycle& x) {
  for (int v = 0; v < g.size(); ++v)
    if (pairing_e(g, x, v) > 0) return false;
  return true;
}

// χ(x) for a rational x shifted by an integer l.
inline Q chi_shift(const ResolutionGraph& g, const RatCycle& x, const IntCycle& l) {
  return chi(g, add(x, to_rat(l)));
}

// Brute-force membership tests on a box (sound only when the box contains
// every relevant l; used on small graphs with known bounds).
inline bool sdom_on_box(const ResolutionGraph& g, const RatCycle& x, const IntCycle& upper) {
  bool ok = true;
  for_each_in_box(upper, [&](const IntCycle& l) {
    if (!ok || !is_effective_nonzero(l)) return;
    RatCycle lr = to_rat(l);
    if (!(chi(g, lr) > pairing(g, x, lr))) ok = false;
  });
  return ok;
}

inline bool van_on_box(const ResolutionGraph& g, const RatCycle& x, const IntCycle& upper) {
  Q base = chi(g, x);
  bool ok = true;
  for_each_in_box(upper, [&](const IntCycle& l) {
    if (ok && chi_shift(g, x, l) < base) ok = false;
  });
  return ok;
}

}  // namespace plumbline::testing
