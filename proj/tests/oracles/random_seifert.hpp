// Seeded random Seifert data with negative orbifold Euler number and a
// bounded geometric genus, shared by the property tests and the acceptance run.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "plumbline/seifert.hpp"

namespace plumbline::testing {

inline SeifertData random_seifert(std::mt19937_64& rng, long long pg_max = 12, long long pg_min = 1) {
  std::uniform_int_distribution<int> legs_d(3, 5), alpha_d(2, 9), extra_d(0, 1);
  while (true) {
    SeifertData sd;
    int nu = legs_d(rng);
    Q sum = 0;
    for (int j = 0; j < nu; ++j) {
      long long a = alpha_d(rng), w;
      do {
        w = std::uniform_int_distribution<long long>(1, a - 1)(rng);
      } while (std::gcd(a, w) != 1);
      sd.legs.push_back({a, w});
      sum += make_q(w, a);
    }
    // Smallest b0 with e = -b0 + Σ ω/α < 0, plus 0 or 1.
    sd.b0 = to_ll(floor_q(sum)) + 1 + extra_d(rng);
    long long pg = wh_invariants(sd).pg;
    if (pg >= pg_min && pg <= pg_max) return sd;
  }
}

// Distinct small rationals (numerator in [-50, 50], denominator in [1, 7])
// avoiding `avoid`.
inline std::vector<Q> random_rationals(std::mt19937_64& rng, std::size_t count, std::vector<Q> avoid = {}) {
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

}  // namespace plumbline::testing
