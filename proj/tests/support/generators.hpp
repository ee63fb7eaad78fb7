#ifndef PERIODS_TESTS_GENERATORS_HPP
#define PERIODS_TESTS_GENERATORS_HPP

#include <set>
#include <vector>

#include "periods/hodge_core.hpp"
#include "periods/rng.hpp"

namespace periods::testing {

// Random valid HodgeData: strictly increasing types satisfying the pairing
// p_i + p_{n+1-i} = w, with a middle sign for odd rank.
inline hodge::HodgeData random_hodge(Rng& rng, int max_rank = 5, int spread = 6) {
  const int n = rng.uniform_int(1, max_rank);
  const int half = n / 2;
  std::set<int> picked;
  while (static_cast<int>(picked.size()) < half)
    picked.insert(rng.uniform_int(-spread, spread));
  std::vector<int> low(picked.begin(), picked.end());
  const int gap = rng.uniform_int(1, 3);

  hodge::HodgeData h;
  if (n % 2 == 1) {
    const int mid = half > 0 ? low.back() + gap : rng.uniform_int(-spread, spread);
    h.weight = 2 * mid;
    h.types = low;
    h.types.push_back(mid);
    for (int i = half - 1; i >= 0; --i) h.types.push_back(h.weight - low[i]);
    h.middle_sign = rng.uniform_int(0, 1) == 0 ? 1 : -1;
  } else {
    h.weight = 2 * low.back() + gap;
    h.types = low;
    for (int i = half - 1; i >= 0; --i) h.types.push_back(h.weight - low[i]);
  }
  return h;
}

inline hodge::HodgeData make_hodge(int weight, std::vector<int> types,
                                   std::optional<int> sign = std::nullopt) {
  hodge::HodgeData h;
  h.weight = weight;
  h.types = std::move(types);
  h.middle_sign = sign;
  return h;
}

}  // namespace periods::testing

#endif
