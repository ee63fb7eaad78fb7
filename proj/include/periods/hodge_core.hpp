#ifndef PERIODS_HODGE_CORE_HPP
#define PERIODS_HODGE_CORE_HPP

#include <optional>
#include <string>
#include <vector>

#include "periods/errors.hpp"

namespace periods::hodge {

// Combinatorial stand-in for a pure motive over Q with unit Hodge numbers:
// purity weight w, strictly increasing Hodge types p_1 < ... < p_n with
// h^{p_i, w-p_i} = 1, and (odd rank only) the sign of complex conjugation on
// the middle type H^{w/2,w/2}.
struct HodgeData {
  int weight = 0;
  std::vector<int> types;
  std::optional<int> middle_sign;  // +1 or -1, present iff rank is odd
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Hodge filtration shape: strictly increasing jump degrees r_1 < ... < r_m
// and step dimensions u_t = dim F^{r_t}/F^{r_{t+1}} >= 1.
struct FiltrationProfile {
  std::vector<int> jumps;
  std::vector<int> mults;

  int total_dimension() const {
    int s = 0;
    for (int u : mults) s += u;
    return s;
  }
};

// Dimensions of the +1 / -1 eigenspaces of complex conjugation on the Betti
// realization.
struct BettiSplit {
  int d_plus = 0;
  int d_minus = 0;

  int total() const { return d_plus + d_minus; }
};

// Criticality: prefix sums of the profile hit d_plus at index k_plus and
// d_minus at k_minus (1-based, and unique since all mults are positive).
struct CriticalityResult {
  bool critical = false;
  std::optional<int> k_plus;
  std::optional<int> k_minus;

  bool has_k0() const { return critical && k_plus == k_minus; }
};

ValidationReport validate(const HodgeData& h);

// Throws ValidationError listing every violated invariant.
void require_valid(const HodgeData& h);

inline int rank(const HodgeData& h) { return static_cast<int>(h.types.size()); }

// d_plus - d_minus: 0 for even rank, the middle sign for odd rank.
int epsilon(const HodgeData& h);

BettiSplit betti_split(const HodgeData& h);

FiltrationProfile filtration_profile(const HodgeData& h);

// Filtration of the tensor product: jumps are the distinct values p_i + q_j,
// multiplicities count the pairs realizing each value.
FiltrationProfile tensor_profile(const HodgeData& h, const HodgeData& h2);

// Sign-pair product rule: d_plus = d+d+' + d-d-', d_minus = d+d-' + d-d+'.
BettiSplit tensor_betti_split(const HodgeData& h, const HodgeData& h2);

// Works for any profile/split with matching totals, not only unit mults.
CriticalityResult criticality(const FiltrationProfile& profile, const BettiSplit& split);

// Convenience: criticality of the tensor of two valid HodgeData.
CriticalityResult tensor_criticality(const HodgeData& h, const HodgeData& h2);

}  // namespace periods::hodge

#endif
