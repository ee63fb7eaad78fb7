#include "periods/hodge_core.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace periods::hodge {

ValidationReport validate(const HodgeData& h) {
  ValidationReport rep;
  auto fail = [&rep](const std::string& name) {
    rep.ok = false;
    rep.violations.push_back(name);
  };

  const int n = rank(h);
  if (n == 0) {
    fail("types_nonempty");
    return rep;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (h.types[i] >= h.types[i + 1]) {
      fail("types_strictly_increasing");
      break;
    }
  for (int i = 0; i < n; ++i)
    if (h.types[i] + h.types[n - 1 - i] != h.weight) {
      fail("pairing");
      break;
    }
  if (n % 2 == 1) {
    if (h.weight % 2 != 0) fail("odd_rank_even_weight");
    if (h.weight % 2 == 0 && h.types[(n - 1) / 2] != h.weight / 2) fail("middle_type");
    if (!h.middle_sign.has_value())
      fail("middle_sign_required");
    else if (*h.middle_sign != 1 && *h.middle_sign != -1)
      fail("middle_sign_value");
  } else if (h.middle_sign.has_value()) {
    fail("middle_sign_forbidden");
  }
  return rep;
}

void require_valid(const HodgeData& h) {
  ValidationReport rep = validate(h);
  if (rep.ok) return;
  std::ostringstream os;
  os << "invalid HodgeData:";
  for (const auto& v : rep.violations) os << " " << v;
  throw ValidationError(os.str());
}

int epsilon(const HodgeData& h) {
  return rank(h) % 2 == 0 ? 0 : *h.middle_sign;
}

BettiSplit betti_split(const HodgeData& h) {
  require_valid(h);
  const int n = rank(h);
  BettiSplit s;
  if (n % 2 == 0) {
    s.d_plus = s.d_minus = n / 2;
  } else {
    s.d_plus = (n - 1) / 2 + (*h.middle_sign == 1 ? 1 : 0);
    s.d_minus = (n - 1) / 2 + (*h.middle_sign == -1 ? 1 : 0);
  }
  return s;
}

FiltrationProfile filtration_profile(const HodgeData& h) {
  require_valid(h);
  FiltrationProfile p;
  p.jumps = h.types;
  p.mults.assign(h.types.size(), 1);
  return p;
}

FiltrationProfile tensor_profile(const HodgeData& h, const HodgeData& h2) {
  require_valid(h);
  require_valid(h2);
  std::map<int, int> counts;
  for (int p : h.types)
    for (int q : h2.types) ++counts[p + q];
  FiltrationProfile out;
  for (const auto& [deg, cnt] : counts) {
    out.jumps.push_back(deg);
    out.mults.push_back(cnt);
  }
  return out;
}

BettiSplit tensor_betti_split(const HodgeData& h, const HodgeData& h2) {
  BettiSplit a = betti_split(h);
  BettiSplit b = betti_split(h2);
  BettiSplit out;
  out.d_plus = a.d_plus * b.d_plus + a.d_minus * b.d_minus;
  out.d_minus = a.d_plus * b.d_minus + a.d_minus * b.d_plus;
  return out;
}

CriticalityResult criticality(const FiltrationProfile& profile, const BettiSplit& split) {
  if (profile.total_dimension() != split.total())
    throw DimensionError("criticality: profile and split totals disagree");
  CriticalityResult res;
  int prefix = 0;
  for (std::size_t t = 0; t < profile.mults.size(); ++t) {
    prefix += profile.mults[t];
    if (prefix == split.d_plus) res.k_plus = static_cast<int>(t) + 1;
    if (prefix == split.d_minus) res.k_minus = static_cast<int>(t) + 1;
  }
  res.critical = res.k_plus.has_value() && res.k_minus.has_value();
  if (!res.critical) {
    res.k_plus.reset();
    res.k_minus.reset();
  }
  return res;
}

CriticalityResult tensor_criticality(const HodgeData& h, const HodgeData& h2) {
  return criticality(tensor_profile(h, h2), tensor_betti_split(h, h2));
}

}  // namespace periods::hodge
