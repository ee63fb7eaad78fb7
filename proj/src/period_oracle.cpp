#include "periods/period_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <tuple>

#include "periods/rng.hpp"

namespace periods::oracle {

using yoshida::MotiveTag;
using yoshida::PeriodSymbol;
using yoshida::SymbolKind;

namespace {

// c_p generators are expensive to construct relative to everything else in a
// trial, and depend only on (n, p, split). Construction is deterministic, so
// caching is observationally pure.
const invariant::InvariantPolynomial& cp_invariant(int n, int p,
                                                   std::pair<int, int> split) {
  static std::map<std::tuple<int, int, int, int>, invariant::InvariantPolynomial> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_tuple(n, p, split.first, split.second);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache
             .emplace(key, invariant::construct_invariant(
                               invariant::type_of_cp(n, p, split)))
             .first;
  return it->second;
}

}  // namespace

PeriodRealization random_realization(const HodgeData& h, std::uint64_t seed, int bound) {
  hodge::require_valid(h);
  hodge::FiltrationProfile profile = hodge::filtration_profile(h);
  hodge::BettiSplit split = hodge::betti_split(h);
  const int n = hodge::rank(h);
  Rng rng(derive_seed(seed, {0xA11CEu}));
  for (int attempt = 0; attempt < 100; ++attempt) {
    RationalMatrix m = random_matrix(rng, n, n, bound);
    if (determinant(m) == 0) continue;
    if (corner_minor(m, split.d_plus, CornerSide::Left) == 0) continue;
    if (corner_minor(m, split.d_minus, CornerSide::Right) == 0) continue;
    return PeriodRealization{std::move(profile), split, std::move(m)};
  }
  throw RetryExhaustedError("random_realization: retry cap exhausted");
}

InvariantValues invariant_values(const PeriodRealization& r) {
  if (!r.unit_profile())
    throw ValidationError("invariant_values: realization must have unit multiplicities");
  InvariantValues v;
  v.delta = determinant(r.matrix);
  v.c_plus = corner_minor(r.matrix, r.split.d_plus, CornerSide::Left);
  v.c_minus = corner_minor(r.matrix, r.split.d_minus, CornerSide::Right);
  if (v.delta == 0) throw ZeroMinorError("invariant_values: delta is zero");
  if (v.c_plus == 0) throw ZeroMinorError("invariant_values: c+ minor is zero");
  if (v.c_minus == 0) throw ZeroMinorError("invariant_values: c- minor is zero");
  const int n = r.dimension();
  const int pmax = std::min(r.split.d_plus, r.split.d_minus) - 1;
  for (int p = 1; p <= pmax; ++p)
    v.c_p[p] = invariant::evaluate(
        cp_invariant(n, p, {r.split.d_plus, r.split.d_minus}), r.matrix);
  return v;
}

PeriodRealization tensor_realization(const PeriodRealization& r,
                                     const PeriodRealization& r2) {
  if (!r.unit_profile() || !r2.unit_profile())
    throw ValidationError("tensor_realization: factors must have unit multiplicities");
  const int n = r.dimension();
  const int n2 = r2.dimension();

  // Rows by ascending total degree p_i + q_{i'}, ties lexicographic, so that
  // row suffixes span the tensor filtration steps.
  std::vector<std::tuple<int, int, int>> rows;
  rows.reserve(static_cast<std::size_t>(n) * n2);
  for (int i = 0; i < n; ++i)
    for (int i2 = 0; i2 < n2; ++i2)
      rows.emplace_back(r.profile.jumps[i] + r2.profile.jumps[i2], i, i2);
  std::sort(rows.begin(), rows.end());

  // Columns grouped by the conjugation sign of v_j (x) v_{j'}:
  // plus part (+,+) then (-,-), minus part (+,-) then (-,+).
  std::vector<std::tuple<int, int, int>> cols;
  cols.reserve(rows.size());
  for (int j = 0; j < n; ++j)
    for (int j2 = 0; j2 < n2; ++j2) {
      const bool plus1 = j < r.split.d_plus;
      const bool plus2 = j2 < r2.split.d_plus;
      const int part = plus1 == plus2 ? 0 : 1;
      const int sub = plus1 ? 0 : 1;
      cols.emplace_back(part * 2 + sub, j, j2);
    }
  std::sort(cols.begin(), cols.end());

  PeriodRealization out{hodge::FiltrationProfile{}, hodge::BettiSplit{},
                        RationalMatrix(n * n2, n * n2)};
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const auto [deg, i, i2] = rows[ri];
    if (out.profile.jumps.empty() || out.profile.jumps.back() != deg) {
      out.profile.jumps.push_back(deg);
      out.profile.mults.push_back(0);
    }
    ++out.profile.mults.back();
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      const auto& [key, j, j2] = cols[ci];
      out.matrix.at(static_cast<int>(ri), static_cast<int>(ci)) =
          r.matrix.at(i, j) * r2.matrix.at(i2, j2);
    }
  }
  for (const auto& c : cols)
    if (std::get<0>(c) < 2) ++out.split.d_plus;
  out.split.d_minus = static_cast<int>(cols.size()) - out.split.d_plus;
  return out;
}

std::optional<Rational> evaluate_expression(const PeriodExpression& expr,
                                            const InvariantValues& vx,
                                            const InvariantValues& vy) {
  Rational acc(1);
  for (const auto& [sym, e] : expr.factors) {
    const InvariantValues& v = sym.motive == MotiveTag::M ? vx : vy;
    const Rational* val = nullptr;
    switch (sym.kind) {
      case SymbolKind::Delta: val = &v.delta; break;
      case SymbolKind::CPlus: val = &v.c_plus; break;
      case SymbolKind::CMinus: val = &v.c_minus; break;
      case SymbolKind::CP: {
        auto it = v.c_p.find(sym.p);
        if (it == v.c_p.end()) throw ValidationError("expression uses undefined c_p");
        val = &it->second;
        break;
      }
    }
    if (*val == 0 && e < 0) return std::nullopt;
    acc *= rational_pow(*val, e);
  }
  return acc;
}

namespace {

struct TrialSample {
  InvariantValues vx, vy;
  Rational lhs_plus, lhs_minus;
};

// One resampling attempt. Returns nullopt when a tensor corner minor is zero.
std::optional<TrialSample> try_sample(const HodgeData& h, const HodgeData& h2,
                                      const OracleConfig& cfg, std::uint64_t stream,
                                      int trial, int attempt) {
  PeriodRealization rx = random_realization(
      h, derive_seed(cfg.seed, {stream, static_cast<std::uint64_t>(trial),
                                static_cast<std::uint64_t>(attempt), 0}),
      cfg.bound);
  PeriodRealization ry = random_realization(
      h2, derive_seed(cfg.seed, {stream, static_cast<std::uint64_t>(trial),
                                 static_cast<std::uint64_t>(attempt), 1}),
      cfg.bound);
  TrialSample s{invariant_values(rx), invariant_values(ry), Rational(0), Rational(0)};
  PeriodRealization z = tensor_realization(rx, ry);
  s.lhs_plus = corner_minor(z.matrix, z.split.d_plus, CornerSide::Left);
  s.lhs_minus = corner_minor(z.matrix, z.split.d_minus, CornerSide::Right);
  if (s.lhs_plus == 0 || s.lhs_minus == 0) return std::nullopt;
  return s;
}

bool all_equal(const std::vector<Rational>& xs) {
  for (const auto& x : xs)
    if (x != xs.front()) return false;
  return !xs.empty();
}

void require_critical_pair(const HodgeData& h, const HodgeData& h2, const char* who) {
  hodge::require_valid(h);
  hodge::require_valid(h2);
  if (!hodge::tensor_criticality(h, h2).critical)
    throw NotCriticalError(std::string(who) + ": tensor is not critical");
}

// Runs trials, pushing one accepted ratio pair per trial. `compute` returns
// false to reject the sample (zero denominators and analogue).
template <typename Compute>
void run_trials(const HodgeData& h, const HodgeData& h2, const OracleConfig& cfg,
                std::uint64_t stream, Compute&& compute) {
  for (int t = 0; t < cfg.trials; ++t) {
    bool done = false;
    for (int a = 0; a < cfg.retry_cap && !done; ++a) {
      std::optional<TrialSample> s = try_sample(h, h2, cfg, stream, t, a);
      if (!s) continue;
      done = compute(*s);
    }
    if (!done)
      throw RetryExhaustedError("oracle: persistent zero values after retry cap");
  }
}

}  // namespace

VerificationReport verify_theorem(const HodgeData& h, const HodgeData& h2,
                                  const OracleConfig& config, Variant variant) {
  require_critical_pair(h, h2, "verify_theorem");
  yoshida::FormulaPair formulas = yoshida::period_formula(h, h2, variant);

  VerificationReport rep;
  rep.kind = ReportKind::Theorem;
  rep.theorem_case = formulas.theorem_case;
  rep.variant = variant;
  rep.trials = config.trials;
  rep.seed = config.seed;
  rep.bound = config.bound;

  run_trials(h, h2, config, 0x7E0u, [&](const TrialSample& s) {
    std::optional<Rational> rhs_p = evaluate_expression(formulas.c_plus, s.vx, s.vy);
    std::optional<Rational> rhs_m = evaluate_expression(formulas.c_minus, s.vx, s.vy);
    if (!rhs_p || !rhs_m || *rhs_p == 0 || *rhs_m == 0) return false;
    rep.ratios_plus.push_back(s.lhs_plus / *rhs_p);
    rep.ratios_minus.push_back(s.lhs_minus / *rhs_m);
    return true;
  });

  rep.constant = all_equal(rep.ratios_plus) && all_equal(rep.ratios_minus);
  if (rep.constant) {
    rep.ratio_plus = rep.ratios_plus.front();
    rep.ratio_minus = rep.ratios_minus.front();
  }
  return rep;
}

VerificationReport verify_ratio_relation(const HodgeData& h, const HodgeData& h2,
                                         const OracleConfig& config) {
  require_critical_pair(h, h2, "verify_ratio_relation");
  PeriodExpression relation = yoshida::ratio_relation(h, h2);

  VerificationReport rep;
  rep.kind = ReportKind::Ratio;
  rep.theorem_case = yoshida::classify(h, h2);
  rep.trials = config.trials;
  rep.seed = config.seed;
  rep.bound = config.bound;

  run_trials(h, h2, config, 0x4A710u, [&](const TrialSample& s) {
    std::optional<Rational> rhs = evaluate_expression(relation, s.vx, s.vy);
    if (!rhs || *rhs == 0) return false;
    rep.ratios_plus.push_back(s.lhs_plus / s.lhs_minus / *rhs);
    return true;
  });

  rep.constant = all_equal(rep.ratios_plus);
  if (rep.constant) rep.ratio_plus = rep.ratios_plus.front();
  return rep;
}

namespace {

// Least squares via normal equations; nullopt when numerically singular.
std::optional<std::vector<double>> solve_least_squares(
    const std::vector<std::vector<double>>& a, const std::vector<double>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  std::vector<std::vector<double>> n(cols, std::vector<double>(cols + 1, 0.0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t r = 0; r < rows; ++r) n[i][j] += a[r][i] * a[r][j];
    for (std::size_t r = 0; r < rows; ++r) n[i][cols] += a[r][i] * b[r];
  }
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < cols; ++r)
      if (std::fabs(n[r][col]) > std::fabs(n[best][col])) best = r;
    if (std::fabs(n[best][col]) < 1e-9) return std::nullopt;
    std::swap(n[col], n[best]);
    for (std::size_t r = 0; r < cols; ++r) {
      if (r == col) continue;
      const double f = n[r][col] / n[col][col];
      for (std::size_t c = col; c <= cols; ++c) n[r][c] -= f * n[col][c];
    }
  }
  std::vector<double> x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = n[i][cols] / n[i][i];
  return x;
}

const Rational& candidate_value(const PeriodSymbol& sym, const InvariantValues& vx,
                                const InvariantValues& vy) {
  const InvariantValues& v = sym.motive == MotiveTag::M ? vx : vy;
  switch (sym.kind) {
    case SymbolKind::Delta: return v.delta;
    case SymbolKind::CPlus: return v.c_plus;
    case SymbolKind::CMinus: return v.c_minus;
    case SymbolKind::CP: return v.c_p.at(sym.p);
  }
  throw Error("unreachable");
}

}  // namespace

DiscoveryReport discover_exponents(const HodgeData& h, const HodgeData& h2,
                                   const OracleConfig& config) {
  require_critical_pair(h, h2, "discover_exponents");

  std::vector<PeriodSymbol> candidates;
  auto add_motive = [&candidates](const HodgeData& hd, MotiveTag tag) {
    candidates.push_back(yoshida::delta(tag));
    candidates.push_back(yoshida::c_plus(tag));
    candidates.push_back(yoshida::c_minus(tag));
    hodge::BettiSplit s = hodge::betti_split(hd);
    for (int p = 1; p <= std::min(s.d_plus, s.d_minus) - 1; ++p)
      candidates.push_back(yoshida::c_p(tag, p));
  };
  add_motive(h, MotiveTag::M);
  add_motive(h2, MotiveTag::M2);

  DiscoveryReport rep;
  rep.trials = config.trials;
  rep.seed = config.seed;
  rep.fit_trials = std::max<int>(config.trials, static_cast<int>(candidates.size()) + 3);

  // Sample the fitting table. Every candidate value must be nonzero so the
  // logarithms exist.
  std::vector<std::vector<Rational>> values(candidates.size());
  std::vector<Rational> lhs_plus, lhs_minus;
  OracleConfig fit_cfg = config;
  fit_cfg.trials = rep.fit_trials;
  run_trials(h, h2, fit_cfg, 0xD15Cu, [&](const TrialSample& s) {
    for (const PeriodSymbol& sym : candidates)
      if (candidate_value(sym, s.vx, s.vy) == 0) return false;
    for (std::size_t c = 0; c < candidates.size(); ++c)
      values[c].push_back(candidate_value(candidates[c], s.vx, s.vy));
    lhs_plus.push_back(s.lhs_plus);
    lhs_minus.push_back(s.lhs_minus);
    return true;
  });

  // Merge candidates with identical value vectors (e.g. delta = c+ for a
  // rank-1 factor) and drop constant ones, which are collinear with the
  // intercept.
  std::vector<int> kept;
  std::vector<int> merged_into(candidates.size(), -1);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    bool constant = true;
    for (const Rational& v : values[c])
      if (v != values[c].front()) {
        constant = false;
        break;
      }
    if (constant) {
      rep.notes.push_back("dropped constant candidate " + candidates[c].str());
      continue;
    }
    bool dup = false;
    for (int k : kept)
      if (values[k] == values[c]) {
        merged_into[c] = k;
        rep.notes.push_back("merged " + candidates[c].str() + " into " +
                            candidates[k].str() + " (identical values)");
        dup = true;
        break;
      }
    if (!dup) kept.push_back(static_cast<int>(c));
  }

  const std::size_t ncols = kept.size() + 1;  // + intercept for the scalar
  std::vector<std::vector<double>> a(lhs_plus.size(), std::vector<double>(ncols, 1.0));
  for (std::size_t r = 0; r < lhs_plus.size(); ++r)
    for (std::size_t c = 0; c < kept.size(); ++c)
      a[r][c] = std::log(std::fabs(values[kept[c]][r].get_d()));

  auto fit_sign = [&](const std::vector<Rational>& lhs,
                      PeriodExpression& out) -> bool {
    std::vector<double> b(lhs.size());
    for (std::size_t r = 0; r < lhs.size(); ++r)
      b[r] = std::log(std::fabs(lhs[r].get_d()));
    std::optional<std::vector<double>> x = solve_least_squares(a, b);
    if (!x) {
      rep.notes.push_back("least squares system singular");
      return false;
    }
    for (std::size_t c = 0; c < kept.size(); ++c) {
      const long e = std::lround((*x)[c]);
      if (std::fabs((*x)[c] - static_cast<double>(e)) > 0.25) {
        std::ostringstream os;
        os << "non-integer exponent fit " << (*x)[c] << " for "
           << candidates[kept[c]].str();
        rep.notes.push_back(os.str());
      }
      out.multiply(candidates[kept[c]], static_cast<int>(e));
    }
    return true;
  };

  if (!fit_sign(lhs_plus, rep.c_plus) || !fit_sign(lhs_minus, rep.c_minus)) {
    rep.confirmed = false;
    return rep;
  }

  // Exact confirmation on fresh samples: the discovered monomials must give a
  // constant nonzero rational ratio.
  std::vector<Rational> confirm_plus, confirm_minus;
  run_trials(h, h2, config, 0xC0F17Au, [&](const TrialSample& s) {
    std::optional<Rational> rp = evaluate_expression(rep.c_plus, s.vx, s.vy);
    std::optional<Rational> rm = evaluate_expression(rep.c_minus, s.vx, s.vy);
    if (!rp || !rm || *rp == 0 || *rm == 0) return false;
    confirm_plus.push_back(s.lhs_plus / *rp);
    confirm_minus.push_back(s.lhs_minus / *rm);
    return true;
  });
  rep.confirmed = all_equal(confirm_plus) && all_equal(confirm_minus);

  // Adjudicate against the closed formulas when they are defined.
  try {
    yoshida::FormulaPair led = yoshida::period_formula(h, h2, Variant::Ledger);
    yoshida::FormulaPair thm = yoshida::period_formula(h, h2, Variant::Theorem);
    const bool matches_led = rep.c_plus == led.c_plus && rep.c_minus == led.c_minus;
    const bool matches_thm = rep.c_plus == thm.c_plus && rep.c_minus == thm.c_minus;
    if (matches_led && matches_thm)
      rep.matches_variant = "both";
    else if (matches_led)
      rep.matches_variant = "ledger";
    else if (matches_thm)
      rep.matches_variant = "theorem";
    else
      rep.matches_variant = "neither";
  } catch (const UnsupportedRankError&) {
    rep.matches_variant = "n/a";
  }

  // Even (x) odd inputs: express the discovered c+ exponents as a ledger.
  const bool first_even = hodge::rank(h) % 2 == 0;
  if (first_even != (hodge::rank(h2) % 2 == 0)) {
    const MotiveTag tagE = first_even ? MotiveTag::M : MotiveTag::M2;
    const MotiveTag tagO = first_even ? MotiveTag::M2 : MotiveTag::M;
    yoshida::ExponentLedger led;
    auto exp_of = [&](const PeriodSymbol& sym) {
      auto it = rep.c_plus.factors.find(sym);
      return it == rep.c_plus.factors.end() ? 0 : it->second;
    };
    led.alpha = exp_of(yoshida::delta(tagE));
    led.alpha_plus = exp_of(yoshida::c_plus(tagE));
    led.alpha_minus = exp_of(yoshida::c_minus(tagE));
    led.beta = exp_of(yoshida::delta(tagO));
    led.beta_plus = exp_of(yoshida::c_plus(tagO));
    led.beta_minus = exp_of(yoshida::c_minus(tagO));
    const HodgeData& he = first_even ? h : h2;
    const HodgeData& ho = first_even ? h2 : h;
    for (int p = 1; p <= hodge::rank(he) / 2 - 1; ++p)
      led.alpha_p[p] = exp_of(yoshida::c_p(tagE, p));
    for (int p = 1; p <= (hodge::rank(ho) - 1) / 2 - 1; ++p)
      led.beta_p[p] = exp_of(yoshida::c_p(tagO, p));
    rep.ledger = led;
  }
  return rep;
}

}  // namespace periods::oracle
