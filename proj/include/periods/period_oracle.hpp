#ifndef PERIODS_PERIOD_ORACLE_HPP
#define PERIODS_PERIOD_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "periods/hodge_core.hpp"
#include "periods/rational_matrix.hpp"
#include "periods/yoshida.hpp"

namespace periods::oracle {

using hodge::HodgeData;
using yoshida::PeriodExpression;
using yoshida::TheoremCase;
using yoshida::Variant;

// A period matrix in the fixed basis convention:
//   X[i][j] = coefficient of de Rham basis vector w_i in the image of Betti
//   vector v_j.
// Rows follow the filtration profile (the suffix w_t, ..., w_d spans each
// deeper filtration step), columns put the +1 eigenvectors of conjugation
// first. Filtration-preserving de Rham basis changes then act by block lower
// triangular matrices on the left, Betti sign-block changes on the right.
struct PeriodRealization {
  hodge::FiltrationProfile profile;
  hodge::BettiSplit split;
  RationalMatrix matrix;

  int dimension() const { return matrix.rows(); }
  bool unit_profile() const {
    for (int u : profile.mults)
      if (u != 1) return false;
    return true;
  }
};

// delta = det X, c+/- = corner minors, c_p = the normalized equivariant
// invariants for p in {1, ..., min(d+,d-)-1}.
struct InvariantValues {
  Rational delta;
  Rational c_plus;
  Rational c_minus;
  std::map<int, Rational> c_p;
};

struct OracleConfig {
  int trials = 5;
  std::uint64_t seed = 0;
  int bound = 10;
  int retry_cap = 100;
};

// Invertible integer-entry realization with nonzero corner minors.
PeriodRealization random_realization(const HodgeData& h, std::uint64_t seed,
                                     int bound = 10);

// Throws ZeroMinorError if delta or a corner minor vanishes (caller resamples).
InvariantValues invariant_values(const PeriodRealization& r);

// Kronecker product with rows sorted by total filtration degree (ties
// lexicographic) and columns grouped by conjugation sign pairs:
// (+,+) then (-,-), then (+,-) then (-,+), lexicographic inside each group.
PeriodRealization tensor_realization(const PeriodRealization& r,
                                     const PeriodRealization& r2);

enum class ReportKind { Theorem, Ratio };

struct VerificationReport {
  ReportKind kind = ReportKind::Theorem;
  TheoremCase theorem_case = TheoremCase::PR1;
  std::optional<Variant> variant;
  int trials = 0;
  std::uint64_t seed = 0;
  int bound = 10;
  bool constant = false;
  // Theorem reports carry one ratio per sign; ratio reports only the plus list.
  std::vector<Rational> ratios_plus;
  std::vector<Rational> ratios_minus;
  std::optional<Rational> ratio_plus;
  std::optional<Rational> ratio_minus;
};

// Per trial, compares the corner minors of a random tensor realization against
// the predicted monomial evaluated on the factor invariants. The theorem holds
// modulo a rational scalar, so the acceptance signal is a constant nonzero
// ratio across all trials (exact polynomial identity testing).
VerificationReport verify_theorem(const HodgeData& h, const HodgeData& h2,
                                  const OracleConfig& config, Variant variant);

// Same, for the ratio c+(Z)/c-(Z) against the formal ratio relation. This
// test is variant independent.
VerificationReport verify_ratio_relation(const HodgeData& h, const HodgeData& h2,
                                         const OracleConfig& config);

struct DiscoveryReport {
  PeriodExpression c_plus;
  PeriodExpression c_minus;
  bool confirmed = false;
  // "ledger", "theorem", "both", "neither", or "n/a" when the closed formula
  // does not cover the input (rank-1 factors).
  std::string matches_variant = "n/a";
  std::optional<yoshida::ExponentLedger> ledger;  // even (x) odd inputs only
  int trials = 0;
  int fit_trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

// Fits unknown integer exponents for the candidate invariants of both factors
// in log coordinates, rounds, then confirms the candidate monomials exactly.
DiscoveryReport discover_exponents(const HodgeData& h, const HodgeData& h2,
                                   const OracleConfig& config);

// Evaluates a formal monomial on the invariant values of the two factors.
// Returns nullopt when a negative exponent meets a zero value.
std::optional<Rational> evaluate_expression(const PeriodExpression& expr,
                                            const InvariantValues& vx,
                                            const InvariantValues& vy);

}  // namespace periods::oracle

#endif
