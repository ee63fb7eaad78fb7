#ifndef PERIODS_YOSHIDA_HPP
#define PERIODS_YOSHIDA_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "periods/hodge_core.hpp"
#include "periods/invariant_engine.hpp"

namespace periods::yoshida {

using hodge::HodgeData;

// a_i = #{ j : p_i + q_j <= threshold },  a*_j = #{ i : p_i + q_j <= threshold }.
struct ACounts {
  std::vector<int> a;       // indexed by the types of the first motive
  std::vector<int> a_star;  // indexed by the types of the second motive
  int threshold = 0;
};

// Counts at both thresholds r_{k+}, r_{k-} of an odd-rank tensor.
struct SignedCounts {
  ACounts plus;
  ACounts minus;
  int k_plus = 0;
  int k_minus = 0;
};

enum class SymbolKind { Delta, CPlus, CMinus, CP };
enum class MotiveTag { M, M2 };

struct PeriodSymbol {
  SymbolKind kind = SymbolKind::Delta;
  MotiveTag motive = MotiveTag::M;
  int p = 0;  // only meaningful for kind CP

  // Canonical order: all of M before M2, delta < c+ < c- < c_p, p ascending.
  friend std::strong_ordering operator<=>(const PeriodSymbol& a, const PeriodSymbol& b) {
    if (auto c = a.motive <=> b.motive; c != 0) return c;
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.p <=> b.p;
  }
  friend bool operator==(const PeriodSymbol&, const PeriodSymbol&) = default;

  std::string str() const;  // e.g. "c+(M)", "c_1(M2)"
};

inline PeriodSymbol delta(MotiveTag m) { return {SymbolKind::Delta, m, 0}; }
inline PeriodSymbol c_plus(MotiveTag m) { return {SymbolKind::CPlus, m, 0}; }
inline PeriodSymbol c_minus(MotiveTag m) { return {SymbolKind::CMinus, m, 0}; }
inline PeriodSymbol c_p(MotiveTag m, int p) { return {SymbolKind::CP, m, p}; }

// Formal monomial with integer exponents in the period symbols of the two
// factors. Zero exponents are never stored.
struct PeriodExpression {
  std::map<PeriodSymbol, int> factors;

  void multiply(const PeriodSymbol& sym, int exp) {
    if (exp == 0) return;
    auto [it, inserted] = factors.emplace(sym, exp);
    if (!inserted) {
      it->second += exp;
      if (it->second == 0) factors.erase(it);
    }
  }

  PeriodExpression operator*(const PeriodExpression& o) const;
  PeriodExpression operator/(const PeriodExpression& o) const;
  bool operator==(const PeriodExpression&) const = default;

  bool is_one() const { return factors.empty(); }
  std::string str() const;  // human form, e.g. "δ(M)^1 · c+(M)^1"
};

enum class TheoremCase { PR1, PR2, PR3 };
enum class Variant { Ledger, Theorem };

std::string to_string(TheoremCase c);
std::string to_string(Variant v);

// Exponents of Eq-style monomials in the even (x) odd case: c+ of the tensor
// equals delta(M)^alpha delta(M')^beta c+(M)^alpha_plus c-(M)^alpha_minus
// [c+(M') c-(M')]^beta_pm and the finer factors with exponents alpha_p/beta_p.
struct ExponentLedger {
  int alpha = 0;
  int alpha_plus = 0;
  int alpha_minus = 0;
  int beta = 0;
  int beta_plus = 0;
  int beta_minus = 0;
  std::map<int, int> alpha_p;
  std::map<int, int> beta_p;

  bool operator==(const ExponentLedger&) const = default;
};

ACounts compute_counts(const HodgeData& h, const HodgeData& h2, int threshold);

// Requires the tensor to be critical with nn' odd.
SignedCounts signed_counts(const HodgeData& h, const HodgeData& h2);

struct FormulaPair {
  PeriodExpression c_plus;
  PeriodExpression c_minus;
  TheoremCase theorem_case = TheoremCase::PR1;
  Variant variant = Variant::Ledger;
};

// The predicted monomials for c+/c- of the tensor. Variant selects the
// exponent convention for the even (x) odd bracket [c+(M')c-(M')]; the two
// conventions coincide in the odd (x) odd and even (x) even cases.
// Rank-1 factors are rejected.
FormulaPair period_formula(const HodgeData& h, const HodgeData& h2, Variant variant);

// Even (x) odd only (first rank even, second odd).
ExponentLedger exponent_ledger(const HodgeData& h, const HodgeData& h2);

// The ratio c+/c- of the tensor as a formal monomial in the factor ratios.
PeriodExpression ratio_relation(const HodgeData& h, const HodgeData& h2);

TheoremCase classify(const HodgeData& h, const HodgeData& h2);

// Type-level consistency: the admissibility type of the emitted monomial,
// summed per factor with exponent weights, must match the type forced on the
// corner minors of the tensor period matrix (block weights = the a-counts,
// right weights = the opposite factor's Betti split).
struct TypeCheckReport {
  bool ok = true;
  bool plus_x_ok = true, plus_y_ok = true;
  bool minus_x_ok = true, minus_y_ok = true;
};

TypeCheckReport check_formula_types(const HodgeData& h, const HodgeData& h2,
                                    const FormulaPair& formulas);

}  // namespace periods::yoshida

#endif
