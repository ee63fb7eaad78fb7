#include "periods/yoshida.hpp"

namespace periods::yoshida {

using hodge::BettiSplit;
using hodge::CriticalityResult;
using hodge::FiltrationProfile;
using invariant::Sign;

std::string PeriodSymbol::str() const {
  std::string s;
  switch (kind) {
    case SymbolKind::Delta: s = "δ"; break;
    case SymbolKind::CPlus: s = "c+"; break;
    case SymbolKind::CMinus: s = "c-"; break;
    case SymbolKind::CP: s = "c_" + std::to_string(p); break;
  }
  s += motive == MotiveTag::M ? "(M)" : "(M2)";
  return s;
}

PeriodExpression PeriodExpression::operator*(const PeriodExpression& o) const {
  PeriodExpression out = *this;
  for (const auto& [sym, e] : o.factors) out.multiply(sym, e);
  return out;
}

PeriodExpression PeriodExpression::operator/(const PeriodExpression& o) const {
  PeriodExpression out = *this;
  for (const auto& [sym, e] : o.factors) out.multiply(sym, -e);
  return out;
}

std::string PeriodExpression::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [sym, e] : factors) {
    if (!s.empty()) s += " · ";
    s += sym.str() + "^" + std::to_string(e);
  }
  return s;
}

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::PR1: return "PR1";
    case TheoremCase::PR2: return "PR2";
    case TheoremCase::PR3: return "PR3";
  }
  return "?";
}

std::string to_string(Variant v) {
  return v == Variant::Ledger ? "ledger" : "theorem";
}

ACounts compute_counts(const HodgeData& h, const HodgeData& h2, int threshold) {
  hodge::require_valid(h);
  hodge::require_valid(h2);
  ACounts out;
  out.threshold = threshold;
  out.a.assign(h.types.size(), 0);
  out.a_star.assign(h2.types.size(), 0);
  for (std::size_t i = 0; i < h.types.size(); ++i)
    for (std::size_t j = 0; j < h2.types.size(); ++j)
      if (h.types[i] + h2.types[j] <= threshold) {
        ++out.a[i];
        ++out.a_star[j];
      }
  return out;
}

SignedCounts signed_counts(const HodgeData& h, const HodgeData& h2) {
  hodge::require_valid(h);
  hodge::require_valid(h2);
  if ((hodge::rank(h) * hodge::rank(h2)) % 2 == 0)
    throw ParityError("signed_counts: nn' must be odd");
  FiltrationProfile profile = hodge::tensor_profile(h, h2);
  CriticalityResult crit = hodge::criticality(profile, hodge::tensor_betti_split(h, h2));
  if (!crit.critical) throw NotCriticalError("signed_counts: tensor is not critical");
  SignedCounts out;
  out.k_plus = *crit.k_plus;
  out.k_minus = *crit.k_minus;
  out.plus = compute_counts(h, h2, profile.jumps[out.k_plus - 1]);
  out.minus = compute_counts(h, h2, profile.jumps[out.k_minus - 1]);
  return out;
}

TheoremCase classify(const HodgeData& h, const HodgeData& h2) {
  const bool even1 = hodge::rank(h) % 2 == 0;
  const bool even2 = hodge::rank(h2) % 2 == 0;
  if (even1 && even2) return TheoremCase::PR3;
  if (!even1 && !even2) return TheoremCase::PR2;
  return TheoremCase::PR1;
}

namespace {

int at1(const std::vector<int>& v, int i) {  // 1-based access
  return v[static_cast<std::size_t>(i) - 1];
}

struct CriticalTensor {
  FiltrationProfile profile;
  BettiSplit split;
  CriticalityResult crit;
};

CriticalTensor require_critical(const HodgeData& h, const HodgeData& h2,
                                const char* who) {
  hodge::require_valid(h);
  hodge::require_valid(h2);
  CriticalTensor ct{hodge::tensor_profile(h, h2), hodge::tensor_betti_split(h, h2), {}};
  ct.crit = hodge::criticality(ct.profile, ct.split);
  if (!ct.crit.critical)
    throw NotCriticalError(std::string(who) + ": tensor is not critical");
  return ct;
}

// Shared ledger arithmetic for the even (x) odd case. `a` is indexed by the
// even factor, `a_star` by the odd one.
ExponentLedger even_odd_ledger(const ACounts& counts, int n, int n2, int eps2) {
  const int k = n / 2;
  const int k2 = (n2 - 1) / 2;
  ExponentLedger led;
  led.alpha = at1(counts.a, n);
  led.alpha_plus = (2 * at1(counts.a, k) - n2 + eps2) / 2;
  led.alpha_minus = (2 * at1(counts.a, k) - n2 - eps2) / 2;
  led.beta = at1(counts.a_star, n2);
  led.beta_plus = led.beta_minus = at1(counts.a_star, k2) - k;
  for (int p = 1; p <= k - 1; ++p)
    led.alpha_p[p] = at1(counts.a, p) - at1(counts.a, p + 1);
  for (int p = 1; p <= k2 - 1; ++p)
    led.beta_p[p] = at1(counts.a_star, p) - at1(counts.a_star, p + 1);
  return led;
}

void multiply_cp_factors(PeriodExpression& expr, MotiveTag tag,
                         const std::vector<int>& counts, int kk) {
  for (int p = 1; p <= kk - 1; ++p)
    expr.multiply(c_p(tag, p), at1(counts, p) - at1(counts, p + 1));
}

FormulaPair formula_even_odd(const HodgeData& hE, MotiveTag tagE, const HodgeData& hO,
                             MotiveTag tagO, const CriticalTensor& ct, Variant variant) {
  const int n = hodge::rank(hE);
  const int n2 = hodge::rank(hO);
  const int k = n / 2;
  const int k2 = (n2 - 1) / 2;
  if (k2 < 1)
    throw UnsupportedRankError("period_formula: rank-1 odd factor is not supported");
  const int eps2 = hodge::epsilon(hO);
  const int threshold = at1(ct.profile.jumps, *ct.crit.k_plus);
  const ACounts counts = compute_counts(hE, hO, threshold);
  const ExponentLedger led = even_odd_ledger(counts, n, n2, eps2);

  FormulaPair out;
  out.theorem_case = TheoremCase::PR1;
  out.variant = variant;
  // The two conventions for the odd-factor bracket [c+ c-] differ by one.
  const int bracketO =
      variant == Variant::Ledger ? led.beta_plus : at1(counts.a_star, k2) - k - 1;
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    PeriodExpression expr;
    // alpha_plus/alpha_minus already carry eps(M'); the c- monomial of the
    // tensor swaps them.
    const bool top = sign == Sign::Plus;
    expr.multiply(delta(tagE), led.alpha);
    expr.multiply(c_plus(tagE), top ? led.alpha_plus : led.alpha_minus);
    expr.multiply(c_minus(tagE), top ? led.alpha_minus : led.alpha_plus);
    multiply_cp_factors(expr, tagE, counts.a, k);
    expr.multiply(delta(tagO), led.beta);
    expr.multiply(c_plus(tagO), bracketO);
    expr.multiply(c_minus(tagO), bracketO);
    multiply_cp_factors(expr, tagO, counts.a_star, k2);
    (sign == Sign::Plus ? out.c_plus : out.c_minus) = expr;
  }
  return out;
}

FormulaPair formula_odd_odd(const HodgeData& h, const HodgeData& h2, Variant variant) {
  const int n = hodge::rank(h);
  const int n2 = hodge::rank(h2);
  const int k = (n - 1) / 2;
  const int k2 = (n2 - 1) / 2;
  if (k < 1 || k2 < 1)
    throw UnsupportedRankError("period_formula: rank-1 factor is not supported");
  SignedCounts sc = signed_counts(h, h2);
  const BettiSplit s1 = hodge::betti_split(h);
  const BettiSplit s2 = hodge::betti_split(h2);

  FormulaPair out;
  out.theorem_case = TheoremCase::PR2;
  out.variant = variant;

  if (variant == Variant::Ledger) {
    // Exponents read off the block-weight boundaries of the signed counts:
    // the c_s(M) exponent is the drop of a^sigma across index d_s(M).
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      const ACounts& counts = sign == Sign::Plus ? sc.plus : sc.minus;
      PeriodExpression expr;
      expr.multiply(delta(MotiveTag::M), at1(counts.a, n));
      expr.multiply(c_plus(MotiveTag::M),
                    at1(counts.a, s1.d_plus) - at1(counts.a, s1.d_plus + 1));
      expr.multiply(c_minus(MotiveTag::M),
                    at1(counts.a, s1.d_minus) - at1(counts.a, s1.d_minus + 1));
      multiply_cp_factors(expr, MotiveTag::M, counts.a, k);
      expr.multiply(delta(MotiveTag::M2), at1(counts.a_star, n2));
      expr.multiply(c_plus(MotiveTag::M2),
                    at1(counts.a_star, s2.d_plus) - at1(counts.a_star, s2.d_plus + 1));
      expr.multiply(c_minus(MotiveTag::M2),
                    at1(counts.a_star, s2.d_minus) - at1(counts.a_star, s2.d_minus + 1));
      multiply_cp_factors(expr, MotiveTag::M2, counts.a_star, k2);
      (sign == Sign::Plus ? out.c_plus : out.c_minus) = expr;
    }
    return out;
  }

  // Printed form: T times the sign-dependent c factors, with a_n and a*_{n'}
  // taken at the minus threshold. Counts with index <= min d± agree across
  // the two thresholds, which covers a_k, a*_{k'} and every c_p difference.
  const ACounts& am = sc.minus;
  const int eps1 = hodge::epsilon(h);
  const int eps2 = hodge::epsilon(h2);
  const int bracket1 = at1(am.a, k) - k2 - 1;
  const int bracket2 = at1(am.a_star, k2) - k - 1;
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const int s = sign == Sign::Plus ? 1 : -1;
    PeriodExpression expr;
    expr.multiply(delta(MotiveTag::M), at1(am.a, n));
    expr.multiply(c_plus(MotiveTag::M), bracket1 + (s * eps2 == 1 ? 1 : 0));
    expr.multiply(c_minus(MotiveTag::M), bracket1 + (s * eps2 == -1 ? 1 : 0));
    multiply_cp_factors(expr, MotiveTag::M, am.a, k);
    expr.multiply(delta(MotiveTag::M2), at1(am.a_star, n2));
    expr.multiply(c_plus(MotiveTag::M2), bracket2 + (s * eps1 == 1 ? 1 : 0));
    expr.multiply(c_minus(MotiveTag::M2), bracket2 + (s * eps1 == -1 ? 1 : 0));
    multiply_cp_factors(expr, MotiveTag::M2, am.a_star, k2);
    (sign == Sign::Plus ? out.c_plus : out.c_minus) = expr;
  }
  return out;
}

FormulaPair formula_even_even(const HodgeData& h, const HodgeData& h2,
                              const CriticalTensor& ct) {
  const int n = hodge::rank(h);
  const int n2 = hodge::rank(h2);
  const int k = n / 2;
  const int k2 = n2 / 2;
  const int threshold = at1(ct.profile.jumps, *ct.crit.k_plus);
  const ACounts counts = compute_counts(h, h2, threshold);

  PeriodExpression expr;
  expr.multiply(delta(MotiveTag::M), at1(counts.a, n));
  expr.multiply(c_plus(MotiveTag::M), at1(counts.a, k) - k2);
  expr.multiply(c_minus(MotiveTag::M), at1(counts.a, k) - k2);
  multiply_cp_factors(expr, MotiveTag::M, counts.a, k);
  expr.multiply(delta(MotiveTag::M2), at1(counts.a_star, n2));
  expr.multiply(c_plus(MotiveTag::M2), at1(counts.a_star, k2) - k);
  expr.multiply(c_minus(MotiveTag::M2), at1(counts.a_star, k2) - k);
  multiply_cp_factors(expr, MotiveTag::M2, counts.a_star, k2);

  FormulaPair out;
  out.theorem_case = TheoremCase::PR3;
  out.c_plus = expr;
  out.c_minus = expr;
  return out;
}

}  // namespace

FormulaPair period_formula(const HodgeData& h, const HodgeData& h2, Variant variant) {
  CriticalTensor ct = require_critical(h, h2, "period_formula");
  switch (classify(h, h2)) {
    case TheoremCase::PR1:
      if (hodge::rank(h) % 2 == 0)
        return formula_even_odd(h, MotiveTag::M, h2, MotiveTag::M2, ct, variant);
      return formula_even_odd(h2, MotiveTag::M2, h, MotiveTag::M, ct, variant);
    case TheoremCase::PR2:
      return formula_odd_odd(h, h2, variant);
    case TheoremCase::PR3: {
      FormulaPair out = formula_even_even(h, h2, ct);
      out.variant = variant;
      return out;
    }
  }
  throw Error("unreachable");
}

ExponentLedger exponent_ledger(const HodgeData& h, const HodgeData& h2) {
  if (hodge::rank(h) % 2 != 0 || hodge::rank(h2) % 2 != 1)
    throw ParityError("exponent_ledger: needs even rank first, odd rank second");
  CriticalTensor ct = require_critical(h, h2, "exponent_ledger");
  const int threshold = at1(ct.profile.jumps, *ct.crit.k_plus);
  const ACounts counts = compute_counts(h, h2, threshold);
  return even_odd_ledger(counts, hodge::rank(h), hodge::rank(h2), hodge::epsilon(h2));
}

PeriodExpression ratio_relation(const HodgeData& h, const HodgeData& h2) {
  require_critical(h, h2, "ratio_relation");
  PeriodExpression out;
  switch (classify(h, h2)) {
    case TheoremCase::PR3:
      break;  // c+ = c-, ratio is 1
    case TheoremCase::PR1: {
      const bool first_even = hodge::rank(h) % 2 == 0;
      const MotiveTag tagE = first_even ? MotiveTag::M : MotiveTag::M2;
      const int epsO = hodge::epsilon(first_even ? h2 : h);
      out.multiply(c_plus(tagE), epsO);
      out.multiply(c_minus(tagE), -epsO);
      break;
    }
    case TheoremCase::PR2:
      out.multiply(c_plus(MotiveTag::M), hodge::epsilon(h2));
      out.multiply(c_minus(MotiveTag::M), -hodge::epsilon(h2));
      out.multiply(c_plus(MotiveTag::M2), hodge::epsilon(h));
      out.multiply(c_minus(MotiveTag::M2), -hodge::epsilon(h));
      break;
  }
  return out;
}

namespace {

struct SideType {
  std::vector<int> block;  // length = rank of the motive
  int right_plus = 0;
  int right_minus = 0;

  bool operator==(const SideType&) const = default;
};

// Accumulated admissibility type, on one factor, of a monomial expression.
SideType expression_side_type(const PeriodExpression& expr, MotiveTag tag, int n,
                              const BettiSplit& split) {
  SideType st;
  st.block.assign(n, 0);
  for (const auto& [sym, e] : expr.factors) {
    if (sym.motive != tag) continue;
    switch (sym.kind) {
      case SymbolKind::Delta:
        for (int i = 0; i < n; ++i) st.block[i] += e;
        st.right_plus += e;
        st.right_minus += e;
        break;
      case SymbolKind::CPlus:
        for (int i = 0; i < split.d_plus; ++i) st.block[i] += e;
        st.right_plus += e;
        break;
      case SymbolKind::CMinus:
        for (int i = 0; i < split.d_minus; ++i) st.block[i] += e;
        st.right_minus += e;
        break;
      case SymbolKind::CP:
        for (int i = 0; i < n; ++i) {
          const int w = i < sym.p ? 2 : (i < n - sym.p ? 1 : 0);
          st.block[i] += e * w;
        }
        st.right_plus += e;
        st.right_minus += e;
        break;
    }
  }
  return st;
}

}  // namespace

TypeCheckReport check_formula_types(const HodgeData& h, const HodgeData& h2,
                                    const FormulaPair& formulas) {
  CriticalTensor ct = require_critical(h, h2, "check_formula_types");
  const int n = hodge::rank(h);
  const int n2 = hodge::rank(h2);
  const BettiSplit s1 = hodge::betti_split(h);
  const BettiSplit s2 = hodge::betti_split(h2);

  // Expected block weights: the a-counts at the threshold belonging to each
  // tensor sign. The corner minor of the tensor has exactly these row
  // multidegrees, and column multidegrees given by the other factor's split.
  ACounts counts_plus, counts_minus;
  if ((n * n2) % 2 == 0) {
    const int threshold = at1(ct.profile.jumps, *ct.crit.k_plus);
    counts_plus = counts_minus = compute_counts(h, h2, threshold);
  } else {
    SignedCounts sc = signed_counts(h, h2);
    counts_plus = sc.plus;
    counts_minus = sc.minus;
  }

  TypeCheckReport rep;
  auto check_side = [&](const PeriodExpression& expr, MotiveTag tag, int rank,
                        const BettiSplit& own, const std::vector<int>& expected_block,
                        int exp_rp, int exp_rm) {
    SideType st = expression_side_type(expr, tag, rank, own);
    return st.block == expected_block && st.right_plus == exp_rp &&
           st.right_minus == exp_rm;
  };

  rep.plus_x_ok = check_side(formulas.c_plus, MotiveTag::M, n, s1, counts_plus.a,
                             s2.d_plus, s2.d_minus);
  rep.plus_y_ok = check_side(formulas.c_plus, MotiveTag::M2, n2, s2,
                             counts_plus.a_star, s1.d_plus, s1.d_minus);
  rep.minus_x_ok = check_side(formulas.c_minus, MotiveTag::M, n, s1, counts_minus.a,
                              s2.d_minus, s2.d_plus);
  rep.minus_y_ok = check_side(formulas.c_minus, MotiveTag::M2, n2, s2,
                              counts_minus.a_star, s1.d_minus, s1.d_plus);
  rep.ok = rep.plus_x_ok && rep.plus_y_ok && rep.minus_x_ok && rep.minus_y_ok;
  return rep;
}

}  // namespace periods::yoshida
