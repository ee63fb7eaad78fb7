#include "periods/serialization.hpp"

#include <sstream>

namespace periods::io {

namespace {

std::string symbol_kind_name(yoshida::SymbolKind k) {
  switch (k) {
    case yoshida::SymbolKind::Delta: return "delta";
    case yoshida::SymbolKind::CPlus: return "c+";
    case yoshida::SymbolKind::CMinus: return "c-";
    case yoshida::SymbolKind::CP: return "c_p";
  }
  return "?";
}

yoshida::SymbolKind symbol_kind_from_name(const std::string& s) {
  if (s == "delta") return yoshida::SymbolKind::Delta;
  if (s == "c+") return yoshida::SymbolKind::CPlus;
  if (s == "c-") return yoshida::SymbolKind::CMinus;
  if (s == "c_p") return yoshida::SymbolKind::CP;
  throw ValidationError("unknown period symbol: " + s);
}

}  // namespace

Json to_json(const hodge::HodgeData& h) {
  Json j;
  j["weight"] = h.weight;
  j["types"] = h.types;
  if (h.middle_sign) j["middle_sign"] = *h.middle_sign;
  return j;
}

hodge::HodgeData hodge_from_json(const Json& j) {
  try {
    hodge::HodgeData h;
    h.weight = j.at("weight").get<int>();
    h.types = j.at("types").get<std::vector<int>>();
    if (j.contains("middle_sign")) h.middle_sign = j.at("middle_sign").get<int>();
    return h;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed HodgeData JSON: ") + e.what());
  }
}

Json to_json(const hodge::ValidationReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["violations"] = r.violations;
  return j;
}

Json to_json(const hodge::FiltrationProfile& p) {
  Json j;
  j["jumps"] = p.jumps;
  j["mults"] = p.mults;
  return j;
}

Json to_json(const hodge::BettiSplit& s) {
  Json j;
  j["d_plus"] = s.d_plus;
  j["d_minus"] = s.d_minus;
  return j;
}

Json to_json(const hodge::CriticalityResult& c) {
  Json j;
  j["critical"] = c.critical;
  if (c.k_plus) j["k_plus"] = *c.k_plus;
  if (c.k_minus) j["k_minus"] = *c.k_minus;
  if (c.has_k0()) j["k0"] = *c.k_plus;
  return j;
}

Json to_json(const yoshida::ACounts& c) {
  Json j;
  j["a"] = c.a;
  j["a_star"] = c.a_star;
  j["threshold"] = c.threshold;
  return j;
}

Json to_json(const yoshida::SignedCounts& c) {
  Json j;
  j["plus"] = to_json(c.plus);
  j["minus"] = to_json(c.minus);
  j["k_plus"] = c.k_plus;
  j["k_minus"] = c.k_minus;
  return j;
}

Json to_json(const yoshida::PeriodExpression& e) {
  Json factors = Json::array();
  for (const auto& [sym, exp] : e.factors) {
    Json f;
    f["symbol"] = symbol_kind_name(sym.kind);
    f["motive"] = sym.motive == yoshida::MotiveTag::M ? "M" : "M2";
    if (sym.kind == yoshida::SymbolKind::CP) f["p"] = sym.p;
    f["exp"] = exp;
    factors.push_back(std::move(f));
  }
  Json j;
  j["factors"] = std::move(factors);
  j["string"] = e.str();
  return j;
}

yoshida::PeriodExpression expression_from_json(const Json& j) {
  try {
    yoshida::PeriodExpression e;
    for (const Json& f : j.at("factors")) {
      yoshida::PeriodSymbol sym;
      sym.kind = symbol_kind_from_name(f.at("symbol").get<std::string>());
      sym.motive = f.at("motive").get<std::string>() == "M" ? yoshida::MotiveTag::M
                                                            : yoshida::MotiveTag::M2;
      if (sym.kind == yoshida::SymbolKind::CP) sym.p = f.at("p").get<int>();
      e.multiply(sym, f.at("exp").get<int>());
    }
    return e;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed PeriodExpression JSON: ") + e.what());
  }
}

Json to_json(const yoshida::ExponentLedger& l) {
  Json j;
  j["alpha"] = l.alpha;
  j["alpha_plus"] = l.alpha_plus;
  j["alpha_minus"] = l.alpha_minus;
  j["beta"] = l.beta;
  j["beta_plus"] = l.beta_plus;
  j["beta_minus"] = l.beta_minus;
  Json ap = Json::object();
  for (const auto& [p, v] : l.alpha_p) ap[std::to_string(p)] = v;
  Json bp = Json::object();
  for (const auto& [p, v] : l.beta_p) bp[std::to_string(p)] = v;
  j["alpha_p"] = std::move(ap);
  j["beta_p"] = std::move(bp);
  return j;
}

Json to_json(const invariant::AdmissibilityType& t) {
  Json j;
  j["block_weights"] = t.block_weights;
  j["partition"] = t.partition;
  j["right_weights"] = Json::array({t.right_weights.first, t.right_weights.second});
  j["split"] = Json::array({t.split.first, t.split.second});
  return j;
}

invariant::AdmissibilityType admissibility_type_from_json(const Json& j) {
  try {
    invariant::AdmissibilityType t;
    t.block_weights = j.at("block_weights").get<std::vector<int>>();
    t.partition = j.at("partition").get<std::vector<int>>();
    t.right_weights = {j.at("right_weights").at(0).get<int>(),
                       j.at("right_weights").at(1).get<int>()};
    t.split = {j.at("split").at(0).get<int>(), j.at("split").at(1).get<int>()};
    return t;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed AdmissibilityType JSON: ") + e.what());
  }
}

Json to_json(const invariant::InvariantPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [em, coeff] : f.terms) {
    Json rows = Json::array();
    for (int i = 0; i < em.d; ++i) {
      Json row = Json::array();
      for (int j = 0; j < em.d; ++j) row.push_back(em.at(i, j));
      rows.push_back(std::move(row));
    }
    Json term;
    term["exponent_matrix"] = std::move(rows);
    term["coeff"] = rational_to_string(coeff);
    terms.push_back(std::move(term));
  }
  return terms;
}

namespace {

Json ratio_list(const std::vector<Rational>& rs) {
  Json out = Json::array();
  for (const Rational& r : rs) out.push_back(rational_to_string(r));
  return out;
}

}  // namespace

Json to_json(const oracle::VerificationReport& r) {
  Json j;
  j["kind"] = r.kind == oracle::ReportKind::Theorem ? "theorem" : "ratio";
  j["case"] = yoshida::to_string(r.theorem_case);
  if (r.variant) j["variant"] = yoshida::to_string(*r.variant);
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["bound"] = r.bound;
  j["constant"] = r.constant;
  if (r.ratio_plus) j["ratio_plus"] = rational_to_string(*r.ratio_plus);
  if (r.ratio_minus) j["ratio_minus"] = rational_to_string(*r.ratio_minus);
  j["ratios_plus"] = ratio_list(r.ratios_plus);
  if (r.kind == oracle::ReportKind::Theorem)
    j["ratios_minus"] = ratio_list(r.ratios_minus);
  return j;
}

Json to_json(const oracle::DiscoveryReport& r) {
  Json j;
  j["c_plus"] = to_json(r.c_plus);
  j["c_minus"] = to_json(r.c_minus);
  j["confirmed"] = r.confirmed;
  j["matches_variant"] = r.matches_variant;
  if (r.ledger) j["ledger"] = to_json(*r.ledger);
  j["trials"] = r.trials;
  j["fit_trials"] = r.fit_trials;
  j["seed"] = r.seed;
  j["notes"] = r.notes;
  return j;
}

namespace {

void render(const Json& j, const std::string& key, int depth, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      render(it.value(), it.key(), key.empty() ? depth : depth + 1, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    os << pad << key << ":\n";
    for (const Json& item : j) render(item, "-", depth + 1, os);
  } else {
    os << pad;
    if (!key.empty()) os << key << ": ";
    os << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, "", 0, os);
  return os.str();
}

}  // namespace periods::io
