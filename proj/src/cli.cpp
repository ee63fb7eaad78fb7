#include "periods/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "periods/serialization.hpp"

namespace periods::cli {

using io::Json;
using yoshida::Variant;

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json load_json_input(const std::string& spec, const char* what) {
  std::string text;
  if (spec == "-") {
    text = slurp(std::cin);
  } else if (!spec.empty() && spec.front() == '{') {
    text = spec;
  } else {
    std::ifstream f(spec);
    if (!f) throw ValidationError(std::string("cannot open ") + what + " file: " + spec);
    text = slurp(f);
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed JSON for ") + what + ": " + e.what());
  }
}

hodge::HodgeData load_motive(const std::optional<std::string>& spec, const char* what) {
  if (!spec) throw ValidationError(std::string("missing required input: ") + what);
  hodge::HodgeData h = io::hodge_from_json(load_json_input(*spec, what));
  hodge::require_valid(h);
  return h;
}

oracle::OracleConfig oracle_config(const JobConfig& cfg) {
  oracle::OracleConfig oc;
  oc.trials = cfg.trials;
  oc.seed = cfg.seed;
  oc.bound = cfg.bound;
  return oc;
}

Json analyze_pair(const hodge::HodgeData& a, const hodge::HodgeData& b) {
  Json j;
  j["motive_a"] = io::to_json(a);
  j["motive_b"] = io::to_json(b);
  j["split_a"] = io::to_json(hodge::betti_split(a));
  j["split_b"] = io::to_json(hodge::betti_split(b));
  hodge::FiltrationProfile profile = hodge::tensor_profile(a, b);
  hodge::BettiSplit split = hodge::tensor_betti_split(a, b);
  hodge::CriticalityResult crit = hodge::criticality(profile, split);
  j["tensor_profile"] = io::to_json(profile);
  j["tensor_split"] = io::to_json(split);
  j["critical"] = crit.critical;
  if (!crit.critical) return j;
  j["k_plus"] = *crit.k_plus;
  j["k_minus"] = *crit.k_minus;
  if (crit.has_k0()) {
    j["k0"] = *crit.k_plus;
    yoshida::ACounts counts =
        yoshida::compute_counts(a, b, profile.jumps[*crit.k_plus - 1]);
    j["threshold"] = counts.threshold;
    j["a"] = counts.a;
    j["a_star"] = counts.a_star;
  } else {
    yoshida::SignedCounts sc = yoshida::signed_counts(a, b);
    j["threshold_plus"] = sc.plus.threshold;
    j["threshold_minus"] = sc.minus.threshold;
    j["a_plus"] = sc.plus.a;
    j["a_minus"] = sc.minus.a;
    j["a_star_plus"] = sc.plus.a_star;
    j["a_star_minus"] = sc.minus.a_star;
  }
  return j;
}

Json run_analyze(const JobConfig& cfg) {
  hodge::HodgeData a = load_motive(cfg.motive_a, "motive-a");
  if (!cfg.motive_b) {
    Json j;
    j["motive"] = io::to_json(a);
    j["validation"] = io::to_json(hodge::validate(a));
    j["betti_split"] = io::to_json(hodge::betti_split(a));
    j["profile"] = io::to_json(hodge::filtration_profile(a));
    return j;
  }
  return analyze_pair(a, load_motive(cfg.motive_b, "motive-b"));
}

Json formula_entry(const hodge::HodgeData& a, const hodge::HodgeData& b,
                   Variant variant) {
  yoshida::FormulaPair pair = yoshida::period_formula(a, b, variant);
  yoshida::TypeCheckReport types = yoshida::check_formula_types(a, b, pair);
  Json j;
  j["variant"] = yoshida::to_string(variant);
  j["case"] = yoshida::to_string(pair.theorem_case);
  j["c_plus"] = io::to_json(pair.c_plus);
  j["c_minus"] = io::to_json(pair.c_minus);
  j["type_check"] = types.ok;
  return j;
}

Json run_formula(const JobConfig& cfg) {
  hodge::HodgeData a = load_motive(cfg.motive_a, "motive-a");
  hodge::HodgeData b = load_motive(cfg.motive_b, "motive-b");
  if (cfg.variant != VariantMode::Auto) {
    return formula_entry(
        a, b, cfg.variant == VariantMode::Ledger ? Variant::Ledger : Variant::Theorem);
  }
  Json j;
  Json variants = Json::array();
  Json selected = Json::array();
  for (Variant v : {Variant::Ledger, Variant::Theorem}) {
    Json entry = formula_entry(a, b, v);
    if (entry["type_check"].get<bool>()) selected.push_back(yoshida::to_string(v));
    variants.push_back(std::move(entry));
  }
  j["variants"] = std::move(variants);
  j["selected"] = std::move(selected);
  return j;
}

std::pair<Json, bool> run_verify(const JobConfig& cfg) {
  hodge::HodgeData a = load_motive(cfg.motive_a, "motive-a");
  hodge::HodgeData b = load_motive(cfg.motive_b, "motive-b");
  oracle::OracleConfig oc = oracle_config(cfg);
  if (cfg.variant != VariantMode::Auto) {
    const Variant v =
        cfg.variant == VariantMode::Ledger ? Variant::Ledger : Variant::Theorem;
    oracle::VerificationReport rep = oracle::verify_theorem(a, b, oc, v);
    return {io::to_json(rep), rep.constant};
  }
  // Auto: variants failing the type-level consistency check are rejected
  // without running the oracle; the rest are adjudicated by constancy.
  Json j;
  Json variants = Json::array();
  Json passing = Json::array();
  bool any_constant = false;
  for (Variant v : {Variant::Ledger, Variant::Theorem}) {
    yoshida::FormulaPair pair = yoshida::period_formula(a, b, v);
    Json entry;
    entry["variant"] = yoshida::to_string(v);
    const bool types_ok = yoshida::check_formula_types(a, b, pair).ok;
    entry["type_check"] = types_ok;
    if (!types_ok) {
      entry["status"] = "rejected by type check";
    } else {
      oracle::VerificationReport rep = oracle::verify_theorem(a, b, oc, v);
      entry["report"] = io::to_json(rep);
      entry["status"] = rep.constant ? "constant" : "not constant";
      if (rep.constant) {
        passing.push_back(yoshida::to_string(v));
        any_constant = true;
      }
    }
    variants.push_back(std::move(entry));
  }
  j["variants"] = std::move(variants);
  j["passing"] = std::move(passing);
  j["constant"] = any_constant;
  return {j, any_constant};
}

}  // namespace

RunResult run(const JobConfig& cfg) {
  Json out;
  int code = 0;
  try {
    switch (cfg.command) {
      case Command::Analyze:
        out = run_analyze(cfg);
        break;
      case Command::Formula:
        out = run_formula(cfg);
        break;
      case Command::Verify: {
        auto [j, ok] = run_verify(cfg);
        out = std::move(j);
        code = ok ? 0 : 2;
        break;
      }
      case Command::Ratio: {
        hodge::HodgeData a = load_motive(cfg.motive_a, "motive-a");
        hodge::HodgeData b = load_motive(cfg.motive_b, "motive-b");
        oracle::VerificationReport rep =
            oracle::verify_ratio_relation(a, b, oracle_config(cfg));
        out = io::to_json(rep);
        code = rep.constant ? 0 : 2;
        break;
      }
      case Command::Discover: {
        hodge::HodgeData a = load_motive(cfg.motive_a, "motive-a");
        hodge::HodgeData b = load_motive(cfg.motive_b, "motive-b");
        oracle::DiscoveryReport rep =
            oracle::discover_exponents(a, b, oracle_config(cfg));
        out = io::to_json(rep);
        code = rep.confirmed ? 0 : 2;
        break;
      }
      case Command::Invariant: {
        if (!cfg.type_spec)
          throw ValidationError("invariant command needs --type with an admissibility type");
        invariant::AdmissibilityType t =
            io::admissibility_type_from_json(load_json_input(*cfg.type_spec, "type"));
        invariant::InvariantPolynomial f = invariant::construct_invariant(t);
        out["type"] = io::to_json(t);
        out["term_count"] = f.term_count();
        out["terms"] = io::to_json(f);
        break;
      }
    }
  } catch (const Error& e) {
    out = Json{{"error", e.what()}};
    code = 1;
  }

  RunResult res;
  res.exit_code = code;
  res.output =
      cfg.format == Format::Json ? out.dump(2) + "\n" : io::render_text(out);
  return res;
}

}  // namespace periods::cli
