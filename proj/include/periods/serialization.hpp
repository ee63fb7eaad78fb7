#ifndef PERIODS_SERIALIZATION_HPP
#define PERIODS_SERIALIZATION_HPP

#include <json.hpp>

#include "periods/hodge_core.hpp"
#include "periods/invariant_engine.hpp"
#include "periods/period_oracle.hpp"
#include "periods/yoshida.hpp"

namespace periods::io {

// ordered_json keeps insertion order, so every emitted document is
// byte-stable for a fixed config and seed.
using Json = nlohmann::ordered_json;

Json to_json(const hodge::HodgeData& h);
hodge::HodgeData hodge_from_json(const Json& j);

Json to_json(const hodge::ValidationReport& r);
Json to_json(const hodge::FiltrationProfile& p);
Json to_json(const hodge::BettiSplit& s);
Json to_json(const hodge::CriticalityResult& c);

Json to_json(const yoshida::ACounts& c);
Json to_json(const yoshida::SignedCounts& c);
Json to_json(const yoshida::PeriodExpression& e);
yoshida::PeriodExpression expression_from_json(const Json& j);
Json to_json(const yoshida::ExponentLedger& l);

Json to_json(const invariant::AdmissibilityType& t);
invariant::AdmissibilityType admissibility_type_from_json(const Json& j);
Json to_json(const invariant::InvariantPolynomial& f);

Json to_json(const oracle::VerificationReport& r);
Json to_json(const oracle::DiscoveryReport& r);

// Indented "key: value" rendering of a JSON document for --format text.
std::string render_text(const Json& j);

}  // namespace periods::io

#endif
