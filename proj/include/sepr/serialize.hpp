#pragma once

#include <json.hpp>

#include "sepr/analysis.hpp"
#include "sepr/verify.hpp"

namespace sepr {

using json = nlohmann::ordered_json;

json to_json(const SeprSequence& s);
json to_json(const SignPattern& p);
/// Rows of canonical rational literals.
json to_json(const RationalMatrix& m);
/// One-based indices.
json to_json(IndexSet s);
json to_json(const DetSummary& d);
json to_json(const TermVerdict& t);
json to_json(const Witness& w);
json to_json(const UniqueVerdict& v);
json to_json(const SeprSetEstimate& e);
json to_json(const Prediction& p);
json to_json(const LawReport& r);
json to_json(const StabilityVerdict& v);
json to_json(const SymposClassification& c);
json to_json(const VerificationReport& r);

}  // namespace sepr
