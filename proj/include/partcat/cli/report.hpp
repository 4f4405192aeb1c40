#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "partcat/prob_vec.hpp"

namespace partcat::cli {

using nlohmann::json;

/// {"exact": "p/q", "decimal": "0.800000", "decimal_exact": true}
json rational_json(const Rat& value, int digits);

/// Same, for an optional ratio where nullopt means +∞.
json ratio_json(const std::optional<Rat>& value, int digits);

/// {"exact": [...], "decimal": [...]}
json vector_json(const ProbVec& v, int digits);

/// Exact rational back from a report field (either the object or its "exact" string).
Rat rational_from_json(const json& field);
ProbVec vector_from_json(const json& field);

/// FNV-1a over the canonical exact rendering; identifies inputs in reports.
std::string digest(const ProbVec& v);

}  // namespace partcat::cli
