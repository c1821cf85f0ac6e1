#pragma once

// JSON form of graded matrix factorizations:
// {"type", "f", "W": [a,b,c,h], "size", "phi", "psi", "S"} with polynomial
// entries as expression strings and rationals as "p/q" strings.

#include "mfcat/mf.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace mfcat {

nlohmann::json to_json(const GradedMF& g, const std::string& type_label);

/// Throws std::invalid_argument on a malformed document; the result is not verified.
GradedMF graded_mf_from_json(const nlohmann::json& j, std::string* type_label = nullptr);

}  // namespace mfcat
