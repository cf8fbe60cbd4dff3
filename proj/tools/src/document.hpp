#pragma once

#include "flagforge/polynomial.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace flagforge::cli {

using Json = nlohmann::ordered_json;

/// Serialized polynomial: named variables plus terms in canonical order,
/// coefficients as decimal strings so arbitrary precision survives any
/// JSON consumer.
Json polynomial_document(const Polynomial& p, const std::string& var_prefix);

/// Inverse of polynomial_document; round-trips bit-exactly.
Polynomial polynomial_from_document(const Json& doc);

/// CSV form: one exponent column per variable plus the coefficient.
std::string polynomial_csv(const Polynomial& p, const std::string& var_prefix);

std::vector<std::string> variable_names(int nvars, const std::string& prefix);

}  // namespace flagforge::cli
