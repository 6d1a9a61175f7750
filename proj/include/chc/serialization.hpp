#pragma once

// JSON wire format for exponential sums:
//   [{"weight": ["1/2", "-3/2", ...], "coeff": "<integer or p/q>"}, ...]
// sorted by canonical (lexicographic, doubled-coordinate) weight order.

#include "chc/algebra.hpp"

#include <json.hpp>

namespace chc {

nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json expsum_to_json(const SignedExpSum& s);
nlohmann::json expsum_to_json(const NormalizedExpSum& s);

/// Inverse of expsum_to_json for integer coefficients; throws on malformed input.
SignedExpSum expsum_from_json(const nlohmann::json& j);

}  // namespace chc
