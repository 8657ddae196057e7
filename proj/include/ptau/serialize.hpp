#pragma once

#include <json.hpp>

#include "ptau/ratfunc.hpp"

namespace ptau {

/// {"symbols": [...], "terms": [{"exp": [...], "coeff": "p/q"}, ...]}, terms in
/// descending grlex order.
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

/// {"symbols": [...], "num": [...terms], "den": [...terms]}
nlohmann::json ratfunc_to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const nlohmann::json& j);

}  // namespace ptau
