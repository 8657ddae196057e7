#pragma once

#include <string_view>

#include "ptau/ratfunc.hpp"

namespace ptau {

/// Parse an arithmetic expression (+ - * / ^, parentheses, integer or p/q
/// literals, declared symbols) into a reduced rational function.
RatFunc parse_ratfunc(std::string_view text, const SymbolsPtr& syms);
/// As parse_ratfunc, but the result must be a polynomial.
MultiPoly parse_poly(std::string_view text, const SymbolsPtr& syms);

}  // namespace ptau
