#pragma once

#include <vector>

#include "ptau/multipoly.hpp"

namespace ptau {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Zero matrix of the given shape over `syms`.
PolyMatrix zero_matrix(const SymbolsPtr& syms, std::size_t rows, std::size_t cols);

/// Bareiss fraction-free elimination, pivoting on the entry with the fewest
/// terms. `syms` gives the symbol set of the result for the 0x0 case
/// (whose determinant is 1).
MultiPoly det_fraction_free(const PolyMatrix& m, const SymbolsPtr& syms);

/// Laplace expansion along the first column with memoized minors; slow,
/// used as an independent check.
MultiPoly det_cofactor(const PolyMatrix& m, const SymbolsPtr& syms);

std::string matrix_to_string(const PolyMatrix& m);

}  // namespace ptau
