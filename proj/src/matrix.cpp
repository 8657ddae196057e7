#include "ptau/matrix.hpp"

#include <sstream>
#include <unordered_map>

#include "ptau/errors.hpp"

namespace ptau {

namespace {

void check_square(const PolyMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw ShapeError("determinant of a non-square matrix");
}

}  // namespace

PolyMatrix zero_matrix(const SymbolsPtr& syms, std::size_t rows, std::size_t cols) {
  return PolyMatrix(rows, std::vector<MultiPoly>(cols, MultiPoly(syms)));
}

MultiPoly det_fraction_free(const PolyMatrix& input, const SymbolsPtr& syms) {
  check_square(input);
  const std::size_t n = input.size();
  if (n == 0) return MultiPoly::constant(syms, 1);
  PolyMatrix a = input;
  MultiPoly prev = MultiPoly::constant(a[0][0].symbols(), 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a[i][k].is_zero() && (piv == n || a[i][k].num_terms() < a[piv][k].num_terms())) piv = i;
    if (piv == n) return MultiPoly(a[0][0].symbols());
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = a[i][j] * a[k][k];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) v -= a[i][k] * a[k][j];
        a[i][j] = prev.is_constant() ? v * (1 / prev.constant_term()) : divide_or_throw(v, prev);
      }
      a[i][k] = MultiPoly(a[i][k].symbols());
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

MultiPoly det_cofactor(const PolyMatrix& m, const SymbolsPtr& syms) {
  check_square(m);
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(syms, 1);
  if (n > 24) throw ShapeError("cofactor expansion limited to 24x24");
  // memo[mask] = det of the minor using the last popcount(mask) columns and the rows in mask.
  std::unordered_map<std::uint32_t, MultiPoly> memo;
  auto rec = [&](auto&& self, std::uint32_t rows) -> MultiPoly {
    const std::size_t used = n - static_cast<std::size_t>(__builtin_popcount(rows));
    if (rows == 0) return MultiPoly::constant(m[0][0].symbols(), 1);
    auto it = memo.find(rows);
    if (it != memo.end()) return it->second;
    MultiPoly acc(m[0][0].symbols());
    int sign = 1;
    for (std::size_t r = 0; r < n; ++r) {
      if (!(rows >> r & 1u)) continue;
      if (!m[r][used].is_zero()) {
        MultiPoly term = m[r][used] * self(self, rows & ~(1u << r));
        if (sign > 0) acc += term; else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(rows, acc);
    return acc;
  };
  return rec(rec, (n == 32 ? 0u : (1u << n)) - 1u);
}

std::string matrix_to_string(const PolyMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    os << "[";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j];
    os << "]\n";
  }
  return os.str();
}

}  // namespace ptau
