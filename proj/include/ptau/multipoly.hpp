#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ptau {

using Rational = mpq_class;

/// Ordered, immutable list of symbol names. Declaration order is the
/// variable order used by the graded-lexicographic monomial order.
class Symbols {
 public:
  explicit Symbols(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  friend bool operator==(const Symbols& a, const Symbols& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using SymbolsPtr = std::shared_ptr<const Symbols>;

SymbolsPtr make_symbols(std::vector<std::string> names);
bool same_symbols(const SymbolsPtr& a, const SymbolsPtr& b);
/// Union of two symbol sets; `a`'s order first, then new names of `b`.
SymbolsPtr merge_symbols(const SymbolsPtr& a, const SymbolsPtr& b);

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exp;
  Rational coeff;
};

/// Graded-lexicographic comparison; returns <0, 0, >0.
int grlex_compare(const Exponents& a, const Exponents& b);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by descending grlex order with no zero
/// coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  MultiPoly();
  explicit MultiPoly(SymbolsPtr syms);

  static MultiPoly constant(SymbolsPtr syms, const Rational& c);
  static MultiPoly variable(SymbolsPtr syms, std::string_view name);
  static MultiPoly variable(SymbolsPtr syms, std::size_t index);
  static MultiPoly monomial(SymbolsPtr syms, Exponents exp, const Rational& c);
  static MultiPoly from_terms(SymbolsPtr syms, std::vector<Term> terms);

  const SymbolsPtr& symbols() const { return syms_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  const Term& leading() const;

  std::uint32_t degree(std::size_t var) const;
  std::uint32_t degree(std::string_view name) const;
  std::uint32_t total_degree() const;
  bool depends_on(std::size_t var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned n) const;
  MultiPoly derivative(std::size_t var) const;
  MultiPoly derivative(std::string_view name) const;

  /// Replace variable `var` by `value` (same symbol set).
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  /// Replace bound variables by rationals; the symbol set is unchanged.
  MultiPoly substitute(const std::map<std::string, Rational>& bindings) const;
  /// Full evaluation; every symbol the polynomial depends on must be bound.
  Rational evaluate(const std::map<std::string, Rational>& bindings) const;
  /// Move onto another symbol set by name. Throws SymbolMismatch if a used
  /// symbol is absent from `target`.
  MultiPoly rebase(const SymbolsPtr& target) const;

  /// Coefficients with respect to `var`; entry k multiplies var^k.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, std::size_t var);

  /// Multiply by var^k.
  MultiPoly shift_degree(std::size_t var, std::uint32_t k) const;

  /// Divide by the grlex-leading coefficient.
  MultiPoly monic() const;

  std::string to_string() const;

 private:
  SymbolsPtr syms_;
  std::vector<Term> terms_;

  void check_compatible(const MultiPoly& o) const;
};

/// Exact quotient a/b, or nullopt when b does not divide a.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);
/// a/b, throwing when the division is not exact.
MultiPoly divide_or_throw(const MultiPoly& a, const MultiPoly& b);

/// Greatest common divisor over Q, normalized to a monic grlex-leading term.
/// gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
/// gcd of the coefficients of `a` viewed as a polynomial in `var`.
MultiPoly content_in(const MultiPoly& a, std::size_t var);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace ptau
