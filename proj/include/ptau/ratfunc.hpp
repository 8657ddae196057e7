#pragma once

#include <map>
#include <string>

#include "ptau/multipoly.hpp"

namespace ptau {

/// Quotient of two polynomials over a common symbol set.
///
/// Always reduced: gcd(num, den) = 1 and the grlex-leading coefficient of the
/// denominator is 1. Equality is therefore structural.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(SymbolsPtr syms);
  RatFunc(MultiPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc constant(SymbolsPtr syms, const Rational& c);
  static RatFunc variable(SymbolsPtr syms, std::string_view name);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  const SymbolsPtr& symbols() const { return num_.symbols(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const Rational& c, const RatFunc& a);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc pow(int n) const;
  RatFunc derivative(std::size_t var) const;
  RatFunc derivative(std::string_view name) const;

  /// Substitute rationals for some symbols. Throws DegenerateSpecialization
  /// when the denominator becomes identically zero.
  RatFunc specialize(const std::map<std::string, Rational>& bindings) const;
  /// Substitute a rational function for one symbol.
  RatFunc substitute(std::size_t var, const RatFunc& value) const;
  Rational evaluate(const std::map<std::string, Rational>& bindings) const;
  RatFunc rebase(const SymbolsPtr& target) const;

  std::string to_string() const;

 private:
  MultiPoly num_;
  MultiPoly den_ = MultiPoly::constant(nullptr, 1);

  struct Reduced {};
  RatFunc(MultiPoly num, MultiPoly den, Reduced);
  void normalize();
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace ptau
