#include "ptau/ratfunc.hpp"

#include <ostream>

#include "ptau/errors.hpp"

namespace ptau {

RatFunc::RatFunc(SymbolsPtr syms) : num_(syms), den_(MultiPoly::constant(syms, 1)) {}

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.symbols(), 1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!same_symbols(num_.symbols(), den_.symbols()))
    throw SymbolMismatch("numerator and denominator over different symbol sets");
  if (den_.is_zero()) throw DegenerateSpecialization("zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.symbols(), 1);
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_or_throw(num_, g);
      den_ = divide_or_throw(den_, g);
    }
  }
  normalize();
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_ = MultiPoly::constant(num_.symbols(), 1);
  normalize();
}

void RatFunc::normalize() {
  Rational lc = den_.leading().coeff;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::constant(SymbolsPtr syms, const Rational& c) { return RatFunc(MultiPoly::constant(std::move(syms), c)); }

RatFunc RatFunc::variable(SymbolsPtr syms, std::string_view name) {
  return RatFunc(MultiPoly::variable(std::move(syms), name));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Reduced{});
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_constant() || b.den_.is_constant())
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Reduced{});
  MultiPoly g = gcd(a.den_, b.den_);
  MultiPoly da = divide_or_throw(a.den_, g), db = divide_or_throw(b.den_, g);
  MultiPoly num = a.num_ * db + b.num_ * da;
  if (num.is_zero()) return RatFunc(a.symbols());
  // Any common factor of num and the denominator divides g.
  MultiPoly h = g.is_constant() ? g : gcd(num, g);
  if (!h.is_constant()) {
    num = divide_or_throw(num, h);
    g = divide_or_throw(g, h);
  }
  return RatFunc(std::move(num), da * db * g, RatFunc::Reduced{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.symbols());
  MultiPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant()) {
    MultiPoly g = gcd(an, bd);
    if (!g.is_constant()) {
      an = divide_or_throw(an, g);
      bd = divide_or_throw(bd, g);
    }
  }
  if (!ad.is_constant()) {
    MultiPoly g = gcd(bn, ad);
    if (!g.is_constant()) {
      bn = divide_or_throw(bn, g);
      ad = divide_or_throw(ad, g);
    }
  }
  return RatFunc(an * bn, ad * bd, RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DegenerateSpecialization("division by zero rational function");
  return a * RatFunc(b.den_, b.num_, RatFunc::Reduced{});
}

RatFunc operator*(const Rational& c, const RatFunc& a) {
  if (c == 0) return RatFunc(a.symbols());
  return RatFunc(a.num_ * c, a.den_, RatFunc::Reduced{});
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return (RatFunc::constant(symbols(), 1) / *this).pow(-n);
  return RatFunc(num_.pow(n), den_.pow(n), Reduced{});
}

RatFunc RatFunc::derivative(std::size_t var) const {
  MultiPoly dn = num_.derivative(var);
  if (den_.is_constant()) return RatFunc(dn, den_, Reduced{});
  MultiPoly dd = den_.derivative(var);
  return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

RatFunc RatFunc::derivative(std::string_view name) const { return derivative(symbols()->require(name)); }

RatFunc RatFunc::specialize(const std::map<std::string, Rational>& bindings) const {
  MultiPoly d = den_.substitute(bindings);
  if (d.is_zero()) throw DegenerateSpecialization("denominator vanishes under the given bindings");
  return RatFunc(num_.substitute(bindings), d);
}

RatFunc RatFunc::substitute(std::size_t var, const RatFunc& value) const {
  // Horner in var on numerator and denominator separately.
  auto horner = [&](const MultiPoly& p) {
    auto coeffs = p.coefficients_in(var);
    RatFunc acc(symbols());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * value + RatFunc(*it);
    return acc;
  };
  return horner(num_) / horner(den_);
}

Rational RatFunc::evaluate(const std::map<std::string, Rational>& bindings) const {
  Rational d = den_.evaluate(bindings);
  if (d == 0) throw DegenerateSpecialization("denominator vanishes at the evaluation point");
  return num_.evaluate(bindings) / d;
}

RatFunc RatFunc::rebase(const SymbolsPtr& target) const {
  return RatFunc(num_.rebase(target), den_.rebase(target), Reduced{});
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

}  // namespace ptau
