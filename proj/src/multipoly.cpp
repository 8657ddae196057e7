#include "ptau/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ptau/errors.hpp"

namespace ptau {

Symbols::Symbols(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw SymbolMismatch("duplicate symbol '" + names_[i] + "'");
}

std::optional<std::size_t> Symbols::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Symbols::require(std::string_view name) const {
  auto i = index(name);
  if (!i) throw SymbolMismatch("symbol '" + std::string(name) + "' is not declared");
  return *i;
}

SymbolsPtr make_symbols(std::vector<std::string> names) {
  return std::make_shared<const Symbols>(std::move(names));
}

bool same_symbols(const SymbolsPtr& a, const SymbolsPtr& b) {
  if (a == b) return true;
  if (!a || !b) return (!a || a->size() == 0) && (!b || b->size() == 0);
  return *a == *b;
}

SymbolsPtr merge_symbols(const SymbolsPtr& a, const SymbolsPtr& b) {
  std::vector<std::string> names = a ? a->names() : std::vector<std::string>{};
  if (b)
    for (const auto& n : b->names())
      if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  return make_symbols(std::move(names));
}

int grlex_compare(const Exponents& a, const Exponents& b) {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

namespace {

struct ExpHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

bool descending(const Term& a, const Term& b) { return grlex_compare(a.exp, b.exp) > 0; }

SymbolsPtr empty_symbols() {
  static const SymbolsPtr empty = make_symbols({});
  return empty;
}

// Merge-add two sorted term lists scaled by +1 / -1.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grlex_compare(a[i].exp, b[j].exp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly() : syms_(empty_symbols()) {}

MultiPoly::MultiPoly(SymbolsPtr syms) : syms_(syms ? std::move(syms) : empty_symbols()) {}

MultiPoly MultiPoly::constant(SymbolsPtr syms, const Rational& c) {
  MultiPoly p(std::move(syms));
  if (c != 0) {
    p.terms_.push_back(Term{Exponents(p.syms_->size(), 0), c});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

MultiPoly MultiPoly::variable(SymbolsPtr syms, std::string_view name) {
  auto i = syms->require(name);
  return variable(std::move(syms), i);
}

MultiPoly MultiPoly::variable(SymbolsPtr syms, std::size_t index) {
  MultiPoly p(std::move(syms));
  Exponents e(p.syms_->size(), 0);
  e.at(index) = 1;
  p.terms_.push_back(Term{std::move(e), Rational(1)});
  return p;
}

MultiPoly MultiPoly::monomial(SymbolsPtr syms, Exponents exp, const Rational& c) {
  MultiPoly p(std::move(syms));
  if (exp.size() != p.syms_->size()) throw SymbolMismatch("exponent vector has wrong length");
  if (c != 0) {
    p.terms_.push_back(Term{std::move(exp), c});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

MultiPoly MultiPoly::from_terms(SymbolsPtr syms, std::vector<Term> terms) {
  MultiPoly p(std::move(syms));
  std::unordered_map<Exponents, Rational, ExpHash> acc;
  for (auto& t : terms) {
    if (t.exp.size() != p.syms_->size()) throw SymbolMismatch("exponent vector has wrong length");
    t.coeff.canonicalize();
    acc[t.exp] += t.coeff;
  }
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.push_back(Term{e, c});
  std::sort(p.terms_.begin(), p.terms_.end(), descending);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_[0].exp)
    if (e) return false;
  return true;
}

Rational MultiPoly::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& last = terms_.back();
  for (auto e : last.exp)
    if (e) return 0;
  return last.coeff;
}

const Term& MultiPoly::leading() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t MultiPoly::degree(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

std::uint32_t MultiPoly::degree(std::string_view name) const { return degree(syms_->require(name)); }

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, std::accumulate(t.exp.begin(), t.exp.end(), 0u));
  return d;
}

bool MultiPoly::depends_on(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.exp[var]) return true;
  return false;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!same_symbols(syms_, o.syms_)) throw SymbolMismatch("polynomials are declared over different symbol sets");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.syms_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.syms_->size();
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplication by a monomial preserves the order.
    const auto& m = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& p = a.terms_.size() == 1 ? b : a;
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) {
      Exponents e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = t.exp[i] + m.exp[i];
      r.terms_.push_back(Term{std::move(e), t.coeff * m.coeff});
    }
    return r;
  }
  std::unordered_map<Exponents, Rational, ExpHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Exponents e(n);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = x.exp[i] + y.exp[i];
      acc[e] += x.coeff * y.coeff;
    }
  r.terms_.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) r.terms_.push_back(Term{k, c});
  std::sort(r.terms_.begin(), r.terms_.end(), descending);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!same_symbols(a.syms_, b.syms_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(syms_, 1);
  MultiPoly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term d{t.exp, t.coeff * t.exp[var]};
    d.exp[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(syms_, std::move(out));
}

MultiPoly MultiPoly::derivative(std::string_view name) const { return derivative(syms_->require(name)); }

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  check_compatible(value);
  auto coeffs = coefficients_in(var);
  // Horner in `value`.
  MultiPoly r(syms_);
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * value + coeffs[k];
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, Rational>& bindings) const {
  std::vector<std::pair<std::size_t, Rational>> bound;
  for (const auto& [name, value] : bindings)
    if (auto i = syms_->index(name)) bound.emplace_back(*i, value);
  if (bound.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term r{t.exp, t.coeff};
    for (const auto& [i, v] : bound) {
      if (r.exp[i] == 0) continue;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), v.get_num_mpz_t(), r.exp[i]);
      mpz_pow_ui(den.get_mpz_t(), v.get_den_mpz_t(), r.exp[i]);
      r.coeff *= Rational(num, den);
      r.exp[i] = 0;
    }
    r.coeff.canonicalize();
    out.push_back(std::move(r));
  }
  return from_terms(syms_, std::move(out));
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& bindings) const {
  MultiPoly s = substitute(bindings);
  if (!s.is_constant()) throw Error("evaluate: unbound symbols remain in " + s.to_string());
  return s.constant_term();
}

MultiPoly MultiPoly::rebase(const SymbolsPtr& target) const {
  if (same_symbols(syms_, target)) {
    MultiPoly r = *this;
    r.syms_ = target;
    return r;
  }
  std::vector<std::optional<std::size_t>> map(syms_->size());
  for (std::size_t i = 0; i < syms_->size(); ++i) map[i] = target->index(syms_->name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target->size(), 0);
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (!t.exp[i]) continue;
      if (!map[i]) throw SymbolMismatch("symbol '" + syms_->name(i) + "' is absent from the target symbol set");
      e[*map[i]] = t.exp[i];
    }
    out.push_back(Term{std::move(e), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree(var) + 1);
  for (const auto& t : terms_) {
    Term c = t;
    auto k = c.exp[var];
    c.exp[var] = 0;
    buckets[k].push_back(std::move(c));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Zeroing one exponent keeps grlex order only within equal degrees, so re-sort.
    MultiPoly p(syms_);
    p.terms_ = std::move(b);
    std::sort(p.terms_.begin(), p.terms_.end(), descending);
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& coeffs, std::size_t var) {
  if (coeffs.empty()) return MultiPoly();
  MultiPoly r(coeffs.front().syms_);
  for (std::size_t k = 0; k < coeffs.size(); ++k) r += coeffs[k].shift_degree(var, static_cast<std::uint32_t>(k));
  return r;
}

MultiPoly MultiPoly::shift_degree(std::size_t var, std::uint32_t k) const {
  MultiPoly r = *this;
  if (k == 0) return r;
  for (auto& t : r.terms_) t.exp[var] += k;
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading().coeff;
  return *this * inv;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& x) {
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
    std::size_t i = 0;
    while (i < x.size() && std::isspace(static_cast<unsigned char>(x[i]))) ++i;
    x.erase(0, i);
  };
  trim(s);
  if (s.empty()) throw ParseError("empty rational");
  Rational q;
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      q = Rational(mpz_class(s, 10));
    } else {
      std::string a = s.substr(0, slash), b = s.substr(slash + 1);
      trim(a);
      trim(b);
      mpz_class den(b, 10);
      if (den == 0) throw ParseError("zero denominator in '" + s + "'");
      q = Rational(mpz_class(a, 10), den);
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_vars = false;
    for (auto e : t.exp)
      if (e) has_vars = true;
    bool wrote = false;
    if (c != 1 || !has_vars) {
      os << rational_to_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (!t.exp[i]) continue;
      if (wrote) os << "*";
      os << syms_->name(i);
      if (t.exp[i] > 1) os << "^" << t.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (!same_symbols(a.symbols(), b.symbols())) throw SymbolMismatch("division across symbol sets");
  if (b.is_zero()) throw Error("division by the zero polynomial");
  MultiPoly q(a.symbols());
  if (a.is_zero()) return q;
  if (b.is_constant()) return a * Rational(1 / b.leading().coeff);
  const std::size_t n = a.symbols()->size();
  const Term& lb = b.leading();
  // Cheap degree screen.
  for (std::size_t i = 0; i < n; ++i)
    if (b.degree(i) > a.degree(i)) return std::nullopt;
  std::vector<Term> quot;
  MultiPoly r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (lr.exp[i] < lb.exp[i]) return std::nullopt;
      e[i] = lr.exp[i] - lb.exp[i];
    }
    Rational c = lr.coeff / lb.coeff;
    MultiPoly m = MultiPoly::monomial(a.symbols(), e, c);
    quot.push_back(Term{std::move(e), c});
    r -= m * b;
  }
  // Quotient terms are produced in descending order.
  return MultiPoly::from_terms(a.symbols(), std::move(quot));
}

MultiPoly divide_or_throw(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *q;
}

}  // namespace ptau
