#include "ptau/schur.hpp"

#include "ptau/errors.hpp"

namespace ptau {

std::vector<std::string> time_symbol_names(int order) {
  std::vector<std::string> names;
  for (int a = 1; a <= 3; ++a)
    for (int k = 1; k <= order; ++k) names.push_back("u" + std::to_string(a) + "_" + std::to_string(k));
  return names;
}

TimeVector symbolic_times(const SymbolsPtr& syms, int order) {
  TimeVector u;
  for (int a = 1; a <= 3; ++a)
    for (int k = 1; k <= order; ++k)
      u.comp[a - 1].push_back(MultiPoly::variable(syms, "u" + std::to_string(a) + "_" + std::to_string(k)));
  return u;
}

TimeVector first_times(const std::array<MultiPoly, 3>& first, int order) {
  TimeVector u;
  for (int a = 0; a < 3; ++a) {
    u.comp[a].assign(std::max(order, 1), MultiPoly(first[a].symbols()));
    u.comp[a][0] = first[a];
  }
  return u;
}

std::vector<MultiPoly> schur_table(int jmax, const TimeSeq& s, const SymbolsPtr& syms) {
  std::vector<MultiPoly> S;
  if (jmax < 0) return S;
  S.push_back(MultiPoly::constant(syms, 1));
  for (int j = 1; j <= jmax; ++j) {
    MultiPoly acc(syms);
    for (int k = 1; k <= j && k <= static_cast<int>(s.size()); ++k) {
      if (s[k - 1].is_zero() || S[j - k].is_zero()) continue;
      acc += Rational(k) * (s[k - 1] * S[j - k]);
    }
    S.push_back(acc * Rational(1, j));
  }
  return S;
}

MultiPoly elementary_schur(int j, const TimeSeq& s, const SymbolsPtr& syms) {
  if (j < 0) return MultiPoly(syms);
  return schur_table(j, s, syms).back();
}

namespace {

Rational factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

}  // namespace

RatFunc divided_power(int n, const RatFunc& x) {
  if (n < 0) return RatFunc(x.symbols());
  return (1 / factorial(n)) * x.pow(n);
}

MultiPoly divided_power(int n, const MultiPoly& x) {
  if (n < 0) return MultiPoly(x.symbols());
  return x.pow(n) * (1 / factorial(n));
}

TimeSeq sequence_diff(const TimeSeq& a, const TimeSeq& b) {
  if (a.size() != b.size()) throw ShapeError("time sequences of different truncation order");
  TimeSeq out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

}  // namespace ptau
