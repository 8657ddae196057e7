#pragma once

#include <array>
#include <string>
#include <vector>

#include "ptau/ratfunc.hpp"

namespace ptau {

/// Finitely supported time sequence s = (s_1, s_2, ...); entry k-1 holds s_k.
using TimeSeq = std::vector<MultiPoly>;

/// Three time sequences u^(1), u^(2), u^(3) of a common truncation order.
struct TimeVector {
  std::array<TimeSeq, 3> comp;

  std::size_t order() const { return comp[0].size(); }
  const TimeSeq& operator[](int a) const { return comp.at(a - 1); }  // 1-based component
};

/// Names "u<a>_<k>" for a = 1..3, k = 1..order, component-major.
std::vector<std::string> time_symbol_names(int order);
/// Times u_k^(a) as the symbols of time_symbol_names(order), which `syms` must declare.
TimeVector symbolic_times(const SymbolsPtr& syms, int order);
/// Only first times set: u_1^(a) = first[a-1], higher times zero up to `order`.
TimeVector first_times(const std::array<MultiPoly, 3>& first, int order);

/// Coefficient of lambda^j in exp(sum_n s_n lambda^n); 0 for j < 0.
MultiPoly elementary_schur(int j, const TimeSeq& s, const SymbolsPtr& syms);
/// S_0 .. S_jmax in one pass of the recurrence j S_j = sum_k k s_k S_{j-k}.
std::vector<MultiPoly> schur_table(int jmax, const TimeSeq& s, const SymbolsPtr& syms);

/// x^n / n!, zero for n < 0.
RatFunc divided_power(int n, const RatFunc& x);
MultiPoly divided_power(int n, const MultiPoly& x);

/// Entrywise a - b; the truncation orders must agree.
TimeSeq sequence_diff(const TimeSeq& a, const TimeSeq& b);

}  // namespace ptau
