#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptau/matrix.hpp"
#include "ptau/ratfunc.hpp"
#include "ptau/schur.hpp"

namespace ptau {

using Triple = std::array<int, 3>;

/// Integer scaling data after the shift that makes every mu_i non-positive.
struct ScalingParams {
  Triple mu{};       // normalized
  Triple nu{};       // normalized
  Triple m{};        // m1 >= m2 >= m3 >= 0, a permutation of -mu
  int shift_c = 0;   // raw value minus normalized value
  int R2 = 0;        // (sum mu^2 - sum nu^2) / 2
  int p = 0;         // max(m1 + nu_i)
  bool in_support = false;
};

/// Validates the trace condition and normalizes. Throws InvalidParameters.
ScalingParams normalize_params(const Triple& mu_raw, const Triple& nu_raw);
/// Same mu, different (already normalized) nu with the same trace.
ScalingParams with_nu(const ScalingParams& base, const Triple& nu);
/// Lattice points of the support polygon for this mu, in lexicographic order.
std::vector<Triple> support_points(const ScalingParams& params);

/// w[a-1][b-1] = w_a^(b).
struct WeightMatrix {
  std::array<std::array<MultiPoly, 3>, 3> w;
  const MultiPoly& operator()(int a, int b) const { return w.at(a - 1).at(b - 1); }
  const SymbolsPtr& symbols() const { return w[0][0].symbols(); }
};

/// Symbol names "w<a>_<b>" for w_a^(b), row-major in a.
std::vector<std::string> weight_symbol_names();
WeightMatrix symbolic_weights(const SymbolsPtr& syms);
WeightMatrix numeric_weights(const SymbolsPtr& syms, const std::array<std::array<Rational, 3>, 3>& values);
/// Substitute rationals for weight symbols.
WeightMatrix specialize_weights(const WeightMatrix& w, const std::map<std::string, Rational>& bindings);
/// det of the 3x3 weight matrix.
MultiPoly weight_determinant(const WeightMatrix& w);

/// (-1)^(m1 nu2 + nu1 nu2 + nu1 nu3 + nu2 nu3)
int tau_sign(const ScalingParams& params);
/// (-1)^(p(p+1)/2 + m1 nu2 + m1 p + p nu2 + nu1 nu2 + nu1 nu3 + nu2 nu3)
int tau_sign_A(const ScalingParams& params);

/// The (2m1-m2-m3)-square matrix with w2 entries t^(n) and w3 entries 1^(n).
/// `t` is the polynomial substituted for the time difference u2 - u1.
/// nullopt off the support.
std::optional<PolyMatrix> build_T(const ScalingParams& params, const WeightMatrix& weights, const MultiPoly& t);
/// Same shape with entries S_n(u^(2) - u^(1)) and S_n(u^(3) - u^(1)).
std::optional<PolyMatrix> build_E(const ScalingParams& params, const WeightMatrix& weights, const TimeVector& u);
/// The 3p-square matrix in the re-indexed (appendix) form, entries S_n(u^(k)).
std::optional<PolyMatrix> build_A(const ScalingParams& params, const WeightMatrix& weights, const TimeVector& u);

/// tau_sign * det(E); zero off the support.
MultiPoly tau_from_E(const ScalingParams& params, const WeightMatrix& weights, const TimeVector& u);
/// tau_sign_A * det(A); zero off the support.
MultiPoly tau_from_A(const ScalingParams& params, const WeightMatrix& weights, const TimeVector& u);

/// tau_sign * t^(-R2) * det(T), with `t` the named symbol of the weight set.
RatFunc tau0(const ScalingParams& params, const WeightMatrix& weights, std::string_view t = "t");

/// tau0 for every support point of a fixed mu; zero elsewhere.
class TauFamily {
 public:
  TauFamily(ScalingParams params, WeightMatrix weights, std::string t = "t");

  const ScalingParams& params() const { return params_; }
  const WeightMatrix& weights() const { return weights_; }
  const std::string& t_name() const { return t_; }
  /// tau0(nu); the zero function for nu outside the support.
  const RatFunc& tau0(const Triple& nu) const;
  /// det(T_nu) as a polynomial in t (zero off the support).
  const MultiPoly& det_T(const Triple& nu) const;
  const std::map<Triple, RatFunc>& entries() const { return tau0_; }

 private:
  ScalingParams params_;
  WeightMatrix weights_;
  std::string t_;
  std::map<Triple, RatFunc> tau0_;
  std::map<Triple, MultiPoly> detT_;
  RatFunc zero_;
  MultiPoly zero_poly_;
};

/// Rotation coefficient beta_ij at first times (0, h, h/t) as a rational
/// function of t (h = 1), via the quotient of T determinants.
RatFunc rotation_beta_t(const TauFamily& family, int i, int j);
/// beta_ij at (t0, h0) for numeric weights. Throws PoleError when tau(nu)
/// vanishes there.
Rational rotation_beta(const TauFamily& family, int i, int j, const Rational& t0, const Rational& h0 = 1);

std::string triple_to_string(const Triple& v);

}  // namespace ptau
