#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>

#include "ptau/taudet.hpp"

namespace ptau {

/// Basis vector of the 3-component fermionic Fock space in a finite window.
///
/// Component a has every level L < base[a] occupied (L = l - 1/2 for the
/// half-integer level l of the wedge basis), plus the levels base[a] + bit
/// for the set bits of mask[a]. The state |k1,k2,k3> built with the Q
/// operators from the vacuum is base = k, mask = 0.
struct WedgeState {
  Triple base{};
  std::array<std::uint64_t, 3> mask{};

  Triple charges() const;
  /// Fermionic degree: sum over components of (1/2) c^2 + |partition|.
  Rational degree() const;
  /// Re-express as a plain charged vacuum if it is one.
  std::optional<Triple> as_vacuum() const;

  friend auto operator<=>(const WedgeState&, const WedgeState&) = default;
};

/// Finite linear combination of wedge states.
class FockVector {
 public:
  explicit FockVector(SymbolsPtr syms) : syms_(std::move(syms)) {}
  /// The charged vacuum |k1,k2,k3> with coefficient 1.
  static FockVector charged_vacuum(const SymbolsPtr& syms, const Triple& k);

  const std::map<WedgeState, MultiPoly>& terms() const { return terms_; }
  const SymbolsPtr& symbols() const { return syms_; }
  void add(const WedgeState& s, const MultiPoly& c);
  /// Coefficient of the plain charged vacuum |k1,k2,k3>.
  MultiPoly vacuum_coefficient(const Triple& k) const;

 private:
  SymbolsPtr syms_;
  std::map<WedgeState, MultiPoly> terms_;
};

/// psi^{+(a)}_{K+1/2} applied to v: inserts level L = -K-1 of component a,
/// with the Jordan-Wigner sign (-1)^(N_1+...+N_{a-1} + #occupied above).
FockVector apply_psi_plus(const FockVector& v, int a, int K);

/// phi^{+(b)}_{K+1/2}(u) applied to v. Without `nu` this is the plain operator
/// sum_a sum_{j=K+1/2}^{m1-1/2} w_a^(b) psi_j^{+(a)} S_{j-K-1/2}(u^(a)); with
/// `nu` it is the conjugated form built from f_a^(b)(nu) and psi_{j+nu_a}.
FockVector apply_phi(const FockVector& v, int b, int K, int m1, const WeightMatrix& w, const TimeVector& u,
                     const std::optional<Triple>& nu = std::nullopt);

/// G|0> at zero times: the phi^(3) string then the phi^(2) string applied to
/// |-m1,-m1,-m1>.
FockVector build_G_vacuum(const ScalingParams& params, const WeightMatrix& w);

/// tau(nu; u) = <0| Q3^-nu3 Q2^-nu2 Q1^-nu1 Phi(u) |-m1,-m1,-m1>, i.e. the
/// coefficient of |nu1,nu2,nu3> in Phi(u)|-m1,-m1,-m1>.
MultiPoly tau_oracle(const ScalingParams& params, const WeightMatrix& w, const TimeVector& u);
/// The same value through the conjugated operators and the stated prefactor
/// (-1)^(m1 nu2 + nu1 nu2 + nu1 nu3 + nu2 nu3) acting on |-m1-nu1,-m1-nu2,-m1-nu3>.
MultiPoly tau_oracle_conjugated(const ScalingParams& params, const WeightMatrix& w, const TimeVector& u);

}  // namespace ptau
