#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptau/ratfunc.hpp"
#include "ptau/taudet.hpp"

namespace ptau {

struct EulerState {
  double t = 0;
  std::array<double, 3> omega{};      // w1, w2, w3
  std::array<double, 3> omega_bar{};  // wb1, wb2, wb3
};

/// The same state before float conversion.
struct ExactEulerState {
  Rational t;
  std::array<Rational, 3> omega, omega_bar;
  EulerState to_double() const;
};

struct ConservedSet {
  Rational R2;
  Triple mu{}, nu{};
  /// f'' in t, for the third monitor. Left empty, that monitor reads 0.
  std::optional<RatFunc> f2;
  std::string t = "t";
};

/// Conserved data of a tau family; f2 is taken from its tau0.
ConservedSet conserved_from(const TauFamily& family);

/// d/dt of (w1, w2, w3, wb1, wb2, wb3). Throws PoleError at t = 0 or 1.
std::array<double, 6> euler_rhs(const EulerState& s, const Triple& nu);

/// Exact initial data from rotation coefficients at h = 1. Throws PoleError
/// when a tau function vanishes at t0 (or t0 is 0 or 1).
ExactEulerState init_exact(const TauFamily& family, const Rational& t0);
EulerState init_from_tau(const TauFamily& family, const Rational& t0);

/// Dormand-Prince 5(4) with a PI step controller. Steps land exactly on every
/// sample point inside (t0, t_end]; the returned trajectory holds the initial
/// state, the samples and the final state, in order. With no samples, every
/// accepted step is returned. Throws IntegrationPole on step underflow.
std::vector<EulerState> integrate(const EulerState& s0, const Triple& nu, double t_end, double tol,
                                  const std::vector<double>& samples = {});

/// sum w_i wb_i + R2
double quadratic_monitor(const EulerState& s, const Rational& R2);
/// det(Vbar + nu) - mu1 mu2 mu3, with nu3 in the bottom corner
double cubic_monitor(const EulerState& s, const Triple& mu, const Triple& nu);
/// wb1 w2 wb3 + w1 wb2 w3 - t (t-1) f''
double curvature_monitor(const EulerState& s, const RatFunc& f2, std::string_view t = "t");

struct MonitorReport {
  std::vector<std::array<double, 3>> values;  // one row per state
  std::array<double, 3> max_abs{};
  bool within(double threshold) const;
};
MonitorReport monitor(const std::vector<EulerState>& trajectory, const ConservedSet& conserved);

}  // namespace ptau
