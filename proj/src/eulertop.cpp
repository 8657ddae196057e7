#include "ptau/eulertop.hpp"

#include <algorithm>
#include <cmath>

#include "ptau/errors.hpp"
#include "ptau/painleve.hpp"

namespace ptau {

namespace {

double eval_poly(const MultiPoly& p, std::size_t var, double x) {
  auto cs = p.coefficients_in(var);
  double acc = 0;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    if (!it->is_constant() && !it->is_zero()) throw Error("expected a univariate rational function");
    acc = acc * x + it->constant_term().get_d();
  }
  return acc;
}

double eval_ratfunc(const RatFunc& r, std::string_view t, double x) {
  auto var = r.symbols()->require(t);
  return eval_poly(r.numerator(), var, x) / eval_poly(r.denominator(), var, x);
}

using Vec = std::array<double, 6>;

Vec pack(const EulerState& s) {
  return {s.omega[0], s.omega[1], s.omega[2], s.omega_bar[0], s.omega_bar[1], s.omega_bar[2]};
}

EulerState unpack(double t, const Vec& y) { return EulerState{t, {y[0], y[1], y[2]}, {y[3], y[4], y[5]}}; }

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

Vec rhs_vec(double t, const Vec& y, const Triple& nu) { return euler_rhs(unpack(t, y), nu); }

Vec axpy(const Vec& y, double h, std::initializer_list<std::pair<double, const Vec*>> ks) {
  Vec r = y;
  for (std::size_t i = 0; i < 6; ++i) {
    double s = 0;
    for (const auto& [a, k] : ks) s += a * (*k)[i];
    r[i] += h * s;
  }
  return r;
}

}  // namespace

EulerState ExactEulerState::to_double() const {
  EulerState s;
  s.t = t.get_d();
  for (int i = 0; i < 3; ++i) {
    s.omega[i] = omega[i].get_d();
    s.omega_bar[i] = omega_bar[i].get_d();
  }
  return s;
}

ConservedSet conserved_from(const TauFamily& family) {
  const auto& sp = family.params();
  ConservedSet c;
  c.R2 = sp.R2;
  c.mu = sp.mu;
  c.nu = sp.nu;
  auto f = f_from_tau0(family.tau0(sp.nu), family.t_name());
  c.t = family.t_name();
  c.f2 = f.derivative(family.t_name()).derivative(family.t_name());
  return c;
}

std::array<double, 6> euler_rhs(const EulerState& s, const Triple& nu) {
  const double t = s.t;
  if (t == 0 || t == 1) throw PoleError("Euler top right-hand side is singular at t = 0 and t = 1");
  const auto& w = s.omega;
  const auto& wb = s.omega_bar;
  const double n31 = nu[2] - nu[0], n32 = nu[2] - nu[1];
  const double tt = t * (t - 1);
  return {
      w[1] * wb[2] / t + w[0] / tt * n32,     // w1
      w[0] * w[2] / tt - w[1] / t * n31,      // w2
      wb[0] * w[1] / (1 - t),                 // w3
      wb[1] * w[2] / t - wb[0] / tt * n32,    // wb1
      wb[0] * wb[2] / tt + wb[1] / t * n31,   // wb2
      w[0] * wb[1] / (1 - t),                 // wb3
  };
}

ExactEulerState init_exact(const TauFamily& family, const Rational& t0) {
  if (t0 == 0 || t0 == 1) throw PoleError("t0 must avoid 0 and 1");
  auto beta = [&](int i, int j) { return rotation_beta(family, i, j, t0, 1); };
  ExactEulerState s;
  s.t = t0;
  const Rational one_t = 1 - t0;
  s.omega[2] = beta(1, 2);
  s.omega_bar[2] = beta(2, 1);
  s.omega[1] = -beta(1, 3) / t0;
  s.omega_bar[1] = -beta(3, 1) / t0;
  s.omega[0] = one_t * beta(2, 3) / t0;
  s.omega_bar[0] = one_t * beta(3, 2) / t0;
  for (auto& x : s.omega) x.canonicalize();
  for (auto& x : s.omega_bar) x.canonicalize();
  return s;
}

EulerState init_from_tau(const TauFamily& family, const Rational& t0) { return init_exact(family, t0).to_double(); }

std::vector<EulerState> integrate(const EulerState& s0, const Triple& nu, double t_end, double tol,
                                  const std::vector<double>& samples) {
  if (!(tol > 0)) throw InvalidParameters("tolerance must be positive");
  const double t0 = s0.t;
  const double lo = std::min(t0, t_end), hi = std::max(t0, t_end);
  if ((lo <= 0 && hi >= 0) || (lo <= 1 && hi >= 1))
    throw InvalidParameters("integration interval must exclude t = 0 and t = 1");
  const double dir = t_end >= t0 ? 1.0 : -1.0;

  std::vector<double> targets;
  for (double x : samples)
    if ((x - t0) * dir > 0 && (t_end - x) * dir >= 0) targets.push_back(x);
  std::sort(targets.begin(), targets.end(), [&](double a, double b) { return a * dir < b * dir; });
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  const bool dense = targets.empty();
  if (targets.empty() || targets.back() != t_end) targets.push_back(t_end);

  std::vector<EulerState> out{s0};
  if (t0 == t_end) return out;

  double t = t0;
  Vec y = pack(s0);
  Vec k1 = rhs_vec(t, y, nu);
  double h = dir * std::min(std::abs(t_end - t0), 1e-3);
  double err_old = 1e-4;
  constexpr double safe = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
  std::size_t next = 0;
  long steps = 0;

  while (next < targets.size()) {
    if (++steps > 2'000'000) throw IntegrationPole("step budget exhausted", t);
    const double target = targets[next];
    bool lands = false;
    if ((t + h - target) * dir >= 0) {
      h = target - t;
      lands = true;
    }
    if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t)))
      throw IntegrationPole("step size underflow near t = " + std::to_string(t), t);

    Vec k2 = rhs_vec(t + c2 * h, axpy(y, h, {{a21, &k1}}), nu);
    Vec k3 = rhs_vec(t + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}), nu);
    Vec k4 = rhs_vec(t + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}), nu);
    Vec k5 = rhs_vec(t + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}), nu);
    Vec k6 = rhs_vec(t + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}), nu);
    Vec ynew = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const double tnew = lands ? target : t + h;
    Vec k7 = rhs_vec(tnew, ynew, nu);

    double err = 0;
    bool finite = true;
    for (std::size_t i = 0; i < 6; ++i) {
      double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double sc = tol + tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (e / sc) * (e / sc);
      finite = finite && std::isfinite(ynew[i]);
    }
    err = std::sqrt(err / 6);
    if (!finite || !std::isfinite(err)) {
      h *= 0.1;
      continue;
    }

    double fac11 = std::pow(err, expo1);
    if (err <= 1.0) {
      double fac = std::clamp(fac11 / std::pow(err_old, beta) / safe, 0.2, 10.0);
      err_old = std::max(err, 1e-4);
      t = tnew;
      y = ynew;
      k1 = k7;
      if (lands) {
        out.push_back(unpack(t, y));
        ++next;
      } else if (dense) {
        out.push_back(unpack(t, y));
      }
      h = h / fac;
    } else {
      h = h / std::min(5.0, fac11 / safe);
    }
  }
  return out;
}

double quadratic_monitor(const EulerState& s, const Rational& R2) {
  double sum = R2.get_d();
  for (int i = 0; i < 3; ++i) sum += s.omega[i] * s.omega_bar[i];
  return sum;
}

double cubic_monitor(const EulerState& s, const Triple& mu, const Triple& nu) {
  const auto& w = s.omega;
  const auto& wb = s.omega_bar;
  // [[n1, w3, -w2], [-wb3, n2, w1], [wb2, -wb1, n3]]
  const double m[3][3] = {{double(nu[0]), w[2], -w[1]}, {-wb[2], double(nu[1]), w[0]}, {wb[1], -wb[0], double(nu[2])}};
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return det - double(mu[0]) * mu[1] * mu[2];
}

double curvature_monitor(const EulerState& s, const RatFunc& f2, std::string_view t) {
  const auto& w = s.omega;
  const auto& wb = s.omega_bar;
  const double fpp = f2.is_zero() ? 0.0 : eval_ratfunc(f2, t, s.t);
  return wb[0] * w[1] * wb[2] + w[0] * wb[1] * w[2] - s.t * (s.t - 1) * fpp;
}

bool MonitorReport::within(double threshold) const {
  return std::all_of(max_abs.begin(), max_abs.end(), [&](double m) { return m <= threshold; });
}

MonitorReport monitor(const std::vector<EulerState>& trajectory, const ConservedSet& conserved) {
  MonitorReport r;
  for (const auto& s : trajectory) {
    std::array<double, 3> row{quadratic_monitor(s, conserved.R2), cubic_monitor(s, conserved.mu, conserved.nu),
                              conserved.f2 ? curvature_monitor(s, *conserved.f2, conserved.t) : 0.0};
    for (int i = 0; i < 3; ++i) {
      double a = std::isfinite(row[i]) ? std::abs(row[i]) : INFINITY;
      r.max_abs[i] = std::max(r.max_abs[i], a);
    }
    r.values.push_back(row);
  }
  return r;
}

}  // namespace ptau
