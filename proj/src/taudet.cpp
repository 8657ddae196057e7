#include "ptau/taudet.hpp"

#include <algorithm>

#include "ptau/errors.hpp"

namespace ptau {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

int sum(const Triple& v) { return v[0] + v[1] + v[2]; }

}  // namespace

std::string triple_to_string(const Triple& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

ScalingParams normalize_params(const Triple& mu_raw, const Triple& nu_raw) {
  if (sum(mu_raw) != sum(nu_raw))
    throw InvalidParameters("trace condition violated: nu1+nu2+nu3 = " + std::to_string(sum(nu_raw)) +
                            " but mu1+mu2+mu3 = " + std::to_string(sum(mu_raw)));
  ScalingParams sp;
  sp.shift_c = std::max(0, *std::max_element(mu_raw.begin(), mu_raw.end()));
  for (int i = 0; i < 3; ++i) sp.mu[i] = mu_raw[i] - sp.shift_c;
  for (int i = 0; i < 3; ++i) sp.m[i] = -sp.mu[i];
  std::sort(sp.m.begin(), sp.m.end(), std::greater<>());
  return with_nu(sp, {nu_raw[0] - sp.shift_c, nu_raw[1] - sp.shift_c, nu_raw[2] - sp.shift_c});
}

ScalingParams with_nu(const ScalingParams& base, const Triple& nu) {
  if (sum(nu) != sum(base.mu)) throw InvalidParameters("trace condition violated for nu = " + triple_to_string(nu));
  ScalingParams sp = base;
  sp.nu = nu;
  int twice = 0;
  for (int i = 0; i < 3; ++i) twice += sp.mu[i] * sp.mu[i] - nu[i] * nu[i];
  // Parity is forced by the trace condition.
  sp.R2 = twice / 2;
  sp.p = 0;
  sp.in_support = true;
  for (int i = 0; i < 3; ++i) {
    sp.p = std::max(sp.p, sp.m[0] + nu[i]);
    if (nu[i] < -sp.m[0] || nu[i] > -sp.m[2]) sp.in_support = false;
  }
  return sp;
}

std::vector<Triple> support_points(const ScalingParams& params) {
  std::vector<Triple> out;
  const int lo = -params.m[0], hi = -params.m[2], s = sum(params.mu);
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b) {
      int c = s - a - b;
      if (c >= lo && c <= hi) out.push_back({a, b, c});
    }
  return out;
}

std::vector<std::string> weight_symbol_names() {
  std::vector<std::string> names;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) names.push_back("w" + std::to_string(a) + "_" + std::to_string(b));
  return names;
}

WeightMatrix symbolic_weights(const SymbolsPtr& syms) {
  WeightMatrix w;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      w.w[a - 1][b - 1] = MultiPoly::variable(syms, "w" + std::to_string(a) + "_" + std::to_string(b));
  return w;
}

WeightMatrix numeric_weights(const SymbolsPtr& syms, const std::array<std::array<Rational, 3>, 3>& values) {
  WeightMatrix w;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) w.w[a][b] = MultiPoly::constant(syms, values[a][b]);
  return w;
}

WeightMatrix specialize_weights(const WeightMatrix& w, const std::map<std::string, Rational>& bindings) {
  WeightMatrix out = w;
  for (auto& row : out.w)
    for (auto& e : row) e = e.substitute(bindings);
  return out;
}

MultiPoly weight_determinant(const WeightMatrix& w) {
  PolyMatrix m(3, std::vector<MultiPoly>(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m[a][b] = w.w[a][b];
  return det_fraction_free(m, w.symbols());
}

int tau_sign(const ScalingParams& sp) {
  const auto& n = sp.nu;
  return parity_sign(static_cast<long>(sp.m[0]) * n[1] + n[0] * n[1] + n[0] * n[2] + n[1] * n[2]);
}

int tau_sign_A(const ScalingParams& sp) {
  const auto& n = sp.nu;
  const long p = sp.p, m1 = sp.m[0];
  return parity_sign(p * (p + 1) / 2 + m1 * n[1] + m1 * p + p * n[1] + n[0] * n[1] + n[0] * n[2] + n[1] * n[2]);
}

namespace {

// Shared layout of E and T. S2[n] and S3[n] are the entries for the time
// differences u^(2)-u^(1) and u^(3)-u^(1); indices past the tables are zero.
PolyMatrix layout_E(const ScalingParams& sp, const WeightMatrix& w, const std::vector<MultiPoly>& S2,
                    const std::vector<MultiPoly>& S3) {
  const int m1 = sp.m[0], m2 = sp.m[1], m3 = sp.m[2];
  const int n1 = sp.nu[0], n2 = sp.nu[1], n3 = sp.nu[2];
  const int n = 2 * m1 - m2 - m3;
  const auto& syms = w.symbols();
  PolyMatrix E = zero_matrix(syms, n, n);
  auto at = [&](int r, int c) -> MultiPoly& { return E.at(r - 1).at(c - 1); };
  auto S = [&](const std::vector<MultiPoly>& tab, int k) {
    return (k < 0 || k >= static_cast<int>(tab.size())) ? MultiPoly(syms) : tab[k];
  };

  for (int j = 1; j <= m1 + n1; ++j) at(n - j + 1, m1 - m3 - j + 1) += w(1, 3);
  for (int i = 1; i <= m1 - m3; ++i) {
    for (int j = 1; j <= m1 + n2; ++j) at(m1 + n3 + j, i) += w(2, 3) * S(S2, j - m3 - n2 - i);
    for (int j = 1; j <= m1 + n3; ++j) at(j, i) += w(3, 3) * S(S3, j - m3 - n3 - i);
  }
  for (int j = 1; j <= std::min(m1 + n1, m1 - m2); ++j) at(n - j + 1, n - j + 1) += w(1, 2);
  for (int i = 1; i <= m1 - m2; ++i) {
    for (int j = 1; j <= m1 + n2; ++j) at(m1 + n3 + j, m1 - m3 + i) += w(2, 2) * S(S2, j - m2 - n2 - i);
    for (int j = 1; j <= m1 + n3; ++j) at(j, m1 - m3 + i) += w(3, 2) * S(S3, j - m2 - n3 - i);
  }
  return E;
}

// Largest Schur index any entry of E or A can need.
int max_schur_index(const ScalingParams& sp) { return 3 * sp.m[0] + 3; }

}  // namespace

std::optional<PolyMatrix> build_T(const ScalingParams& sp, const WeightMatrix& w, const MultiPoly& t) {
  if (!sp.in_support) return std::nullopt;
  const int N = max_schur_index(sp);
  std::vector<MultiPoly> S2, S3;
  for (int k = 0; k <= N; ++k) {
    S2.push_back(divided_power(k, t));
    S3.push_back(k == 0 ? MultiPoly::constant(w.symbols(), 1) : divided_power(k, MultiPoly::constant(w.symbols(), 1)));
  }
  return layout_E(sp, w, S2, S3);
}

std::optional<PolyMatrix> build_E(const ScalingParams& sp, const WeightMatrix& w, const TimeVector& u) {
  if (!sp.in_support) return std::nullopt;
  const int N = max_schur_index(sp);
  auto S2 = schur_table(N, sequence_diff(u[2], u[1]), w.symbols());
  auto S3 = schur_table(N, sequence_diff(u[3], u[1]), w.symbols());
  return layout_E(sp, w, S2, S3);
}

std::optional<PolyMatrix> build_A(const ScalingParams& sp, const WeightMatrix& w, const TimeVector& u) {
  if (!sp.in_support) return std::nullopt;
  const int m1 = sp.m[0], m2 = sp.m[1], m3 = sp.m[2], p = sp.p;
  const auto& nu = sp.nu;
  const int N = 3 * p;
  const auto& syms = w.symbols();
  PolyMatrix A = zero_matrix(syms, N, N);
  auto at = [&](int r, int c) -> MultiPoly& { return A.at(r - 1).at(c - 1); };
  std::array<std::vector<MultiPoly>, 3> S;
  for (int k = 1; k <= 3; ++k) S[k - 1] = schur_table(max_schur_index(sp), u[k], syms);
  auto Sk = [&](int k, int idx) {
    const auto& tab = S[k - 1];
    return (idx < 0 || idx >= static_cast<int>(tab.size())) ? MultiPoly(syms) : tab[idx];
  };
  const int trace_nu = nu[0] + nu[1] + nu[2];
  auto f = [&](int k, int b) { return w(k, b) * Rational(parity_sign(trace_nu + nu[k - 1])); };

  for (int k = 1; k <= 3; ++k) {
    const int nk = nu[k - 1];
    for (int j = 0; j <= m1 + nk - 1; ++j) {
      const int row = 3 * j + 4 - k;
      for (int i = 1; i <= m1 - m3; ++i) at(row, i) += f(k, 3) * Sk(k, j - m3 - nk - i + 1);
      for (int i = 1; i <= m1 - m2; ++i) at(row, m1 - m3 + i) += f(k, 2) * Sk(k, j - m2 - nk - i + 1);
    }
  }
  const auto one = MultiPoly::constant(syms, 1);
  for (int i = 1; i <= p - m1 - nu[0]; ++i) at(3 * (m1 + nu[0] + i), 2 * m1 - m2 - m3 + i) += one;
  for (int i = 1; i <= p - m1 - nu[1]; ++i) at(3 * (m1 + nu[1] + i) - 1, m1 - m2 - m3 + p - nu[0] + i) += one;
  for (int i = 1; i <= p - m1 - nu[2]; ++i)
    at(3 * (m1 + nu[2] + i) - 2, 2 * p - m2 - m3 - nu[0] - nu[1] + i) += one;
  return A;
}

MultiPoly tau_from_E(const ScalingParams& sp, const WeightMatrix& w, const TimeVector& u) {
  auto E = build_E(sp, w, u);
  if (!E) return MultiPoly(w.symbols());
  return det_fraction_free(*E, w.symbols()) * Rational(tau_sign(sp));
}

MultiPoly tau_from_A(const ScalingParams& sp, const WeightMatrix& w, const TimeVector& u) {
  auto A = build_A(sp, w, u);
  if (!A) return MultiPoly(w.symbols());
  return det_fraction_free(*A, w.symbols()) * Rational(tau_sign_A(sp));
}

RatFunc tau0(const ScalingParams& sp, const WeightMatrix& w, std::string_view t_name) {
  const auto& syms = w.symbols();
  auto t = MultiPoly::variable(syms, t_name);
  auto T = build_T(sp, w, t);
  if (!T) return RatFunc(syms);
  MultiPoly d = det_fraction_free(*T, syms) * Rational(tau_sign(sp));
  if (sp.R2 >= 0) return RatFunc(d, t.pow(sp.R2));
  return RatFunc(d * t.pow(-sp.R2));
}

TauFamily::TauFamily(ScalingParams params, WeightMatrix weights, std::string t)
    : params_(std::move(params)), weights_(std::move(weights)), t_(std::move(t)),
      zero_(weights_.symbols()), zero_poly_(weights_.symbols()) {
  auto tv = MultiPoly::variable(weights_.symbols(), t_);
  for (const auto& nu : support_points(params_)) {
    auto sp = with_nu(params_, nu);
    auto T = build_T(sp, weights_, tv);
    MultiPoly d = det_fraction_free(*T, weights_.symbols());
    MultiPoly signed_d = d * Rational(tau_sign(sp));
    tau0_.emplace(nu, sp.R2 >= 0 ? RatFunc(signed_d, tv.pow(sp.R2)) : RatFunc(signed_d * tv.pow(-sp.R2)));
    detT_.emplace(nu, std::move(d));
  }
}

const RatFunc& TauFamily::tau0(const Triple& nu) const {
  auto it = tau0_.find(nu);
  return it == tau0_.end() ? zero_ : it->second;
}

const MultiPoly& TauFamily::det_T(const Triple& nu) const {
  auto it = detT_.find(nu);
  return it == detT_.end() ? zero_poly_ : it->second;
}

namespace {

Triple shifted(const Triple& nu, int i, int j) {
  Triple out = nu;
  out[i - 1] += 1;
  out[j - 1] -= 1;
  return out;
}

void check_pair(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) throw InvalidParameters("rotation coefficient needs distinct i, j in 1..3");
}

}  // namespace

RatFunc rotation_beta_t(const TauFamily& fam, int i, int j) {
  check_pair(i, j);
  const auto& sp = fam.params();
  const auto& nu = sp.nu;
  const int k = 6 - i - j;
  const auto& syms = fam.weights().symbols();
  const MultiPoly& den = fam.det_T(nu);
  if (den.is_zero()) throw PoleError("tau vanishes identically at nu = " + triple_to_string(nu));
  const MultiPoly& num = fam.det_T(shifted(nu, i, j));
  if (num.is_zero()) return RatFunc(syms);
  const int e = sp.m[0] * ((i == 2) + (j == 2)) + nu[0] + nu[1] + nu[2] + nu[k - 1];
  const int sgn = -(i > j ? 1 : -1) * parity_sign(e);
  auto t = MultiPoly::variable(syms, fam.t_name());
  const int power = nu[j - 1] - nu[i - 1] - 1;  // of h/t
  RatFunc r = RatFunc(num, den) * RatFunc::constant(syms, sgn);
  if (power >= 0) return r / RatFunc(t.pow(power));
  return r * RatFunc(t.pow(-power));
}

Rational rotation_beta(const TauFamily& fam, int i, int j, const Rational& t0, const Rational& h0) {
  check_pair(i, j);
  const auto& sp = fam.params();
  const auto& nu = sp.nu;
  std::map<std::string, Rational> at{{fam.t_name(), t0}};
  Rational den = fam.det_T(nu).evaluate(at);
  if (den == 0) throw PoleError("tau(nu) vanishes at t = " + rational_to_string(t0));
  Rational num = fam.det_T(shifted(nu, i, j)).evaluate(at);
  if (num == 0) return 0;
  const int k = 6 - i - j;
  const int e = sp.m[0] * ((i == 2) + (j == 2)) + nu[0] + nu[1] + nu[2] + nu[k - 1];
  const int sgn = -(i > j ? 1 : -1) * parity_sign(e);
  const int power = nu[j - 1] - nu[i - 1] - 1;
  Rational ht = h0 / t0;
  Rational scale = 1;
  for (int s = 0; s < std::abs(power); ++s) scale *= ht;
  if (power < 0) scale = 1 / scale;
  return Rational(sgn) * scale * num / den;
}

}  // namespace ptau
