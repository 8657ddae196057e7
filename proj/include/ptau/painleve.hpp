#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ptau/taudet.hpp"

namespace ptau {

using VTuple = std::array<Rational, 4>;
/// (c5, c6, c7, c8, c9, c10)
using CCoeffs = std::array<Rational, 6>;
/// (A1, A2, A3, A4)
using ACoeffs = std::array<Rational, 4>;

struct PviParams {
  Rational alpha, beta, gamma, delta;
  friend bool operator==(const PviParams&, const PviParams&) = default;
};

/// Element of D4 acting on v: v'_i = sign[i] * v[perm[i]] (0-based perm),
/// with an even number of negative signs.
struct Branch {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<int, 4> sign{1, 1, 1, 1};

  /// "1234/++++" style identifier.
  std::string id() const;
  friend bool operator==(const Branch&, const Branch&) = default;
};

/// Accepts "1234/+-+-" identifiers and the aliases "identity", "flip13"
/// (negate v1 and v3) and "swap23" (exchange v2 and v3). Throws ParseError
/// for malformed ids and InvalidParameters for odd sign changes.
Branch parse_branch(const std::string& id);
/// All 192 elements, identity first.
std::vector<Branch> d4_branches();
VTuple apply_branch(const VTuple& v, const Branch& b);
/// One representative per distinct outcome. Swapping v1<->v2 or v3<->v4
/// leaves (alpha..delta), sigma and y unchanged, so branches are grouped by
/// the unordered pairs {v1,v2}, {v3,v4}.
std::vector<Branch> distinct_branches(const VTuple& v);

CCoeffs c_coefficients(const ScalingParams& params);
ACoeffs A_coefficients(const CCoeffs& c);
/// A1 = sum v^2, A2 = 4 v1v2v3v4, A3 = e2(v^2) - 2 v1v2v3v4, A4 = e3(v^2).
ACoeffs A_from_v(const VTuple& v);
/// Closed form in the Painleve parameters; `s` is the chosen square root of
/// 1 - 2 delta (s = v3 + v4 + 1).
ACoeffs A_from_pvi(const PviParams& p, const Rational& s);

/// v_i = (nu1+nu3)/2 - mu_i, v4 = (nu1-nu3)/2, then the branch.
VTuple v_values(const ScalingParams& params, const Branch& branch = {});
PviParams pvi_params(const VTuple& v);
/// Coefficients of x^4 - A1 x^3 + (A3 + A2/2) x^2 - A4 x + A2^2/16 at x = r.
Rational quartic_at(const ACoeffs& A, const Rational& x);

/// t(t-1) tau0'/tau0. Throws Error for tau0 = 0.
RatFunc f_from_tau0(const RatFunc& tau0, std::string_view t = "t");
/// sigma = f - a t - b with a = -c5, b = c5 + c6/2.
RatFunc sigma_from_f(const RatFunc& f, const CCoeffs& c, std::string_view t = "t");
/// y = ((v3+v4) B + (sigma' - v3 v4) C) / (2 A). Throws DegenerateBranch when A = 0.
RatFunc okamoto_y(const RatFunc& sigma, const VTuple& v, std::string_view t = "t");
/// LHS - RHS of the Painleve VI equation. Throws PoleError if y is 0, 1 or t.
RatFunc pvi_residual(const RatFunc& y, const PviParams& p, std::string_view t = "t");
/// LHS - RHS of the Jimbo-Miwa-Okamoto sigma form.
RatFunc sigma_form_residual(const RatFunc& sigma, const VTuple& v, std::string_view t = "t");
/// (w1 wb1, w2 wb2, w3 wb3) = (-f + (t-1) f', f', f - t f' - R2).
std::array<RatFunc, 3> omega_products(const RatFunc& f, int R2, std::string_view t = "t");

/// tau0 written as content(w) * t^-R2 * P(X, t), where the X symbols stand for
/// the distinct (up to scale) t-coefficients of the numerator.
struct CompressedTau {
  RatFunc tau;                                             // over {X..., t}
  MultiPoly content;                                       // over the input symbols
  std::vector<std::pair<std::string, MultiPoly>> minors;   // X name -> polynomial in the input symbols
};
CompressedTau compress_minors(const RatFunc& tau0, std::string_view t = "t", const std::string& prefix = "D");

struct PainleveData {
  RatFunc f, sigma;
  Rational a, b;
  CCoeffs c;
  ACoeffs A;
  VTuple v;
  PviParams pvi;
  std::optional<RatFunc> y;  // empty on a degenerate branch
  std::string branch;
  std::string degenerate_reason;
};

/// Full pipeline for one branch. The y field is left empty (with a reason)
/// when the extraction is degenerate.
PainleveData solve_branch(const RatFunc& tau0, const ScalingParams& params, const Branch& branch,
                          std::string_view t = "t");

}  // namespace ptau
