#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ptau/errors.hpp"
#include "ptau/painleve.hpp"
#include "ptau/parse.hpp"

using namespace ptau;

namespace {

SymbolsPtr wt_syms() {
  static auto s = [] {
    auto names = weight_symbol_names();
    names.push_back("t");
    return make_symbols(names);
  }();
  return s;
}

SymbolsPtr dt_syms() {
  static auto s = make_symbols({"D1", "D2", "t"});
  return s;
}

ScalingParams ref_case() { return normalize_params({-4, -2, 0}, {-3, -2, -1}); }

// Symbolic example, computed once for the whole file.
struct RefData {
  CompressedTau ct;
  RefData() : ct(compress_minors(tau0(ref_case(), symbolic_weights(wt_syms())))) {}
};
const RefData& ref_data() {
  static RefData d;
  return d;
}

// Our D1, D2 are the reference minors scaled by 1/6 and 1/2; rewrite a result
// in terms of those.
RatFunc to_printed(const RatFunc& r) {
  auto s = dt_syms();
  auto x = r.rebase(s);
  x = x.substitute(0, parse_ratfunc("D1/6", s));
  x = x.substitute(1, parse_ratfunc("D2/2", s));
  return x;
}

RatFunc P(const std::string& e) { return parse_ratfunc(e, dt_syms()); }

std::map<std::string, Rational> random_weights(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::map<std::string, Rational> b;
  for (const auto& n : weight_symbol_names()) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (q == 0) q = 1;
    b[n] = q;
  }
  return b;
}

}  // namespace

TEST(Painleve, LogDerivativeOfMonomial) {
  auto s = make_symbols({"t"});
  for (int k : {-3, 0, 2, 5}) {
    auto tau = RatFunc(MultiPoly::variable(s, "t")).pow(k) * RatFunc(MultiPoly::constant(s, Rational(7, 3)));
    EXPECT_EQ(f_from_tau0(tau), parse_ratfunc(std::to_string(k) + "*(t-1)", s));
  }
  EXPECT_THROW(f_from_tau0(RatFunc(MultiPoly(s))), Error);
}

TEST(Painleve, CoefficientsRefCase) {
  auto c = c_coefficients(ref_case());
  CCoeffs expect{-1, 4, Rational(-13, 4), -3, Rational(3, 2), Rational(-9, 4)};
  EXPECT_EQ(c, expect);
  auto data = solve_branch(ref_data().ct.tau, ref_case(), Branch{});
  EXPECT_EQ(data.a, 1);
  EXPECT_EQ(data.b, 1);
}

TEST(Painleve, ACoefficientsThreeRoutes) {
  auto sp = ref_case();
  ACoeffs expect{9, 0, 24, 16};
  EXPECT_EQ(A_coefficients(c_coefficients(sp)), expect);
  auto v = v_values(sp);
  EXPECT_EQ(A_from_v(v), expect);
  EXPECT_EQ(A_from_pvi(pvi_params(v), v[2] + v[3] + 1), expect);
  // x^4 - 9x^3 + 24x^2 - 16x = x (x-1) (x-4)^2, roots are the v_i^2
  for (int r : {0, 1, 4}) EXPECT_EQ(quartic_at(expect, r), 0);
  for (const auto& vi : v) EXPECT_EQ(quartic_at(expect, vi * vi), 0);
  EXPECT_NE(quartic_at(expect, 2), 0);
}

TEST(Painleve, AConsistencyRandom) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 0);
  for (int i = 0; i < 50; ++i) {
    Triple mu{d(rng), d(rng), d(rng)}, nu{d(rng), d(rng), 0};
    nu[2] = mu[0] + mu[1] + mu[2] - nu[0] - nu[1];
    auto sp = normalize_params(mu, nu);
    auto A = A_coefficients(c_coefficients(sp));
    for (const auto& b : d4_branches()) {
      auto v = v_values(sp, b);
      EXPECT_EQ(A_from_v(v), A);
      EXPECT_EQ(A_from_pvi(pvi_params(v), v[2] + v[3] + 1), A);
    }
  }
}

TEST(Painleve, BranchParsing) {
  EXPECT_EQ(parse_branch("identity").id(), "1234/++++");
  EXPECT_EQ(parse_branch("flip13").id(), "1234/-+-+");
  EXPECT_EQ(parse_branch("swap23").id(), "1324/++++");
  EXPECT_EQ(parse_branch("2143/--++").id(), "2143/--++");
  EXPECT_THROW(parse_branch("1234/-+++"), InvalidParameters);
  EXPECT_THROW(parse_branch("1134/++++"), ParseError);
  EXPECT_THROW(parse_branch("bogus"), ParseError);
  auto all = d4_branches();
  EXPECT_EQ(all.size(), 192u);
  EXPECT_EQ(all.front().id(), "1234/++++");
  std::set<std::string> ids;
  for (const auto& b : all) ids.insert(b.id());
  EXPECT_EQ(ids.size(), 192u);
}

TEST(Painleve, PviParamsThreeBranches) {
  auto sp = ref_case();
  EXPECT_EQ(pvi_params(v_values(sp, parse_branch("identity"))),
            (PviParams{Rational(1, 2), -2, 2, Rational(-3, 2)}));
  EXPECT_EQ(pvi_params(v_values(sp, parse_branch("flip13"))),
            (PviParams{Rational(9, 2), -2, 2, Rational(-3, 2)}));
  EXPECT_EQ(pvi_params(v_values(sp, parse_branch("swap23"))), (PviParams{Rational(1, 2), 0, 8, Rational(1, 2)}));
}

TEST(Painleve, MinorCompression) {
  const auto& ct = ref_data().ct;
  auto s = wt_syms();
  ASSERT_EQ(ct.minors.size(), 2u);
  EXPECT_EQ(ct.minors[0].first, "D1");
  EXPECT_EQ(ct.minors[1].first, "D2");
  EXPECT_EQ(ct.minors[0].second, parse_poly("w3_3*(w1_2*w2_3 - w1_3*w2_2)/6", s));
  EXPECT_EQ(ct.minors[1].second, parse_poly("w2_3*(w1_3*w3_2 - w1_2*w3_3)/2", s));
  EXPECT_EQ(ct.content, parse_poly("w3_3*(w2_2*w3_3 - w2_3*w3_2)", s));
  EXPECT_EQ(to_printed(ct.tau), P("(D1 + 3*D2*t^2 - 2*D2*t^3)/(6*t^3)"));
}

TEST(Painleve, GoldenSigma) {
  auto d = solve_branch(ref_data().ct.tau, ref_case(), Branch{});
  EXPECT_EQ(to_printed(d.sigma), P("2*(D1 - 2*D1*t - 2*D2*t^3 + D2*t^4)/(D1 + 3*D2*t^2 - 2*D2*t^3)"));
}

TEST(Painleve, GoldenYIdentity) {
  auto d = solve_branch(ref_data().ct.tau, ref_case(), parse_branch("identity"));
  ASSERT_TRUE(d.y);
  auto y = to_printed(*d.y);
  EXPECT_EQ(y, P("(-D2^2*t^5 + 3*D2^2*t^4 + 2*D1*D2*t^3 + 2*D1*D2*t^2 + 3*D1^2*t - D1^2)"
                 "/(D1^2 + 4*D2*D1*t - 6*D1*D2*t^2 + 4*D1*D2*t^3 + D2^2*t^4)"));
  EXPECT_EQ(pvi_residual(*d.y, d.pvi), RatFunc(MultiPoly(d.y->symbols())));
  EXPECT_EQ(sigma_form_residual(d.sigma, d.v), RatFunc(MultiPoly(d.sigma.symbols())));
}

TEST(Painleve, GoldenYFlip13) {
  auto d = solve_branch(ref_data().ct.tau, ref_case(), parse_branch("flip13"));
  ASSERT_TRUE(d.y);
  auto printed = P(
      "1/3*(-D2^3*t^9 + 3*D2^3*t^8 - 6*D1*D2^2*t^7 + 42*D1*D2^2*t^6 - 57*D1*D2^2*t^5 + 27*D1^2*D2*t^5"
      " + 27*D1*D2^2*t^4 - 57*D1^2*D2*t^4 + 42*D1^2*D2*t^3 - 6*D1^2*D2*t^2 + 3*t*D1^3 - D1^3)"
      "/((-D1 + 2*D1*t + 2*D2*t^3 - D2*t^4)*(D1^2 - 6*D1*D2*t^2 + 4*D1*D2*t^3 + D2^2*t^4 + 4*D2*t*D1))");
  EXPECT_EQ(to_printed(*d.y), printed);
  EXPECT_TRUE(pvi_residual(*d.y, d.pvi).is_zero());
}

TEST(Painleve, GoldenYSwap23) {
  auto d = solve_branch(ref_data().ct.tau, ref_case(), parse_branch("swap23"));
  ASSERT_TRUE(d.y);
  auto printed = P(
      "D2*t*(-15*t^2*D1^2 + 7*t*D1^2 + 9*t^3*D1^2 - D1^2 + 6*D1*D2*t^2 - 26*D1*D2*t^3"
      " - 6*D1*D2*t^5 + 26*D1*D2*t^4 - 9*D2^2*t^4 - 7*D2^2*t^6 + 15*D2^2*t^5 + D2^2*t^7)"
      "/((D1 + D2*t^3 - 3*D2*t^2 + 3*D2*t)*(D1^2 - 6*D1*D2*t^2 + 4*D1*D2*t^3 + D2^2*t^4 + 4*D2*D1*t))");
  EXPECT_EQ(to_printed(*d.y), printed);
  EXPECT_TRUE(pvi_residual(*d.y, d.pvi).is_zero());
}

TEST(Painleve, NegativeControls) {
  auto d = solve_branch(ref_data().ct.tau, ref_case(), Branch{});
  ASSERT_TRUE(d.y);
  auto t = RatFunc(MultiPoly::variable(d.y->symbols(), "t"));
  EXPECT_FALSE(pvi_residual(*d.y + t * t, d.pvi).is_zero());
  EXPECT_FALSE(pvi_residual(*d.y, PviParams{1, -2, 2, Rational(-3, 2)}).is_zero());
  EXPECT_FALSE(sigma_form_residual(d.sigma + t, d.v).is_zero());
  auto one = RatFunc(MultiPoly::constant(d.y->symbols(), 1));
  EXPECT_THROW(pvi_residual(one, d.pvi), PoleError);
  EXPECT_THROW(pvi_residual(t, d.pvi), PoleError);
}

TEST(Painleve, OmegaProductsSumToMinusR2) {
  const auto& ct = ref_data().ct;
  auto sp = ref_case();
  auto f = f_from_tau0(ct.tau);
  auto w = omega_products(f, sp.R2);
  auto sum = w[0] + w[1] + w[2] + RatFunc(MultiPoly::constant(f.symbols(), sp.R2));
  EXPECT_TRUE(sum.is_zero());
}

TEST(Painleve, ShiftInvariance) {
  auto a = normalize_params({-4, -2, 0}, {-3, -2, -1});
  auto b = normalize_params({-3, -1, 1}, {-2, -1, 0});
  EXPECT_EQ(A_coefficients(c_coefficients(a)), A_coefficients(c_coefficients(b)));
  EXPECT_EQ(pvi_params(v_values(a)), pvi_params(v_values(b)));
}

TEST(Painleve, NumericWeightsAllBranches) {
  std::mt19937 rng(5);
  auto s = wt_syms();
  for (auto [mu, nu] : std::vector<std::pair<Triple, Triple>>{{{-4, -2, 0}, {-3, -2, -1}},
                                                              {{-2, -1, 0}, {-2, 0, -1}},
                                                              {{-3, 0, -1}, {-1, -2, -1}}}) {
    auto sp = normalize_params(mu, nu);
    ASSERT_TRUE(sp.in_support);
    auto tau = tau0(sp, specialize_weights(symbolic_weights(s), random_weights(rng)));
    if (tau.is_zero()) continue;
    for (const auto& br : distinct_branches(v_values(sp))) {
      auto d = solve_branch(tau, sp, br);
      EXPECT_TRUE(sigma_form_residual(d.sigma, d.v).is_zero()) << br.id();
      if (d.y) EXPECT_TRUE(pvi_residual(*d.y, d.pvi).is_zero()) << br.id();
    }
  }
}

TEST(Painleve, GoldenYAtRandomMinors) {
  auto d = solve_branch(ref_data().ct.tau, ref_case(), Branch{});
  ASSERT_TRUE(d.y);
  auto ts = make_symbols({"t"});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  int done = 0;
  while (done < 6) {
    Rational d1(num(rng), den(rng)), d2(num(rng), den(rng));
    d1.canonicalize();
    d2.canonicalize();
    if (d1 == 0 || d2 == 0) continue;
    auto y = d.y->specialize({{"D1", d1}, {"D2", d2}}).rebase(ts);
    auto sg = d.sigma.specialize({{"D1", d1}, {"D2", d2}}).rebase(ts);
    EXPECT_TRUE(pvi_residual(y, d.pvi).is_zero());
    EXPECT_TRUE(sigma_form_residual(sg, d.v).is_zero());
    ++done;
  }
}

TEST(Painleve, SigmaFormConstantSlope) {
  // sigma = k t + c with k = -v1^2 and k (2c + k) + v1v2v3v4 = 0
  auto s = make_symbols({"t"});
  VTuple v{2, 1, 3, 1};
  EXPECT_TRUE(sigma_form_residual(parse_ratfunc("-4*t + 11/4", s), v).is_zero());
  EXPECT_FALSE(sigma_form_residual(parse_ratfunc("-4*t + 3", s), v).is_zero());
}
