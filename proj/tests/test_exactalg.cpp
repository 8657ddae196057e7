#include <gtest/gtest.h>

#include <random>

#include "ptau/errors.hpp"
#include "ptau/matrix.hpp"
#include "ptau/parse.hpp"
#include "ptau/serialize.hpp"

using namespace ptau;

namespace {

SymbolsPtr xyz() {
  static auto s = make_symbols({"x", "y", "z", "t"});
  return s;
}

MultiPoly P(const char* s) { return parse_poly(s, xyz()); }
RatFunc R(const char* s) { return parse_ratfunc(s, xyz()); }

MultiPoly random_poly(std::mt19937& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> c(-5, 5), d(0, maxdeg);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) ts.push_back(Term{{(unsigned)d(rng), (unsigned)d(rng), 0u, (unsigned)d(rng)}, c(rng)});
  return MultiPoly::from_terms(xyz(), ts);
}

}  // namespace

TEST(MultiPoly, DifferenceOfSquares) { EXPECT_EQ(P("(x+1)*(x-1)"), P("x^2 - 1")); }

TEST(MultiPoly, AdditiveIdentity) {
  auto p = P("3*x*y - 2/3*t^4 + 1");
  EXPECT_EQ(p + MultiPoly(xyz()), p);
}

TEST(MultiPoly, SymbolMismatch) {
  auto other = make_symbols({"x"});
  EXPECT_THROW(MultiPoly::variable(xyz(), "x") + MultiPoly::variable(other, "x"), SymbolMismatch);
}

TEST(MultiPoly, SubstituteAtOne) {
  auto syms = make_symbols({"D1", "D2", "t"});
  auto p = parse_poly("D1 + 3*D2*t^2 - 2*D2*t^3", syms);
  EXPECT_EQ(p.substitute({{"t", 1}}), parse_poly("D1 + D2", syms));
}

TEST(MultiPoly, CanonicalText) {
  EXPECT_EQ(P("t^2*y - 3/2*x + 4").to_string(), "y*t^2 - 3/2*x + 4");
  EXPECT_EQ(P("0").to_string(), "0");
}

TEST(MultiPoly, ExactDivision) {
  auto a = P("x^2*y - y^3"), b = P("x - y");
  EXPECT_EQ(divide_or_throw(a, b), P("x*y + y^2"));
  EXPECT_FALSE(divide_exact(P("x^2 + 1"), P("x + 1")).has_value());
}

TEST(MultiPoly, Gcd) {
  EXPECT_EQ(gcd(P("(x+y)*(x-t)^2*z"), P("(x+y)*(x-t)*(z+1)")), P("(x+y)*(x-t)").monic());
  EXPECT_EQ(gcd(P("x^2 - 1"), P("x^2 + 1")), P("1"));
  EXPECT_EQ(gcd(P("6*x^2*y"), P("4*x*y^3")), P("x*y"));
}

TEST(MultiPoly, GcdRandomProducts) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_poly(rng, 3, 2), a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    auto h = gcd(g * a, g * b);
    // g divides the gcd, and the gcd divides both inputs.
    EXPECT_TRUE(divide_exact(h, g).has_value());
    EXPECT_TRUE(divide_exact(g * a, h).has_value());
    EXPECT_TRUE(divide_exact(g * b, h).has_value());
  }
}

TEST(MultiPoly, GcdCofactorsCoprime) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_poly(rng, 4, 3), a = random_poly(rng, 4, 3), b = random_poly(rng, 4, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    g *= Rational(2, 7);
    auto h = gcd(g * a, g * b);
    auto ca = divide_exact(g * a, h), cb = divide_exact(g * b, h);
    ASSERT_TRUE(ca && cb);
    EXPECT_TRUE(gcd(*ca, *cb).is_constant());
    EXPECT_TRUE(divide_exact(h, g).has_value());
  }
}

TEST(MultiPoly, DecimalLiteralsNotOctal) {
  EXPECT_EQ(parse_rational("010"), 10);
  EXPECT_EQ(parse_rational("010/03"), Rational(10, 3));
  EXPECT_EQ(P("010*x"), P("10*x"));
}

TEST(MultiPoly, ProductRule) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_poly(rng, 4, 3), q = random_poly(rng, 4, 3);
    std::size_t t = 3;
    EXPECT_EQ((p * q).derivative(t), p.derivative(t) * q + p * q.derivative(t));
  }
}

TEST(RatFunc, ReducedForm) {
  auto r = R("(x^2 - 1)/(2*x + 2)");
  EXPECT_EQ(r.numerator(), P("1/2*x - 1/2"));
  EXPECT_EQ(r.denominator(), P("1"));
  EXPECT_EQ(R("(x*y + y)/(x*t + t)"), R("y/t"));
  EXPECT_EQ(R("x/(2*y)").denominator(), P("y"));
}

TEST(RatFunc, Derivatives) {
  EXPECT_EQ(R("t^2").derivative("t"), R("2*t"));
  EXPECT_EQ(R("1/t").derivative("t"), R("-1/t^2"));
}

TEST(RatFunc, SigmaDerivativeMatchesFiniteDifference) {
  auto syms = make_symbols({"D1", "D2", "t"});
  auto sigma = parse_ratfunc("2*(D1 - 2*D1*t - 2*D2*t^3 + D2*t^4)/(D1 + 3*D2*t^2 - 2*D2*t^3)", syms);
  auto ds = sigma.derivative("t").evaluate({{"D1", 1}, {"D2", 1}, {"t", Rational(1, 2)}});
  auto s = sigma.specialize({{"D1", 1}, {"D2", 1}});
  auto f = [&](double t) {
    double n = s.numerator().evaluate({{"t", Rational(t)}}).get_d();
    double d = s.denominator().evaluate({{"t", Rational(t)}}).get_d();
    return n / d;
  };
  const double h = 1e-6;
  double fd = (f(0.5 + h) - f(0.5 - h)) / (2 * h);
  EXPECT_NEAR(ds.get_d(), fd, 1e-8 * std::max(1.0, std::abs(fd)));
}

TEST(RatFunc, SpecializeSigmaByHand) {
  auto syms = make_symbols({"D1", "D2", "t"});
  auto sigma = parse_ratfunc("2*(D1 - 2*D1*t - 2*D2*t^3 + D2*t^4)/(D1 + 3*D2*t^2 - 2*D2*t^3)", syms);
  // numerator 1 - 1 - 1/4 + 1/16 = -3/16; denominator 1 + 3/4 - 1/4 = 3/2
  EXPECT_EQ(sigma.evaluate({{"D1", 1}, {"D2", 1}, {"t", Rational(1, 2)}}), Rational(-1, 4));
}

TEST(RatFunc, Specialize) {
  auto syms = make_symbols({"D1", "D2", "t"});
  auto r = parse_ratfunc("(D1 + D2*t)/D1", syms);
  EXPECT_EQ(r.specialize({{"D1", 1}, {"D2", 0}}), RatFunc::constant(syms, 1));
  auto bad = parse_ratfunc("1/(D1 + D2)", syms);
  EXPECT_THROW(bad.specialize({{"D1", 1}, {"D2", -1}}), DegenerateSpecialization);
}

TEST(RatFunc, SpecializeCommutesWithDerivative) {
  auto syms = make_symbols({"D1", "D2", "t"});
  auto r = parse_ratfunc("(D1*t^3 - D2)/(D1 + D2*t^2 + t)", syms);
  std::map<std::string, Rational> b{{"D1", Rational(3, 7)}, {"D2", -2}};
  EXPECT_EQ(r.derivative("t").specialize(b), r.specialize(b).derivative("t"));
}

TEST(RatFunc, JsonRoundTrip) {
  auto r = R("(x^2 - 3/4*y)/(t + x)");
  EXPECT_EQ(ratfunc_from_json(ratfunc_to_json(r)), r);
  EXPECT_EQ(parse_ratfunc(r.to_string(), xyz()), r);
}

TEST(Determinant, Basics) {
  auto one = MultiPoly::constant(xyz(), 1);
  PolyMatrix id = zero_matrix(xyz(), 3, 3);
  for (int i = 0; i < 3; ++i) id[i][i] = one;
  EXPECT_EQ(det_fraction_free(id, xyz()), one);
  PolyMatrix z = id;
  z[1] = std::vector<MultiPoly>(3, MultiPoly(xyz()));
  EXPECT_TRUE(det_fraction_free(z, xyz()).is_zero());
  EXPECT_EQ(det_fraction_free({}, xyz()), one);
  EXPECT_THROW(det_fraction_free({{one, one}}, xyz()), ShapeError);
}

TEST(Determinant, AgreesWithCofactorOnRandomMatrices) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      PolyMatrix m = zero_matrix(xyz(), n, n);
      for (auto& row : m)
        for (auto& e : row) e = MultiPoly::constant(xyz(), c(rng));
      EXPECT_EQ(det_fraction_free(m, xyz()), det_cofactor(m, xyz()));
    }
  }
  for (int trial = 0; trial < 5; ++trial) {
    PolyMatrix m = zero_matrix(xyz(), 4, 4);
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng, 2, 1);
    EXPECT_EQ(det_fraction_free(m, xyz()), det_cofactor(m, xyz()));
  }
}
