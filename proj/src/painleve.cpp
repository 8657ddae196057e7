#include "ptau/painleve.hpp"

#include <algorithm>
#include <set>

#include "ptau/errors.hpp"

namespace ptau {

std::string Branch::id() const {
  std::string s;
  for (int i = 0; i < 4; ++i) s += static_cast<char>('1' + perm[i]);
  s += '/';
  for (int i = 0; i < 4; ++i) s += sign[i] > 0 ? '+' : '-';
  return s;
}

Branch parse_branch(const std::string& id) {
  if (id == "identity") return Branch{};
  if (id == "flip13") return Branch{{0, 1, 2, 3}, {-1, 1, -1, 1}};
  if (id == "swap23") return Branch{{0, 2, 1, 3}, {1, 1, 1, 1}};
  if (id.size() != 9 || id[4] != '/') throw ParseError("branch id must look like 1234/++++, got '" + id + "'");
  Branch b;
  std::set<int> seen;
  int negatives = 0;
  for (int i = 0; i < 4; ++i) {
    int p = id[i] - '1';
    if (p < 0 || p > 3 || !seen.insert(p).second) throw ParseError("bad permutation in branch id '" + id + "'");
    b.perm[i] = p;
    char c = id[5 + i];
    if (c != '+' && c != '-') throw ParseError("bad sign in branch id '" + id + "'");
    b.sign[i] = c == '+' ? 1 : -1;
    negatives += c == '-';
  }
  if (negatives % 2) throw InvalidParameters("branch '" + id + "' flips an odd number of signs");
  return b;
}

std::vector<Branch> d4_branches() {
  std::vector<Branch> out;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    for (int mask = 0; mask < 16; ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      Branch b;
      b.perm = perm;
      for (int i = 0; i < 4; ++i) b.sign[i] = (mask >> i & 1) ? -1 : 1;
      out.push_back(b);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

VTuple apply_branch(const VTuple& v, const Branch& b) {
  VTuple out;
  for (int i = 0; i < 4; ++i) out[i] = b.sign[i] * v[b.perm[i]];
  return out;
}

std::vector<Branch> distinct_branches(const VTuple& v) {
  std::vector<Branch> out;
  std::set<std::array<Rational, 4>> seen;
  for (const auto& b : d4_branches()) {
    VTuple w = apply_branch(v, b);
    std::array<Rational, 4> key{std::min(w[0], w[1]), std::max(w[0], w[1]), std::min(w[2], w[3]),
                                std::max(w[2], w[3])};
    if (seen.insert(key).second) out.push_back(b);
  }
  return out;
}

CCoeffs c_coefficients(const ScalingParams& sp) {
  const Rational n1 = sp.nu[0], n2 = sp.nu[1], n3 = sp.nu[2], R2 = sp.R2;
  const Rational K = Rational(sp.mu[0] * sp.mu[1] * sp.mu[2]) - n1 * n2 * n3 + n3 * R2;
  const Rational q(-1, 4);
  CCoeffs c;
  c[0] = q * (n1 - n3) * (n1 - n3);
  c[1] = q * (-4 * R2 + 2 * (n2 - n1) * (n1 - n3));
  c[2] = q * (4 * R2 + (n1 - n2) * (n1 - n2));
  c[3] = q * (2 * (n3 - n1)) * K;
  c[4] = q * (2 * (n1 - n2)) * K;
  c[5] = q * K * K;
  return c;
}

ACoeffs A_coefficients(const CCoeffs& c) {
  const Rational &c5 = c[0], &c6 = c[1], &c7 = c[2], &c8 = c[3], &c9 = c[4], &c10 = c[5];
  ACoeffs A;
  A[0] = -4 * (c7 + c5 + c6 / 2);
  A[1] = -4 * (c8 - c5 * c5 - c5 * c6);
  A[2] = -4 * (c9 - c5 * c5 - c6 * c6 / 4 - c5 * c6 - 2 * c5 * c7);
  A[3] = -4 * (c10 + Rational(3, 2) * c5 * c5 * c6 + c5 * c6 * c6 / 2 + c5 * c5 * c5 + c5 * c5 * c7 - c5 * c8 -
               c6 * c8 / 2 - c5 * c9);
  return A;
}

ACoeffs A_from_v(const VTuple& v) {
  std::array<Rational, 4> q;
  for (int i = 0; i < 4; ++i) q[i] = v[i] * v[i];
  Rational e2 = 0, e3 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      e2 += q[i] * q[j];
      for (int k = j + 1; k < 4; ++k) e3 += q[i] * q[j] * q[k];
    }
  Rational prod = v[0] * v[1] * v[2] * v[3];
  return {q[0] + q[1] + q[2] + q[3], 4 * prod, e2 - 2 * prod, e3};
}

ACoeffs A_from_pvi(const PviParams& p, const Rational& s) {
  const Rational &al = p.alpha, &be = p.beta, &ga = p.gamma, &de = p.delta;
  ACoeffs A;
  A[0] = -be + ga + al - de - s + 1;
  A[1] = (be + ga) * (al + de + s - 1);
  Rational x = -al - de - s + be + ga + 1;
  A[2] = (be - ga) * (-al + de + s - 1) + x * x / 4;
  Rational y = al + de + s - 1;
  A[3] = -(be - ga) * y * y / 4 + (be + ga) * (be + ga) * (al - de - s + 1) / 4;
  return A;
}

VTuple v_values(const ScalingParams& sp, const Branch& branch) {
  const Rational n1 = sp.nu[0], n3 = sp.nu[2];
  VTuple v;
  for (int i = 0; i < 3; ++i) v[i] = (n1 + n3) / 2 - sp.mu[i];
  v[3] = (n1 - n3) / 2;
  return apply_branch(v, branch);
}

PviParams pvi_params(const VTuple& v) {
  auto sq = [](const Rational& x) { return Rational(x * x); };
  return {sq(v[2] - v[3]) / 2, -sq(v[0] + v[1]) / 2, sq(v[0] - v[1]) / 2, (1 - sq(v[2] + v[3] + 1)) / 2};
}

Rational quartic_at(const ACoeffs& A, const Rational& x) {
  return x * x * x * x - A[0] * x * x * x + (A[2] + A[1] / 2) * x * x - A[3] * x + A[1] * A[1] / 16;
}

namespace {

RatFunc rconst(const SymbolsPtr& s, const Rational& c) { return RatFunc::constant(s, c); }

}  // namespace

RatFunc f_from_tau0(const RatFunc& tau0, std::string_view t) {
  if (tau0.is_zero()) throw Error("f is undefined for a vanishing tau function");
  const auto& s = tau0.symbols();
  auto tv = RatFunc::variable(s, t);
  // Logarithmic derivative of N/D without forming the quotient derivative.
  const auto& N = tau0.numerator();
  const auto& D = tau0.denominator();
  auto var = s->require(t);
  RatFunc dlog = RatFunc(N.derivative(var), N) - RatFunc(D.derivative(var), D);
  return tv * (tv - rconst(s, 1)) * dlog;
}

RatFunc sigma_from_f(const RatFunc& f, const CCoeffs& c, std::string_view t) {
  const auto& s = f.symbols();
  Rational a = -c[0], b = c[0] + c[1] / 2;
  return f - rconst(s, a) * RatFunc::variable(s, t) - rconst(s, b);
}

RatFunc okamoto_y(const RatFunc& sigma, const VTuple& v, std::string_view t) {
  const auto& s = sigma.symbols();
  auto tv = RatFunc::variable(s, t);
  RatFunc d1 = sigma.derivative(t), d2 = d1.derivative(t);
  const Rational e1 = v[0] + v[1] + v[2] + v[3];
  const Rational e2 = v[0] * v[1] + v[0] * v[2] + v[0] * v[3] + v[1] * v[2] + v[1] * v[3] + v[2] * v[3];
  const Rational e3 = v[0] * v[1] * v[2] + v[0] * v[1] * v[3] + v[0] * v[2] * v[3] + v[1] * v[2] * v[3];
  RatFunc A = (d1 + rconst(s, v[2] * v[2])) * (d1 + rconst(s, v[3] * v[3]));
  if (A.is_zero()) throw DegenerateBranch("Okamoto extraction denominator (sigma' + v3^2)(sigma' + v4^2) vanishes");
  RatFunc B = tv * (tv - rconst(s, 1)) * d2 + rconst(s, e1) * d1 - rconst(s, e3);
  RatFunc C = rconst(s, 2) * (tv * d1 - sigma) - rconst(s, e2);
  return (rconst(s, v[2] + v[3]) * B + (d1 - rconst(s, v[2] * v[3])) * C) / (rconst(s, 2) * A);
}

RatFunc pvi_residual(const RatFunc& y, const PviParams& p, std::string_view t) {
  const auto& s = y.symbols();
  const auto var = s->require(t);
  auto tv = RatFunc::variable(s, t);
  if (y.is_zero() || y == rconst(s, 1) || y == tv) throw PoleError("y coincides with a fixed singular point (0, 1 or t)");
  // y = N/D. Multiply the equation by 2 t^2 (t-1)^2 N (N-D) (N-tD) D^3.
  const MultiPoly& N = y.numerator();
  const MultiPoly& D = y.denominator();
  auto k = [&](const Rational& q) { return MultiPoly::constant(s, q); };
  MultiPoly T = MultiPoly::variable(s, var), T1 = T - k(1), TT = T * T1;
  MultiPoly N1 = N.derivative(var), D1 = D.derivative(var);
  MultiPoly Y1 = N1 * D - N * D1;                                   // y' = Y1 / D^2
  MultiPoly Y2 = (N1.derivative(var) * D - N * D1.derivative(var)) * D - k(2) * D1 * Y1;  // y'' = Y2 / D^3
  MultiPoly a = N, b = N - D, c = N - T * D;
  MultiPoly ab = a * b, bc = b * c, ac = a * c, D2 = D * D;
  MultiPoly E = k(2) * TT * TT * ab * c * Y2 - TT * TT * (bc + ac + ab) * Y1 * Y1 +
                k(2) * TT * ab * D * ((k(2) * T - k(1)) * c + TT * D) * Y1;
  MultiPoly brace = k(p.alpha) * ab * ab * c * c + k(p.beta) * T * D2 * bc * bc + k(p.gamma) * T1 * D2 * ac * ac +
                    k(p.delta) * TT * D2 * ab * ab;
  E -= k(2) * brace;
  return RatFunc(E.is_zero() ? E : E.monic());
}

RatFunc sigma_form_residual(const RatFunc& sigma, const VTuple& v, std::string_view t) {
  const auto& s = sigma.symbols();
  auto tv = RatFunc::variable(s, t);
  RatFunc d1 = sigma.derivative(t), d2 = d1.derivative(t);
  RatFunc a = tv * (tv - rconst(s, 1)) * d2;
  RatFunc b = d1 * (rconst(s, 2) * sigma - (rconst(s, 2) * tv - rconst(s, 1)) * d1) +
              rconst(s, v[0] * v[1] * v[2] * v[3]);
  RatFunc rhs = rconst(s, 1);
  for (const auto& vk : v) rhs *= d1 + rconst(s, vk * vk);
  return d1 * a * a + b * b - rhs;
}

std::array<RatFunc, 3> omega_products(const RatFunc& f, int R2, std::string_view t) {
  const auto& s = f.symbols();
  auto tv = RatFunc::variable(s, t);
  RatFunc d = f.derivative(t);
  return {-f + (tv - rconst(s, 1)) * d, d, f - tv * d - rconst(s, R2)};
}

CompressedTau compress_minors(const RatFunc& tau0, std::string_view t, const std::string& prefix) {
  const auto& syms = tau0.symbols();
  const auto var = syms->require(t);
  const auto& den = tau0.denominator();
  if (!den.is_monomial()) throw Error("compress_minors expects tau0 = polynomial / monomial in t");
  for (std::size_t i = 0; i < syms->size(); ++i)
    if (i != var && den.depends_on(i)) throw Error("compress_minors expects a denominator that is a power of t");
  const auto& num = tau0.numerator();
  const std::uint32_t tpow = den.degree(var);
  auto coeffs = num.coefficients_in(var);
  MultiPoly g(syms);
  for (const auto& c : coeffs)
    if (!c.is_zero()) g = gcd(g, c);
  // Distinct coefficients up to a rational factor become symbols.
  std::vector<MultiPoly> reps;
  std::vector<std::pair<int, Rational>> which(coeffs.size(), {-1, 0});
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    MultiPoly q = divide_or_throw(coeffs[k], g);
    bool found = false;
    for (std::size_t r = 0; r < reps.size() && !found; ++r) {
      Rational ratio = q.leading().coeff / reps[r].leading().coeff;
      if (q == reps[r] * ratio) {
        which[k] = {static_cast<int>(r), ratio};
        found = true;
      }
    }
    if (!found) {
      which[k] = {static_cast<int>(reps.size()), 1};
      reps.push_back(q);
    }
  }
  CompressedTau out;
  std::vector<std::string> names;
  if (reps.size() == 1 && reps[0].is_constant()) {
    // tau0 is content * c * t^k: no symbols needed.
  } else {
    for (std::size_t r = 0; r < reps.size(); ++r) names.push_back(prefix + std::to_string(r + 1));
  }
  names.emplace_back(t);
  auto xs = make_symbols(names);
  auto tx = MultiPoly::variable(xs, t);
  MultiPoly p(xs);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (which[k].first < 0) continue;
    MultiPoly x = names.size() == 1 ? MultiPoly::constant(xs, reps[0].leading().coeff)
                                    : MultiPoly::variable(xs, which[k].first);
    p += x * which[k].second * tx.pow(static_cast<unsigned>(k));
  }
  out.tau = RatFunc(p, tx.pow(tpow));
  out.content = g * (den.leading().coeff == 0 ? Rational(1) : Rational(1 / den.leading().coeff));
  if (names.size() > 1)
    for (std::size_t r = 0; r < reps.size(); ++r) out.minors.emplace_back(names[r], reps[r]);
  return out;
}

PainleveData solve_branch(const RatFunc& tau0, const ScalingParams& params, const Branch& branch,
                          std::string_view t) {
  PainleveData d;
  d.branch = branch.id();
  d.c = c_coefficients(params);
  d.a = -d.c[0];
  d.b = d.c[0] + d.c[1] / 2;
  d.A = A_coefficients(d.c);
  d.v = v_values(params, branch);
  d.pvi = pvi_params(d.v);
  d.f = f_from_tau0(tau0, t);
  d.sigma = sigma_from_f(d.f, d.c, t);
  try {
    RatFunc y = okamoto_y(d.sigma, d.v, t);
    auto one = RatFunc::constant(y.symbols(), 1);
    if (y.is_zero() || y == one || y == RatFunc::variable(y.symbols(), t)) {
      d.degenerate_reason = "y coincides with a fixed singular point";
    } else {
      d.y = y;
    }
  } catch (const DegenerateBranch& e) {
    d.degenerate_reason = e.what();
  }
  return d;
}

}  // namespace ptau
