#include <algorithm>
#include <vector>

#include "ptau/errors.hpp"
#include "ptau/multipoly.hpp"

// Multivariate gcd over Q: recursive content / primitive-part split with a
// primitive pseudo-remainder sequence in one chosen variable.

namespace ptau {

namespace {

using UPoly = std::vector<Rational>;  // dense, constant term first

void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly urem(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= f * b[k];
    a.pop_back();
    utrim(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = urem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

UPoly to_upoly(const MultiPoly& p, std::size_t var) {
  UPoly u(p.degree(var) + 1);
  for (const auto& t : p.terms()) u[t.exp[var]] += t.coeff;
  utrim(u);
  return u;
}

MultiPoly from_upoly(const UPoly& u, const SymbolsPtr& syms, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0) continue;
    Exponents e(syms->size(), 0);
    e[var] = static_cast<std::uint32_t>(k);
    terms.push_back(Term{std::move(e), u[k]});
  }
  return MultiPoly::from_terms(syms, std::move(terms));
}

std::vector<std::size_t> used_vars(const MultiPoly& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.symbols()->size(); ++i)
    if (p.depends_on(i)) out.push_back(i);
  return out;
}

MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.symbols(), 1); }

MultiPoly prem(const MultiPoly& A, const MultiPoly& B, std::size_t var) {
  auto a = A.coefficients_in(var);
  auto b = B.coefficients_in(var);
  const std::size_t db = b.size() - 1;
  const MultiPoly& lcb = b.back();
  auto trim = [&a] {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  };
  trim();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t da = a.size() - 1;
    MultiPoly lca = a.back();
    for (auto& c : a) c = c * lcb;
    for (std::size_t k = 0; k <= db; ++k) a[k + da - db] -= lca * b[k];
    trim();
  }
  if (a.empty()) return MultiPoly(A.symbols());
  return MultiPoly::from_coefficients(a, var);
}

MultiPoly primitive_part(const MultiPoly& p, std::size_t var) {
  MultiPoly c = content_in(p, var);
  return divide_or_throw(p, c);
}

// A specialization of all variables except `var` whose univariate gcd has
// degree zero proves that gcd(A, B) has degree zero in `var`, provided
// neither leading coefficient vanishes there.
bool coprime_by_evaluation(const MultiPoly& A, const MultiPoly& B, std::size_t var) {
  const auto& syms = A.symbols();
  static const long kPoints[] = {3, 7, 13, 19, 29, 37, 43, 53, 61, 71, 79, 89, 97, 103, 113, 127, 131, 139};
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::map<std::string, Rational> vals;
    for (std::size_t i = 0; i < syms->size(); ++i) {
      if (i == var) continue;
      long v = kPoints[(i + 5 * attempt) % (sizeof(kPoints) / sizeof(kPoints[0]))];
      vals[syms->name(i)] = Rational(v + attempt, 1 + attempt);
    }
    MultiPoly a = A.substitute(vals), b = B.substitute(vals);
    if (a.degree(var) != A.degree(var) || b.degree(var) != B.degree(var)) continue;
    UPoly g = ugcd(to_upoly(a, var), to_upoly(b, var));
    return g.size() == 1;
  }
  return false;
}

MultiPoly primitive_gcd(MultiPoly A, MultiPoly B, std::size_t var) {
  if (coprime_by_evaluation(A, B, var)) return one_like(A);
  if (A.degree(var) < B.degree(var)) std::swap(A, B);
  while (true) {
    MultiPoly R = prem(A, B, var);
    if (R.is_zero()) return B;
    if (!R.depends_on(var)) return one_like(A);
    A = std::move(B);
    B = primitive_part(R, var);
  }
}

MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& other) {
  Exponents e = mono.leading().exp;
  for (const auto& t : other.terms())
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], t.exp[i]);
  return MultiPoly::monomial(mono.symbols(), std::move(e), 1);
}


// Heuristic gcd over Z (Char, Geddes, Gonnet): evaluate one variable at a
// large integer, recurse, and rebuild the candidate from its balanced x-adic
// digits. A candidate is accepted only after exact trial division.
struct HeuResult {
  MultiPoly h, cff, cfg;
};

mpz_class int_content(const MultiPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class max_norm(const MultiPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    mpz_class a = abs(t.coeff.get_num());
    if (a > m) m = a;
  }
  return m;
}

// Leading coefficient in lexicographic order over `vars` (the order of evaluation).
mpz_class lex_lc(const MultiPoly& p, const std::vector<std::size_t>& vars, std::size_t level) {
  const Term* best = nullptr;
  for (const auto& t : p.terms()) {
    if (!best) {
      best = &t;
      continue;
    }
    for (std::size_t i = level; i < vars.size(); ++i) {
      auto a = t.exp[vars[i]], b = best->exp[vars[i]];
      if (a != b) {
        if (a > b) best = &t;
        break;
      }
    }
  }
  return best ? best->coeff.get_num() : mpz_class(0);
}

MultiPoly eval_at(const MultiPoly& p, std::size_t var, const mpz_class& x) {
  std::vector<mpz_class> pw{1};
  std::vector<Term> terms;
  terms.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    while (pw.size() <= t.exp[var]) pw.push_back(pw.back() * x);
    Exponents e = t.exp;
    e[var] = 0;
    terms.push_back(Term{std::move(e), Rational(t.coeff.get_num() * pw[t.exp[var]])});
  }
  return MultiPoly::from_terms(p.symbols(), std::move(terms));
}

MultiPoly interpolate(MultiPoly h, std::size_t var, const mpz_class& x, const std::vector<std::size_t>& vars,
                      std::size_t level) {
  const mpz_class half = x / 2;
  std::vector<Term> out;
  std::uint32_t k = 0;
  while (!h.is_zero()) {
    std::vector<Term> digit, rest;
    for (const auto& t : h.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      mpz_class q = (t.coeff.get_num() - r) / x;
      if (r != 0) {
        Exponents e = t.exp;
        e[var] = k;
        digit.push_back(Term{std::move(e), Rational(r)});
      }
      if (q != 0) rest.push_back(Term{t.exp, Rational(q)});
    }
    for (auto& d : digit) out.push_back(std::move(d));
    h = MultiPoly::from_terms(h.symbols(), std::move(rest));
    ++k;
    if (k > 100000) break;
  }
  MultiPoly r = MultiPoly::from_terms(h.symbols(), std::move(out));
  if (lex_lc(r, vars, level) < 0) r = -r;
  return r;
}

MultiPoly scale_int(const MultiPoly& p, const mpz_class& c) { return p * Rational(c); }
MultiPoly div_int(const MultiPoly& p, const mpz_class& c) { return p * Rational(mpz_class(1), c); }

bool divides(const MultiPoly& f, const MultiPoly& h, MultiPoly& q) {
  auto r = divide_exact(f, h);
  if (!r) return false;
  q = std::move(*r);
  return true;
}

std::optional<HeuResult> heu_gcd(MultiPoly f, MultiPoly g, const std::vector<std::size_t>& vars, std::size_t level,
                                 int depth_budget) {
  const auto& syms = f.symbols();
  auto one = MultiPoly::constant(syms, 1);
  if (f.is_zero() && g.is_zero()) return HeuResult{MultiPoly(syms), MultiPoly(syms), MultiPoly(syms)};
  if (f.is_zero()) {
    if (lex_lc(g, vars, level) < 0) return HeuResult{-g, MultiPoly(syms), -one};
    return HeuResult{g, MultiPoly(syms), one};
  }
  if (g.is_zero()) {
    if (lex_lc(f, vars, level) < 0) return HeuResult{-f, -one, MultiPoly(syms)};
    return HeuResult{f, one, MultiPoly(syms)};
  }
  if (level == vars.size() || f.is_constant() || g.is_constant()) {
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), int_content(f).get_mpz_t(), int_content(g).get_mpz_t());
    auto h = MultiPoly::constant(syms, Rational(c));
    return HeuResult{h, div_int(f, c), div_int(g, c)};
  }
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), int_content(f).get_mpz_t(), int_content(g).get_mpz_t());
  if (c != 1) {
    f = div_int(f, c);
    g = div_int(g, c);
  }
  const std::size_t var = vars[level];
  mpz_class fn = max_norm(f), gn = max_norm(g);
  mpz_class B = 2 * std::min(fn, gn) + 29;
  mpz_class sq = sqrt(B);
  mpz_class x = std::min(B, mpz_class(99 * sq));
  mpz_class lf = abs(lex_lc(f, vars, level)), lg = abs(lex_lc(g, vars, level));
  mpz_class alt = 2 * std::min(mpz_class(fn / lf), mpz_class(gn / lg)) + 4;
  if (alt > x) x = alt;
  for (int attempt = 0; attempt < 6 && depth_budget > 0; ++attempt) {
    MultiPoly ff = eval_at(f, var, x), gg = eval_at(g, var, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto sub = heu_gcd(ff, gg, vars, level + 1, depth_budget - 1);
      if (sub) {
        MultiPoly h = interpolate(sub->h, var, x, vars, level);
        mpz_class hc = int_content(h);
        if (hc != 0 && hc != 1) h = div_int(h, hc);
        MultiPoly cff, cfg;
        if (!h.is_zero() && divides(f, h, cff) && divides(g, h, cfg))
          return HeuResult{scale_int(h, c), cff, cfg};
        MultiPoly cf = interpolate(sub->cff, var, x, vars, level);
        if (!cf.is_zero() && divides(f, cf, h) && divides(g, h, cfg))
          return HeuResult{scale_int(h, c), cf, cfg};
        MultiPoly cg = interpolate(sub->cfg, var, x, vars, level);
        if (!cg.is_zero() && divides(g, cg, h) && divides(f, h, cff))
          return HeuResult{scale_int(h, c), cff, cg};
      }
    }
    // x <- 73794 x sqrt(sqrt(x)) / 27011
    mpz_class r4 = sqrt(mpz_class(sqrt(x)));
    x = 73794 * x * r4 / 27011;
  }
  return std::nullopt;
}

// Scale to integer coefficients with unit content.
MultiPoly to_primitive_integer(const MultiPoly& p) {
  mpz_class l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  MultiPoly q = p * Rational(l);
  mpz_class c = int_content(q);
  return c == 1 ? q : q * Rational(mpz_class(1), c);
}

}  // namespace

MultiPoly content_in(const MultiPoly& a, std::size_t var) {
  auto coeffs = a.coefficients_in(var);
  std::erase_if(coeffs, [](const MultiPoly& c) { return c.is_zero(); });
  std::sort(coeffs.begin(), coeffs.end(),
            [](const MultiPoly& x, const MultiPoly& y) { return x.num_terms() < y.num_terms(); });
  MultiPoly g(a.symbols());
  for (const auto& c : coeffs) {
    g = gcd(g, c);
    if (g.is_constant()) return g;
  }
  return g;
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (!same_symbols(a.symbols(), b.symbols())) throw SymbolMismatch("gcd across symbol sets");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b) return a.monic();

  auto va = used_vars(a), vb = used_vars(b);
  for (auto v : va)
    if (!b.depends_on(v)) return gcd(content_in(a, v), b);
  for (auto v : vb)
    if (!a.depends_on(v)) return gcd(a, content_in(b, v));

  {
    // Evaluate the highest-degree variables last so the integers stay small.
    std::vector<std::size_t> order = va;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return std::max(a.degree(x), b.degree(x)) < std::max(a.degree(y), b.degree(y));
    });
    auto r = heu_gcd(to_primitive_integer(a), to_primitive_integer(b), order, 0, 64);
    if (r) return r->h.monic();
  }
  if (va.size() == 1) {
    UPoly g = ugcd(to_upoly(a, va[0]), to_upoly(b, va[0]));
    return from_upoly(g, a.symbols(), va[0]).monic();
  }

  std::size_t var = va[0];
  std::uint32_t best = ~0u;
  for (auto v : va) {
    std::uint32_t d = std::max(a.degree(v), b.degree(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }
  MultiPoly ca = content_in(a, var), cb = content_in(b, var);
  MultiPoly pa = divide_or_throw(a, ca), pb = divide_or_throw(b, cb);
  MultiPoly c = gcd(ca, cb);
  MultiPoly g = primitive_gcd(std::move(pa), std::move(pb), var);
  return (c * g).monic();
}

}  // namespace ptau
