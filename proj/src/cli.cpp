#include "ptau/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "ptau/errors.hpp"
#include "ptau/eulertop.hpp"
#include "ptau/fockoracle.hpp"
#include "ptau/painleve.hpp"

namespace ptau::cli {

using json = nlohmann::ordered_json;

namespace {

std::string q(const Rational& r) { return r.get_str(); }

json triple_json(const Triple& v) { return json::array({v[0], v[1], v[2]}); }

SymbolsPtr weight_t_symbols() {
  auto names = weight_symbol_names();
  names.push_back("t");
  return make_symbols(names);
}

struct Weights {
  WeightMatrix w;
  bool symbolic = false;
  std::optional<unsigned> seed;
};

std::array<std::array<Rational, 3>, 3> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("weights JSON must be a 3x3 array");
  std::array<std::array<Rational, 3>, 3> m;
  for (int a = 0; a < 3; ++a) {
    if (!j[a].is_array() || j[a].size() != 3) throw ParseError("weights JSON must be a 3x3 array");
    for (int b = 0; b < 3; ++b) {
      const auto& e = j[a][b];
      m[a][b] = e.is_string() ? parse_number(e.get<std::string>())
                : e.is_number_integer() ? Rational(e.get<long>())
                                        : throw ParseError("weight entries must be integers or \"p/q\" strings");
    }
  }
  return m;
}

// Small rationals from a fixed generator; the raw engine output is mapped by
// hand so the draw is identical on every standard library.
Rational draw(std::mt19937& rng) {
  long n = static_cast<long>(rng() % 19) - 9;
  long d = static_cast<long>(rng() % 5) + 1;
  if (n == 0) n = 1;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Weights make_weights(const std::string& spec, const SymbolsPtr& syms, const ScalingParams& sp) {
  Weights out;
  if (spec == "symbolic" || spec == "sym") {
    out.w = symbolic_weights(syms);
    out.symbolic = true;
    return out;
  }
  if (spec.rfind("random:", 0) == 0) {
    unsigned seed = 0;
    try {
      seed = static_cast<unsigned>(std::stoul(spec.substr(7)));
    } catch (const std::exception&) {
      throw ParseError("bad seed in '" + spec + "'");
    }
    out.seed = seed;
    std::mt19937 rng(seed);
    // Redraw on the degenerate loci: singular weight matrix or vanishing tau.
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::array<std::array<Rational, 3>, 3> m;
      for (auto& row : m)
        for (auto& x : row) x = draw(rng);
      auto w = numeric_weights(syms, m);
      if (weight_determinant(w).is_zero()) continue;
      if (sp.in_support && tau0(sp, w).is_zero()) continue;
      out.w = w;
      return out;
    }
    throw InvalidParameters("could not draw non-degenerate weights");
  }
  std::array<std::array<Rational, 3>, 3> m;
  if (spec.rfind("json:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw ParseError("cannot open weights file '" + spec.substr(5) + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("weights file: ") + e.what());
    }
    m = matrix_from_json(j);
  } else {
    std::stringstream ss(spec);
    std::string item;
    std::vector<Rational> vals;
    while (std::getline(ss, item, ',')) vals.push_back(parse_number(item));
    if (vals.size() != 9) throw ParseError("expected 'symbolic', 'random:<seed>', 'json:<file>' or nine rationals");
    for (int i = 0; i < 9; ++i) m[i / 3][i % 3] = vals[i];
  }
  out.w = numeric_weights(syms, m);
  return out;
}

json weights_json(const Weights& w) {
  if (w.symbolic) return "symbolic";
  json rows = json::array();
  for (int a = 1; a <= 3; ++a) {
    json row = json::array();
    for (int b = 1; b <= 3; ++b) row.push_back(q(w.w(a, b).constant_term()));
    rows.push_back(row);
  }
  return rows;
}

json params_json(const ScalingParams& sp) {
  return json{{"mu", triple_json(sp.mu)}, {"nu", triple_json(sp.nu)}, {"m", triple_json(sp.m)},
              {"shift", sp.shift_c},      {"R2", sp.R2},                {"p", sp.p},
              {"in_support", sp.in_support}};
}

json head(const RunConfig& c, const ScalingParams& sp, const Weights& w) {
  json j;
  j["command"] = c.command;
  j["input"] = json{{"mu", triple_json(c.mu)}, {"nu", triple_json(c.nu)}};
  j["params"] = params_json(sp);
  j["weights"] = weights_json(w);
  if (w.seed) j["seed"] = *w.seed;
  return j;
}

RunResult cmd_tau(const RunConfig& c) {
  auto sp = normalize_params(c.mu, c.nu);
  auto syms = weight_t_symbols();
  auto w = make_weights(c.weights, syms, sp);
  RunResult r;
  r.json = head(c, sp, w);
  auto tau = tau0(sp, w.w);
  r.json["tau0"] = tau.to_string();
  if (!sp.in_support) {
    r.json["warning"] = "nu lies outside the support; tau0 vanishes identically";
    return r;
  }
  if (w.symbolic && !tau.is_zero()) {
    auto ct = compress_minors(tau);
    json minors = json::object();
    for (const auto& [name, p] : ct.minors) minors[name] = p.to_string();
    r.json["compressed"] = json{{"content", ct.content.to_string()}, {"tau", ct.tau.to_string()}, {"minors", minors}};
  }
  return r;
}

json painleve_json(const PainleveData& d, std::optional<bool> pvi_ok, bool sigma_ok) {
  json c = json::array(), A = json::array(), v = json::array();
  for (const auto& x : d.c) c.push_back(q(x));
  for (const auto& x : d.A) A.push_back(q(x));
  for (const auto& x : d.v) v.push_back(q(x));
  json j{{"branch", d.branch},
         {"v", v},
         {"pvi", {{"alpha", q(d.pvi.alpha)}, {"beta", q(d.pvi.beta)}, {"gamma", q(d.pvi.gamma)}, {"delta", q(d.pvi.delta)}}},
         {"c", c},
         {"A", A},
         {"a", q(d.a)},
         {"b", q(d.b)},
         {"f", d.f.to_string()},
         {"sigma", d.sigma.to_string()}};
  if (d.y) {
    j["y"] = d.y->to_string();
  } else {
    j["y"] = nullptr;
    j["degenerate"] = d.degenerate_reason;
  }
  j["verdict"] = json{{"pvi_residual_zero", pvi_ok ? json(*pvi_ok) : json(nullptr)}, {"sigma_residual_zero", sigma_ok}};
  return j;
}

RunResult cmd_solve(const RunConfig& c) {
  auto sp = normalize_params(c.mu, c.nu);
  if (!sp.in_support) throw InvalidParameters("nu lies outside the support; tau0 vanishes identically");
  auto syms = weight_t_symbols();
  auto w = make_weights(c.weights, syms, sp);
  RunResult r;
  r.json = head(c, sp, w);
  RatFunc tau = tau0(sp, w.w);
  if (tau.is_zero()) throw InvalidParameters("tau0 vanishes identically for these weights");
  r.json["tau0"] = tau.to_string();
  if (w.symbolic) {
    auto ct = compress_minors(tau);
    json minors = json::object();
    for (const auto& [name, p] : ct.minors) minors[name] = p.to_string();
    r.json["content"] = ct.content.to_string();
    r.json["minors"] = minors;
    r.json["tau0_compressed"] = ct.tau.to_string();
    tau = ct.tau;
  }
  std::vector<Branch> branches;
  if (c.branch == "all")
    branches = distinct_branches(v_values(sp));
  else
    branches.push_back(parse_branch(c.branch));

  json out = json::array();
  bool all_ok = true;
  int live = 0;
  std::vector<std::pair<std::string, std::string>> seen;  // (pvi + y) text -> branch id
  for (const auto& b : branches) {
    auto d = solve_branch(tau, sp, b);
    bool sigma_ok = sigma_form_residual(d.sigma, d.v).is_zero();
    std::optional<bool> pvi_ok;
    if (d.y) {
      try {
        pvi_ok = pvi_residual(*d.y, d.pvi).is_zero();
        ++live;
      } catch (const PoleError& e) {
        d.degenerate_reason = e.what();
      }
    }
    all_ok = all_ok && sigma_ok && pvi_ok.value_or(true);
    json j = painleve_json(d, pvi_ok, sigma_ok);
    if (d.y) {
      std::string key = j["pvi"].dump() + d.y->to_string();
      for (const auto& [k, id] : seen)
        if (k == key) {
          j["same_as"] = id;
          break;
        }
      if (!j.contains("same_as")) seen.emplace_back(key, d.branch);
    }
    out.push_back(j);
  }
  r.json["branches"] = out;
  if (!all_ok)
    r.exit_code = kVerificationFailed;
  else if (live == 0)
    r.exit_code = kDegenerateOnly;
  return r;
}

RunResult cmd_oracle(const RunConfig& c) {
  auto base = normalize_params(c.mu, c.nu);
  if (base.m[0] > c.cap) {
    // 2^(3 m1) basis states in the worst case
    throw InvalidParameters("m1 = " + std::to_string(base.m[0]) + " exceeds the oracle cap " + std::to_string(c.cap) +
                            " (matrix size up to " + std::to_string(3 * base.m[0]) + ", Fock expansion up to 2^" +
                            std::to_string(3 * base.m[0]) + " states)");
  }
  if (c.order < 1 || c.order > 4) throw InvalidParameters("time order must be between 1 and 4");
  auto names = weight_symbol_names();
  for (auto& n : time_symbol_names(c.order)) names.push_back(n);
  names.push_back("t");
  auto syms = make_symbols(names);
  auto w = make_weights(c.weights, syms, base);
  auto u = symbolic_times(syms, c.order);
  RunResult r;
  r.json = head(c, base, w);
  r.json["order"] = c.order;
  json rows = json::array();
  bool ok = true;
  for (const auto& nu : support_points(base)) {
    auto sp = with_nu(base, nu);
    auto fock = tau_oracle(sp, w.w, u);
    auto viaA = tau_from_A(sp, w.w, u);
    auto viaE = tau_from_E(sp, w.w, u);
    if (c.corrupt_sign) viaE = -viaE;
    bool ae = viaA == viaE, fa = fock == viaA, fe = fock == viaE;
    ok = ok && ae && fa && fe;
    rows.push_back(json{{"nu", triple_json(nu)},
                        {"oracle_eq_detA", fa},
                        {"oracle_eq_detE", fe},
                        {"detA_eq_detE", ae},
                        {"zero", fock.is_zero()}});
  }
  r.json["support"] = rows;
  r.json["agree"] = ok;
  if (!ok) r.exit_code = kVerificationFailed;
  return r;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

RunResult cmd_euler(const RunConfig& c) {
  auto sp = normalize_params(c.mu, c.nu);
  if (!sp.in_support) throw InvalidParameters("nu lies outside the support; tau0 vanishes identically");
  if (c.weights == "symbolic" || c.weights == "sym") throw InvalidParameters("euler needs numeric weights");
  if (c.samples < 1) throw InvalidParameters("samples must be positive");
  auto syms = weight_t_symbols();
  auto w = make_weights(c.weights, syms, sp);
  TauFamily fam(sp, w.w);
  Rational t0 = parse_number(c.t0);
  const double t0d = t0.get_d();
  auto in_unit = [](double x) { return x > 0 && x < 1; };
  if (!in_unit(t0d) || !in_unit(c.t_end)) throw InvalidParameters("t0 and t_end must lie in (0, 1)");

  RunResult r;
  r.json = head(c, sp, w);
  r.json["t0"] = q(t0);
  r.json["t_end"] = c.t_end;
  r.json["tol"] = c.tol;
  auto exact = init_exact(fam, t0);
  EulerState s0 = exact.to_double();
  if (c.perturb != 0) s0.omega[0] *= 1 + c.perturb;
  json init = json::object();
  for (int i = 0; i < 3; ++i) {
    init["omega" + std::to_string(i + 1)] = q(exact.omega[i]);
    init["omega_bar" + std::to_string(i + 1)] = q(exact.omega_bar[i]);
  }
  r.json["initial"] = init;

  std::vector<double> samples;
  for (int i = 1; i <= c.samples; ++i) samples.push_back(t0d + (c.t_end - t0d) * i / c.samples);
  auto conserved = conserved_from(fam);
  std::vector<EulerState> traj;
  try {
    traj = integrate(s0, sp.nu, c.t_end, c.tol, samples);
  } catch (const IntegrationPole& e) {
    r.json["pole"] = json{{"last_t", e.last_t}, {"message", e.what()}};
    r.exit_code = kVerificationFailed;
    return r;
  }
  auto rep = monitor(traj, conserved);
  auto op = omega_products(f_from_tau0(fam.tau0(sp.nu)), sp.R2);
  double max_rel = 0;
  std::ostringstream csv;
  csv << "t,omega1,omega2,omega3,omega_bar1,omega_bar2,omega_bar3,monitor1,monitor2,monitor3\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto& s = traj[k];
    csv << fmt(s.t);
    for (double x : s.omega) csv << ',' << fmt(x);
    for (double x : s.omega_bar) csv << ',' << fmt(x);
    for (double x : rep.values[k]) csv << ',' << fmt(x);
    csv << '\n';
    for (int i = 0; i < 3; ++i) {
      double ref = op[i].evaluate({{"t", Rational(s.t)}}).get_d();
      double got = s.omega[i] * s.omega_bar[i];
      double denom = std::max(std::abs(ref), 1e-300);
      max_rel = std::max(max_rel, std::abs(got - ref) / denom);
    }
  }
  r.csv = csv.str();
  r.json["samples"] = traj.size();
  r.json["monitor_max"] = json{{"quadratic", rep.max_abs[0]}, {"cubic", rep.max_abs[1]}, {"curvature", rep.max_abs[2]}};
  r.json["max_rel_product_error"] = max_rel;
  r.json["threshold"] = c.threshold;
  const bool ok = rep.within(c.threshold) && max_rel <= c.threshold;
  r.json["ok"] = ok;
  if (!ok) r.exit_code = kVerificationFailed;
  return r;
}

}  // namespace

Rational parse_number(const std::string& text) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  auto dot = s.find('.');
  if (dot == std::string::npos) return parse_rational(s);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits.find_first_not_of("-0123456789") != std::string::npos ||
      digits.find('-', 1) != std::string::npos || s.find('/') != std::string::npos)
    throw ParseError("bad number '" + text + "'");
  mpz_class num(digits, 10), den = 1;
  for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Triple parse_triple(const std::string& text) {
  std::stringstream ss(text);
  std::string item;
  std::vector<int> v;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad integer triple '" + text + "'");
    }
  }
  if (v.size() != 3) throw ParseError("expected three comma-separated integers, got '" + text + "'");
  return {v[0], v[1], v[2]};
}

RunResult run(const RunConfig& config) {
  try {
    if (config.command == "tau") return cmd_tau(config);
    if (config.command == "solve") return cmd_solve(config);
    if (config.command == "oracle") return cmd_oracle(config);
    if (config.command == "euler") return cmd_euler(config);
    throw ParseError("unknown command '" + config.command + "'");
  } catch (const InvalidParameters& e) {
    return RunResult{kInvalidInput, json{{"error", e.what()}}, {}};
  } catch (const ParseError& e) {
    return RunResult{kInvalidInput, json{{"error", e.what()}}, {}};
  } catch (const PoleError& e) {
    return RunResult{kVerificationFailed, json{{"error", e.what()}}, {}};
  } catch (const std::exception& e) {
    return RunResult{kVerificationFailed, json{{"error", e.what()}}, {}};
  }
}

}  // namespace ptau::cli
