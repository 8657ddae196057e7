#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ptau/cli.hpp"
#include "ptau/errors.hpp"

using ptau::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Tau functions of the 3-component KP hierarchy and rational Painleve VI solutions"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string mu, nu, out, csv_out, format = "json";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--mu", mu, "mu1,mu2,mu3")->required();
    sub->add_option("--nu", nu, "nu1,nu2,nu3")->required();
    sub->add_option("--weights", cfg.weights, "symbolic | random:<seed> | json:<file> | nine rationals")
        ->capture_default_str();
    sub->add_option("--out", out, "write JSON here instead of stdout");
  };
  auto* tau = app.add_subcommand("tau", "tau0(nu; t) from the determinant formula");
  common(tau);
  auto* solve = app.add_subcommand("solve", "sigma-form pipeline and Okamoto extraction per branch");
  common(solve);
  solve->add_option("--branch", cfg.branch, "D4 element (e.g. 1234/-+-+, identity, flip13, swap23) or all")
      ->capture_default_str();
  auto* oracle = app.add_subcommand("oracle", "fermionic oracle against det(A) and det(E)");
  common(oracle);
  oracle->add_option("--order", cfg.order, "time truncation order")->capture_default_str();
  oracle->add_option("--cap", cfg.cap, "largest m1 accepted")->capture_default_str();
  oracle->add_flag("--corrupt-sign", cfg.corrupt_sign, "negate det(E) (disagreement must be reported)");
  auto* euler = app.add_subcommand("euler", "integrate the Euler top from exact initial data");
  common(euler);
  euler->add_option("--t0", cfg.t0, "start time, p/q or decimal")->capture_default_str();
  euler->add_option("--t-end", cfg.t_end)->capture_default_str();
  euler->add_option("--tol", cfg.tol)->capture_default_str();
  euler->add_option("--samples", cfg.samples, "evenly spaced output points")->capture_default_str();
  euler->add_option("--threshold", cfg.threshold, "monitor bound for the verdict")->capture_default_str();
  euler->add_option("--perturb", cfg.perturb, "relative kick to omega1 at t0")->capture_default_str();
  euler->add_option("--csv", csv_out, "write the trajectory CSV here");
  euler->add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : ptau::cli::kInvalidInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  ptau::cli::RunResult res;
  try {
    cfg.mu = ptau::cli::parse_triple(mu);
    cfg.nu = ptau::cli::parse_triple(nu);
    res = ptau::cli::run(cfg);
  } catch (const ptau::Error& e) {
    res = {ptau::cli::kInvalidInput, {{"error", e.what()}}, {}};
  }

  const std::string text = res.json.dump(2) + "\n";
  if (!csv_out.empty() && !res.csv.empty()) std::ofstream(csv_out) << res.csv;
  if (!out.empty()) {
    std::ofstream(out) << text;
  } else if (format == "csv" && !res.csv.empty()) {
    std::cout << res.csv;
  } else {
    std::cout << text;
  }
  if (res.json.contains("error")) std::cerr << "error: " << res.json["error"].get<std::string>() << "\n";
  return res.exit_code;
}
