#pragma once

#include <string>

#include <json.hpp>

#include "ptau/taudet.hpp"

namespace ptau::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kDegenerateOnly = 3 };

struct RunConfig {
  std::string command;  // tau | solve | oracle | euler
  Triple mu{}, nu{};
  /// "symbolic", "random:<seed>", "json:<file>" (3x3 array of rationals) or
  /// nine comma-separated rationals in row order.
  std::string weights = "symbolic";
  /// D4 element id, alias, or "all" (one representative per distinct outcome).
  std::string branch = "all";
  std::string t0 = "1/10";
  double t_end = 0.9;
  double tol = 1e-10;
  int samples = 20;
  double threshold = 1e-8;
  double perturb = 0;      // relative kick to omega_1 at t0 (euler)
  int order = 1;           // oracle: time truncation order
  int cap = 3;             // oracle: largest m1 accepted
  bool corrupt_sign = false;  // oracle: flip the E sign, for checking that disagreement is reported
};

struct RunResult {
  int exit_code = kOk;
  nlohmann::ordered_json json;
  std::string csv;  // euler trajectory
};

/// Never throws; errors become exit code 2 with {"error": message}.
RunResult run(const RunConfig& config);

/// "p/q", integers, or finite decimals such as "0.25", parsed exactly.
Rational parse_number(const std::string& text);
/// "a,b,c" into a triple. Throws ParseError.
Triple parse_triple(const std::string& text);

}  // namespace ptau::cli
