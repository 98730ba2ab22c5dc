#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace fovir::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitUsage = 64;

/// Name of the CSV written for one (kind, alpha) run, e.g. trajectory_f2_alpha0.96.csv.
std::string trajectory_filename(ProliferationKind kind, double alpha);

/// Comment lines embedded at the head of every artifact.
std::vector<std::string> config_comments(const std::string& command, const RunConfig& config);

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_equilibria(const RunConfig& config, bool as_json, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sensitivity(const RunConfig& config, std::ostream& out, std::ostream& err);

struct ValidateOptions {
  // Coarsest step of the Mittag-Leffler convergence ladder and the step of
  // the alpha = 1 accuracy check. Defaults: 0.02 and 0.001.
  std::optional<double> step_size;
  // Perturbs the integrator kernels by 1% to demonstrate that the checks bite.
  bool inject_weight_fault = false;
  std::size_t random_samples = 1000;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double allowed = 0.0;
  std::string detail;
};

std::vector<CheckResult> run_validation(const ValidateOptions& options);
int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err);

}  // namespace fovir::cli
