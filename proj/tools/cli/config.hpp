#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fovir/model.hpp"
#include "fovir/solver.hpp"

namespace fovir::cli {

struct OutputOptions {
  std::filesystem::path dir = ".";
  bool svg = false;
};

/// Everything a command needs. Defaults reproduce the baseline parameter
/// table with N = 100, f1, alpha = 1 and the standard initial condition.
struct RunConfig {
  ModelParams params;
  std::vector<ProliferationKind> kinds{ProliferationKind::F1};
  std::vector<double> alphas{1.0};
  State initial = default_initial_state();
  SolverConfig solver;
  OutputOptions output;
  // "<name>:<lo>:<hi>:<count>[:log]"
  std::vector<std::string> axes{"beta:1e-4:1:100:log", "mu:1e-3:1:100:log"};

  /// Throws std::invalid_argument on the first broken invariant.
  void validate() const;
};

RunConfig default_config();

/// Keys absent from `j` keep their defaults; unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& config);

RunConfig load_config(const std::filesystem::path& path);

}  // namespace fovir::cli
