#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> kinds;
  std::vector<double> alphas;
  std::optional<double> h;
  std::optional<double> t_end;
  bool svg = false;
  std::vector<std::string> axes;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  cmd->add_option("--out", o.out_dir, "Output directory");
  cmd->add_option("--kind", o.kinds, "Proliferation law f1|f2|f3|f4 (repeatable)")
      ->check(CLI::IsMember({"f1", "f2", "f3", "f4"}));
  cmd->add_option("--alpha", o.alphas, "Fractional order in (0, 1] (repeatable)");
}

fovir::cli::RunConfig resolve(const Overrides& o) {
  auto cfg = o.config_path.empty() ? fovir::cli::default_config()
                                   : fovir::cli::load_config(o.config_path);
  if (!o.out_dir.empty()) cfg.output.dir = o.out_dir;
  if (!o.kinds.empty()) {
    cfg.kinds.clear();
    for (const auto& k : o.kinds) cfg.kinds.push_back(*fovir::parse_kind(k));
  }
  if (!o.alphas.empty()) cfg.alphas = o.alphas;
  if (o.h) cfg.solver.step_size = *o.h;
  if (o.t_end) cfg.solver.t_end = *o.t_end;
  if (o.svg) cfg.output.svg = true;
  if (!o.axes.empty()) cfg.axes = o.axes;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional-order within-host SARS-CoV-2 / CTL model"};
  app.require_subcommand(1);

  Overrides o;
  bool as_json = false;
  fovir::cli::ValidateOptions validate;

  auto* simulate = app.add_subcommand("simulate", "Integrate trajectories and write CSV (and SVG)");
  add_common(simulate, o);
  simulate->set_help_flag("--help", "Print this help message and exit");
  simulate->add_option("--h", o.h, "Step size (day)");
  simulate->add_option("--t-end", o.t_end, "Final time (day)");
  simulate->add_flag("--svg", o.svg, "Also write SVG line charts");

  auto* equilibria = app.add_subcommand("equilibria", "Print R0, phi0, regime and equilibria");
  add_common(equilibria, o);
  equilibria->add_flag("--json", as_json, "Emit a JSON document instead of text");

  auto* sweep = app.add_subcommand("sweep", "R0 surface over two parameters (CSV, optional SVG)");
  add_common(sweep, o);
  sweep->add_option("--axis", o.axes, "<name>:<lo>:<hi>:<count>[:log], given twice");
  sweep->add_flag("--svg", o.svg, "Also write an SVG heatmap");

  auto* sensitivity = app.add_subcommand("sensitivity", "Normalized R0 sensitivity indices");
  add_common(sensitivity, o);

  auto* check = app.add_subcommand("validate", "Run solver and analysis self-checks");
  std::optional<double> validate_h;
  check->set_help_flag("--help", "Print this help message and exit");
  check->add_option("--h", validate_h, "Step size for the oracle problem");
  check->add_flag("--inject-weight-fault", validate.inject_weight_fault,
                  "Corrupt the integrator weights (the checks must then fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? fovir::cli::kExitOk : fovir::cli::kExitUsage;
  }

  try {
    if (*check) {
      validate.step_size = validate_h;
      return fovir::cli::cmd_validate(validate, std::cout, std::cerr);
    }
    const auto cfg = resolve(o);
    if (*simulate) return fovir::cli::cmd_simulate(cfg, std::cout, std::cerr);
    if (*equilibria) return fovir::cli::cmd_equilibria(cfg, as_json, std::cout, std::cerr);
    if (*sweep) return fovir::cli::cmd_sweep(cfg, std::cout, std::cerr);
    if (*sensitivity) return fovir::cli::cmd_sensitivity(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fovir::cli::kExitUsage;
  }
  return fovir::cli::kExitUsage;
}
