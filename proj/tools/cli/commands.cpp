#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cli/csv.hpp"
#include "cli/svg.hpp"
#include "fovir/analysis.hpp"
#include "fovir/sweep.hpp"

namespace fovir::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string trajectory_filename(ProliferationKind kind, double alpha) {
  return "trajectory_" + std::string(kind_name(kind)) + "_alpha" + format_double(alpha) + ".csv";
}

std::vector<std::string> config_comments(const std::string& command, const RunConfig& config) {
  return {"fovir " + command, "config: " + config_to_json(config).dump()};
}

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory '" + dir.string() + "': " +
                             ec.message());
  }
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream os(path);
  if (!os) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  os.precision(17);
  return os;
}

void close_output(std::ofstream& os, const fs::path& path) {
  os.close();
  if (!os) {
    throw std::runtime_error("failed writing '" + path.string() + "'");
  }
}

std::string state_text(const State& s) {
  return "(" + format_double(s.T) + ", " + format_double(s.I) + ", " + format_double(s.V) + ", " +
         format_double(s.C) + ")";
}

json state_json(const State& s) { return {{"T", s.T}, {"I", s.I}, {"V", s.V}, {"C", s.C}}; }

}  // namespace

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  TrajectorySuite suite;
  try {
    suite = trajectory_suite(config.params, config.alphas, config.kinds, config.initial,
                             config.solver);
  } catch (const SuiteError& e) {
    err << "error: simulation failed: " << e.what() << '\n';
    return kExitNumerical;
  }

  try {
    ensure_dir(config.output.dir);
    for (const auto& run : suite.runs) {
      const fs::path path = config.output.dir / trajectory_filename(run.kind, run.alpha);
      auto os = open_output(path);
      auto comments = config_comments("simulate", config);
      comments.push_back("run: kind=" + std::string(kind_name(run.kind)) +
                         " alpha=" + format_double(run.alpha));
      write_trajectory_csv(os, run.trajectory, comments);
      close_output(os, path);
      out << "wrote " << path.string() << " (" << run.trajectory.size() << " rows)\n";
    }
    if (config.output.svg) {
      for (double alpha : config.alphas) {
        const fs::path path = config.output.dir / ("trajectories_alpha" + format_double(alpha) + ".svg");
        auto os = open_output(path);
        os << "<!-- config: " << config_to_json(config).dump() << " -->\n";
        write_suite_svg(os, suite, alpha);
        close_output(os, path);
        out << "wrote " << path.string() << '\n';
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int cmd_equilibria(const RunConfig& config, bool as_json, std::ostream& out, std::ostream&) {
  json reports = json::array();
  for (double alpha : config.alphas) {
    ModelParams params = config.params;
    params.alpha = alpha;
    const EquilibriumReport report = equilibrium_report(params);

    std::vector<std::pair<std::string, State>> points{{"X0", report.x0}};
    if (report.x1) points.emplace_back("X1", *report.x1);
    if (report.x2) points.emplace_back("X2", *report.x2);

    if (as_json) {
      json eq = json::array();
      for (const auto& [name, x] : points) {
        eq.push_back({{"name", name},
                      {"state", state_json(x)},
                      {"residual", equilibrium_residual(x, params)}});
      }
      reports.push_back({{"alpha", alpha},
                         {"r0", report.r0},
                         {"phi0", report.phi0},
                         {"regime", std::string(regime_name(report.regime))},
                         {"equilibria", eq}});
      continue;
    }

    out << "alpha   = " << format_double(alpha) << '\n';
    out << "r0      = " << format_double(report.r0) << '\n';
    out << "phi0    = " << format_double(report.phi0) << '\n';
    out << "regime  = " << regime_name(report.regime) << '\n';
    for (const auto& [name, x] : points) {
      out << name << "      = " << state_text(x)
          << "  residual = " << format_double(equilibrium_residual(x, params)) << '\n';
    }
    for (auto kind : config.kinds) {
      if (kind != ProliferationKind::F1) {
        out << "note: X1/X2 closed forms are derived for f1 only; not available for "
            << kind_name(kind) << '\n';
      }
    }
    out << '\n';
  }
  if (as_json) {
    out << json{{"config", config_to_json(config)}, {"reports", reports}}.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.axes.size() != 2) {
    err << "error: sweep needs exactly two axes, got " << config.axes.size() << '\n';
    return kExitUsage;
  }
  Axis x;
  Axis y;
  try {
    x = Axis::parse(config.axes[0]);
    y = Axis::parse(config.axes[1]);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (x.param == y.param) {
    err << "error: sweep axes must name two different parameters\n";
    return kExitUsage;
  }

  const SweepGrid grid = r0_surface(config.params, x, y);
  const std::string stem = "sweep_" + std::string(x.name()) + "_" + std::string(y.name());
  try {
    ensure_dir(config.output.dir);
    const fs::path path = config.output.dir / (stem + ".csv");
    auto os = open_output(path);
    write_sweep_csv(os, grid, config_comments("sweep", config));
    close_output(os, path);
    out << "wrote " << path.string() << " (" << grid.values.size() << " rows)\n";
    if (config.output.svg) {
      const fs::path svg = config.output.dir / (stem + ".svg");
      auto ss = open_output(svg);
      ss << "<!-- config: " << config_to_json(config).dump() << " -->\n";
      write_heatmap_svg(ss, grid);
      close_output(ss, svg);
      out << "wrote " << svg.string() << '\n';
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int cmd_sensitivity(const RunConfig& config, std::ostream& out, std::ostream& err) {
  constexpr double kTolerance = 1e-6;
  bool ok = true;
  for (double alpha : config.alphas) {
    ModelParams params = config.params;
    params.alpha = alpha;
    const SensitivityReport report = sensitivity_indices(params);
    out << "alpha = " << format_double(alpha) << "  r0 = " << format_double(r0(params)) << '\n';
    out << std::left << std::setw(8) << "param" << std::setw(24) << "closed_form" << std::setw(24)
        << "finite_difference" << std::setw(12) << "rel_diff" << "sign\n";
    for (Param p : kSensitivityParams) {
      const double closed = report.indices.at(p);
      const double fd = sensitivity_finite_difference(params, p);
      const double rel = std::abs(fd - closed) / std::abs(closed);
      const bool positive_expected = p == Param::Beta || p == Param::Lambda || p == Param::N;
      const bool sign_ok = positive_expected ? closed > 0.0 : closed < 0.0;
      std::ostringstream rel_text;
      rel_text << std::scientific << std::setprecision(2) << rel;
      out << std::setw(8) << param_name(p) << std::setw(24) << format_double(closed)
          << std::setw(24) << format_double(fd) << std::setw(12) << rel_text.str()
          << (closed > 0.0 ? "+" : "-") << (sign_ok ? "" : "  (unexpected sign)") << '\n';
      ok = ok && sign_ok && rel <= kTolerance;
    }
    out << '\n';
  }
  if (!ok) {
    err << "error: sensitivity cross-check failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace fovir::cli
