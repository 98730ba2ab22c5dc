#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/csv.hpp"
#include "fovir/analysis.hpp"
#include "fovir/mittag_leffler.hpp"
#include "fovir/rk4.hpp"
#include "fovir/solver.hpp"

namespace fovir::cli {

namespace {

void corrupt(AbmKernel& kernel) {
  for (auto* v : {&kernel.predictor, &kernel.corrector, &kernel.start}) {
    for (double& w : *v) w *= 1.01;
  }
}

SolverConfig oracle_config(double alpha, double h, bool fault) {
  SolverConfig cfg;
  cfg.alpha = alpha;
  cfg.step_size = h;
  cfg.t_end = 1.0;
  if (fault) cfg.kernel_hook = corrupt;
  return cfg;
}

// max over the grid of |y_n - E_alpha(-t_n^alpha)| for D^alpha y = -y, y(0) = 1.
double relaxation_error(double alpha, double h, bool fault) {
  const VectorField<1> f = [](double, const Vec<1>& y) { return Vec<1>{-y[0]}; };
  const auto tr = integrate<1>(f, Vec<1>{1.0}, oracle_config(alpha, h, fault));
  double err = 0.0;
  for (std::size_t n = 0; n < tr.size(); ++n) {
    const double exact = mittag_leffler(alpha, -std::pow(tr.times[n], alpha));
    err = std::max(err, std::abs(tr.states[n][0] - exact));
  }
  return err;
}

// Log-uniform within a factor 10 of the baseline; alpha uniform in [0.5, 1].
ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> decade(-1.0, 1.0);
  std::uniform_real_distribution<double> order(0.5, 1.0);
  ModelParams p;
  for (Param id : all_params()) {
    if (id == Param::Alpha) continue;
    set_param(p, id, get_param(p, id) * std::pow(10.0, decade(rng)));
  }
  p.alpha = order(rng);
  return p;
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidateOptions& options) {
  std::vector<CheckResult> results;
  const bool fault = options.inject_weight_fault;

  {
    const double err = std::abs(mittag_leffler(1.0, 1.0) - std::exp(1.0));
    results.push_back({"mittag-leffler E_1(1) = e", err <= 1e-12, err, 1e-12, ""});
  }
  {
    const double err = std::abs(mittag_leffler(0.5, -1.0) - std::exp(1.0) * std::erfc(1.0));
    results.push_back({"mittag-leffler E_0.5(-1) = e erfc(1)", err <= 1e-10, err, 1e-10, ""});
  }

  const double coarse = options.step_size.value_or(0.02);
  for (double alpha : {0.5, 0.92, 0.96, 1.0}) {
    std::vector<double> errors;
    for (int i = 0; i < 4; ++i) {
      errors.push_back(relaxation_error(alpha, coarse / std::pow(2.0, i), fault));
    }
    double worst_ratio = 0.0;
    std::string detail = "errors:";
    for (std::size_t i = 0; i < errors.size(); ++i) {
      if (i > 0) worst_ratio = std::max(worst_ratio, errors[i] / errors[i - 1]);
      detail += " " + sci(errors[i]);
    }
    results.push_back({"oracle convergence alpha=" + format_double(alpha) + " from h=" +
                           format_double(coarse),
                       worst_ratio < 1.0, worst_ratio, 1.0, detail});
  }

  {
    const double h = options.step_size.value_or(1e-3);
    const double err = relaxation_error(1.0, h, fault);
    results.push_back({"oracle accuracy alpha=1 h=" + format_double(h), err <= 1e-6, err, 1e-6, ""});
  }

  {
    ModelParams params;
    SolverConfig cfg;
    cfg.alpha = 1.0;
    cfg.step_size = 1e-3;
    cfg.t_end = 50.0;
    if (fault) cfg.kernel_hook = corrupt;
    const auto field = make_vector_field(params, ProliferationKind::F1);
    const Vec4 y0 = default_initial_state().to_vec();
    double rel = INFINITY;
    std::string detail;
    try {
      const auto abm = integrate<4>(field, y0, cfg);
      const auto ref = integrate_rk4<4>(field, y0, cfg.step_size, cfg.t_end);
      rel = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        rel = std::max(rel, std::abs(abm.back()[i] - ref.back()[i]) / std::abs(ref.back()[i]));
      }
    } catch (const std::exception& e) {
      detail = e.what();
    }
    results.push_back({"alpha=1 model vs RK4 at t=50", rel <= 1e-4, rel, 1e-4, detail});
  }

  std::mt19937_64 rng(20211);
  {
    double worst = 0.0;
    for (std::size_t s = 0; s < options.random_samples; ++s) {
      const ModelParams p = random_params(rng);
      const auto report = equilibrium_report(p);
      for (const auto& x : {std::optional<State>(report.x0), report.x1, report.x2}) {
        if (!x) continue;
        double scale = 1.0;
        for (double v : x->to_vec()) scale = std::max(scale, std::abs(v));
        worst = std::max(worst, equilibrium_residual(*x, p) / scale);
      }
    }
    results.push_back({"equilibrium residuals (scaled)", worst <= 1e-10, worst, 1e-10, ""});
  }
  {
    double worst = 0.0;
    bool signs = true;
    for (std::size_t s = 0; s < options.random_samples; ++s) {
      const ModelParams p = random_params(rng);
      const auto report = sensitivity_indices(p);
      for (Param id : kSensitivityParams) {
        const double closed = report.indices.at(id);
        const double fd = sensitivity_finite_difference(p, id);
        worst = std::max(worst, std::abs(fd - closed) / std::abs(closed));
        const bool positive = id == Param::Beta || id == Param::Lambda || id == Param::N;
        signs = signs && (positive ? closed > 0.0 : closed < 0.0);
      }
    }
    results.push_back({"sensitivity closed form vs finite differences", signs && worst <= 1e-6,
                       worst, 1e-6, signs ? "" : "unexpected sign"});
  }
  return results;
}

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> results;
  try {
    results = run_validation(options);
  } catch (const std::exception& e) {
    err << "error: validation aborted: " << e.what() << '\n';
    return kExitNumerical;
  }
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  measured=" << sci(r.measured)
        << " allowed=" << sci(r.allowed);
    if (!r.detail.empty()) out << "  [" << r.detail << "]";
    out << '\n';
    if (!r.passed) {
      ++failed;
      err << "check failed: " << r.name << " (measured " << sci(r.measured) << ", allowed "
          << sci(r.allowed) << ")\n";
    }
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace fovir::cli
