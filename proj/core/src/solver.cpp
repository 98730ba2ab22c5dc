#include "fovir/solver.hpp"

#include <sstream>

namespace fovir {

AbmKernel AbmKernel::build(double alpha, double step_size, std::size_t steps) {
  AbmKernel kernel;
  kernel.alpha = alpha;
  kernel.step_size = step_size;
  const double h_alpha = std::pow(step_size, alpha);
  kernel.predictor_scale = h_alpha / alpha;
  kernel.corrector_scale = h_alpha / (alpha * (alpha + 1.0));

  const std::size_t len = std::max<std::size_t>(steps, 1);
  kernel.predictor.resize(len);
  kernel.corrector.resize(len);
  kernel.start.resize(len);

  // p[m] = m^(alpha+1) and r[m] = m^alpha, shared by all three kernels.
  std::vector<double> p(len + 2);
  std::vector<double> r(len + 2);
  for (std::size_t m = 0; m < len + 2; ++m) {
    const double x = static_cast<double>(m);
    r[m] = std::pow(x, alpha);
    p[m] = std::pow(x, alpha + 1.0);
  }
  for (std::size_t k = 0; k < len; ++k) {
    kernel.predictor[k] = r[k + 1] - r[k];
    kernel.corrector[k] = p[k + 2] + p[k] - 2.0 * p[k + 1];
    kernel.start[k] = p[k] - (static_cast<double>(k) - alpha) * r[k + 1];
  }
  return kernel;
}

AbmWeights abm_weights(std::size_t step_index, double alpha, double step_size) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("abm_weights: alpha must lie in (0, 1]");
  }
  if (!(step_size > 0.0)) {
    throw std::invalid_argument("abm_weights: step size must be positive");
  }
  const std::size_t n = step_index;
  const AbmKernel kernel = AbmKernel::build(alpha, step_size, n + 1);

  AbmWeights w;
  w.predictor.resize(n + 1);
  w.corrector.resize(n + 2);
  for (std::size_t j = 0; j <= n; ++j) {
    w.predictor[j] = kernel.predictor_scale * kernel.predictor[n - j];
  }
  w.corrector[0] = kernel.corrector_scale * kernel.start[n];
  for (std::size_t j = 1; j <= n; ++j) {
    w.corrector[j] = kernel.corrector_scale * kernel.corrector[n - j];
  }
  w.corrector[n + 1] = kernel.corrector_scale;
  return w;
}

void SolverConfig::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("solver: alpha must lie in (0, 1]");
  }
  if (!(step_size > 0.0) || !std::isfinite(step_size)) {
    throw std::invalid_argument("solver: step size must be positive");
  }
  if (!(t_end >= step_size) || !std::isfinite(t_end)) {
    throw std::invalid_argument("solver: t_end must be finite and at least one step");
  }
  if (corrector_iterations < 1) {
    throw std::invalid_argument("solver: corrector_iterations must be >= 1");
  }
  if (!(positivity_tolerance >= 0.0)) {
    throw std::invalid_argument("solver: positivity_tolerance must be >= 0");
  }
}

std::size_t SolverConfig::step_count() const {
  const double ratio = t_end / step_size;
  return static_cast<std::size_t>(std::floor(ratio * (1.0 + 1e-12)));
}

namespace detail {

std::string describe_nonfinite(std::size_t step, double t) {
  std::ostringstream os;
  os << "non-finite state at step " << step << " (t = " << t << ")";
  return os.str();
}

std::string describe_negative(std::size_t step, double t, std::size_t component, double value,
                              double threshold) {
  std::ostringstream os;
  os << "positivity violated at step " << step << " (t = " << t << "): component "
     << component << " = " << value << " < " << threshold
     << "; the step size is likely too large";
  return os.str();
}

void require_nonnegative_start(const double* y0, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(y0[i] >= 0.0)) {
      throw std::invalid_argument("solver: initial condition must be non-negative");
    }
  }
}

}  // namespace detail
}  // namespace fovir
