#pragma once

// Caputo fractional-order initial value problems, integrated with the
// fractional Adams-Bashforth-Moulton predictor-corrector (PECE) scheme.
//
//   D^alpha y(t) = f(t, y(t)),  y(0) = y0,  0 < alpha <= 1
//
// is solved in its Volterra form
//
//   y(t) = y0 + 1/Gamma(alpha) * int_0^t (t - s)^(alpha - 1) f(s, y(s)) ds
//
// with a product-rectangle predictor and a product-trapezoid corrector on a
// uniform grid. For alpha < 1 the whole history enters every step (no memory
// truncation); at alpha = 1 the kernels carry no memory and the scheme is the
// classical one-step Euler predictor / trapezoidal corrector.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fovir {

template <std::size_t Dim>
using Vec = std::array<double, Dim>;

template <std::size_t Dim>
using VectorField = std::function<Vec<Dim>(double t, const Vec<Dim>& y)>;

/// Convolution kernels of the ABM scheme for a fixed order and grid.
///
/// With k = n - j the weights of step n -> n + 1 are
///   predictor  b_{j,n+1} = predictor_scale * predictor[k]
///   corrector  a_{j,n+1} = corrector_scale * corrector[k]   for 1 <= j <= n
///              a_{0,n+1} = corrector_scale * start[n]
///              a_{n+1,n+1} = corrector_scale
/// where predictor_scale = h^alpha / alpha and
/// corrector_scale = h^alpha / (alpha (alpha + 1)). The common factor
/// 1 / Gamma(alpha) of the Volterra form is applied by the integrator.
struct AbmKernel {
  double alpha = 1.0;
  double step_size = 0.0;
  double predictor_scale = 0.0;
  double corrector_scale = 0.0;
  std::vector<double> predictor;  // (k+1)^a - k^a
  std::vector<double> corrector;  // (k+2)^(a+1) + k^(a+1) - 2 (k+1)^(a+1)
  std::vector<double> start;      // n^(a+1) - (n - a) (n+1)^a

  /// Kernels covering steps 0 .. steps - 1.
  static AbmKernel build(double alpha, double step_size, std::size_t steps);
};

/// Explicit weights for one step.
struct AbmWeights {
  std::vector<double> predictor;  // b_{j,n+1}, j = 0 .. n
  std::vector<double> corrector;  // a_{j,n+1}, j = 0 .. n+1
};

/// Weights of the step t_n -> t_{n+1}.
AbmWeights abm_weights(std::size_t step_index, double alpha, double step_size);

struct SolverConfig {
  double alpha = 1.0;
  double step_size = 0.005;
  double t_end = 100.0;
  int corrector_iterations = 1;
  // Relative to max(1, |y0|_inf). Infinity disables the check.
  double positivity_tolerance = 1e-9;

  // Fault-injection hook: mutates the kernels before integration starts.
  std::function<void(AbmKernel&)> kernel_hook;

  /// Throws std::invalid_argument if an invariant is broken.
  void validate() const;

  /// floor(t_end / h), guarded against representation error in the ratio.
  std::size_t step_count() const;
};

template <std::size_t Dim>
struct Trajectory {
  double step_size = 0.0;
  std::vector<double> times;
  std::vector<Vec<Dim>> states;

  std::size_t size() const { return times.size(); }
  const Vec<Dim>& back() const { return states.back(); }
};

/// Raised when the integrator produces a NaN or infinity.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(std::size_t step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Raised when a state component drops below -tolerance.
class PositivityViolation : public IntegrationError {
 public:
  PositivityViolation(std::size_t step, std::size_t component, double value,
                      const std::string& what)
      : IntegrationError(step, what), component_(component), value_(value) {}
  std::size_t component() const { return component_; }
  double value() const { return value_; }

 private:
  std::size_t component_;
  double value_;
};

namespace detail {
std::string describe_nonfinite(std::size_t step, double t);
std::string describe_negative(std::size_t step, double t, std::size_t component, double value,
                              double threshold);
void require_nonnegative_start(const double* y0, std::size_t dim);
}  // namespace detail

template <std::size_t Dim>
Trajectory<Dim> integrate(const VectorField<Dim>& rhs, const Vec<Dim>& y0,
                          const SolverConfig& config) {
  config.validate();
  detail::require_nonnegative_start(y0.data(), Dim);

  const std::size_t steps = config.step_count();
  const double h = config.step_size;

  AbmKernel kernel = AbmKernel::build(config.alpha, h, steps);
  if (config.kernel_hook) {
    config.kernel_hook(kernel);
  }
  const double inv_gamma = 1.0 / std::tgamma(config.alpha);
  const double pred_scale = kernel.predictor_scale * inv_gamma;
  const double corr_scale = kernel.corrector_scale * inv_gamma;

  double scale = 1.0;
  for (double v : y0) {
    scale = std::max(scale, std::abs(v));
  }
  const double floor_value = -config.positivity_tolerance * scale;

  Trajectory<Dim> out;
  out.step_size = h;
  out.times.resize(steps + 1);
  out.states.resize(steps + 1);
  std::vector<Vec<Dim>> history(steps + 1);

  out.times[0] = 0.0;
  out.states[0] = y0;
  history[0] = rhs(0.0, y0);

  auto check_finite = [&](std::size_t step, double t, const Vec<Dim>& v) {
    for (std::size_t i = 0; i < Dim; ++i) {
      if (!std::isfinite(v[i])) {
        throw IntegrationError(step, detail::describe_nonfinite(step, t));
      }
    }
  };
  auto check = [&](std::size_t step, double t, const Vec<Dim>& y) {
    check_finite(step, t, y);
    for (std::size_t i = 0; i < Dim; ++i) {
      if (y[i] < floor_value) {
        throw PositivityViolation(step, i, y[i],
                                  detail::describe_negative(step, t, i, y[i], floor_value));
      }
    }
  };
  check_finite(0, 0.0, history[0]);

  auto store = [&](std::size_t n, double t, const Vec<Dim>& y) {
    check(n, t, y);
    out.times[n] = t;
    out.states[n] = y;
    history[n] = rhs(t, y);
    check_finite(n, t, history[n]);
  };

  if (config.alpha == 1.0) {
    // Order one has no memory: every step is the first step of the scheme
    // restarted from y_n (explicit Euler predictor, trapezoidal corrector).
    const double wp = pred_scale * kernel.predictor[0];
    const double wc_old = corr_scale * kernel.start[0];
    const double wc_new = corr_scale;
    for (std::size_t n = 0; n < steps; ++n) {
      const double t_next = static_cast<double>(n + 1) * h;
      const Vec<Dim>& yn = out.states[n];
      const Vec<Dim>& fn = history[n];
      Vec<Dim> y;
      for (std::size_t i = 0; i < Dim; ++i) {
        y[i] = yn[i] + wp * fn[i];
      }
      for (int it = 0; it < config.corrector_iterations; ++it) {
        const Vec<Dim> f = rhs(t_next, y);
        for (std::size_t i = 0; i < Dim; ++i) {
          y[i] = yn[i] + wc_old * fn[i] + wc_new * f[i];
        }
      }
      store(n + 1, t_next, y);
    }
    return out;
  }

  for (std::size_t n = 0; n < steps; ++n) {
    Vec<Dim> pred_sum{};
    Vec<Dim> corr_sum{};
    for (std::size_t i = 0; i < Dim; ++i) {
      pred_sum[i] = kernel.predictor[n] * history[0][i];
      corr_sum[i] = kernel.start[n] * history[0][i];
    }
    for (std::size_t j = 1; j <= n; ++j) {
      const double bp = kernel.predictor[n - j];
      const double bc = kernel.corrector[n - j];
      const Vec<Dim>& f = history[j];
      for (std::size_t i = 0; i < Dim; ++i) {
        pred_sum[i] += bp * f[i];
        corr_sum[i] += bc * f[i];
      }
    }

    const double t_next = static_cast<double>(n + 1) * h;
    Vec<Dim> y;
    for (std::size_t i = 0; i < Dim; ++i) {
      y[i] = y0[i] + pred_scale * pred_sum[i];
    }
    for (int it = 0; it < config.corrector_iterations; ++it) {
      const Vec<Dim> f = rhs(t_next, y);
      for (std::size_t i = 0; i < Dim; ++i) {
        y[i] = y0[i] + corr_scale * (corr_sum[i] + f[i]);
      }
    }
    store(n + 1, t_next, y);
  }
  return out;
}

}  // namespace fovir
