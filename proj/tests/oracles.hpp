#pragma once

// Test-only reference computations. Nothing here calls the code paths it is
// used to check.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <random>

#include "fovir/model.hpp"

namespace oracle {

// erf by its Maclaurin series; adequate for |x| <= 3.
inline double erf_series(double x) {
  long double sum = 0.0L;
  long double term = x;  // x^(2k+1) (-1)^k / k!
  for (int k = 0; k < 200; ++k) {
    const long double add = term / (2 * k + 1);
    sum += add;
    if (std::abs(add) < 1e-22L) break;
    term *= -static_cast<long double>(x) * x / (k + 1);
  }
  return static_cast<double>(2.0L * sum / std::sqrt(3.14159265358979323846264338327950288L));
}

// exp(x^2) erfc(x) for x >= 2 by the Laplace continued fraction.
inline double erfcx_continued_fraction(double x) {
  long double f = 0.0L;
  for (int k = 200; k >= 1; --k) {
    f = (k / 2.0L) / (x + f);
  }
  return static_cast<double>(1.0L / (std::sqrt(3.14159265358979323846264338327950288L) * (x + f)));
}

// int_{lo}^{hi} (t - s)^(alpha - 1) * g(s) ds by tanh-sinh, which tolerates the
// endpoint singularity at s = t. Near hi the complement hi - s is used so the
// weight stays finite.
template <typename G>
double weighted_integral(double t, double alpha, double lo, double hi, G g) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(
      [&](double s, double xc) {
        const double gap = (hi == t && xc > 0.0) ? xc : t - s;
        return std::pow(gap, alpha - 1.0) * g(s);
      },
      lo, hi);
}

// Central-difference elasticity of r0, with the r0 formula written out here.
inline double r0_formula(const fovir::ModelParams& p) {
  const double a = p.alpha;
  return std::pow(p.beta, a) * std::pow(p.lambda, a) * p.N / (std::pow(p.mu, a) * std::pow(p.c, a));
}

inline double elasticity_fd(fovir::ModelParams p, fovir::Param id) {
  const double base = fovir::get_param(p, id);
  const double step = 1e-5 * base;
  fovir::ModelParams up = p;
  fovir::ModelParams down = p;
  fovir::set_param(up, id, base + step);
  fovir::set_param(down, id, base - step);
  return (r0_formula(up) - r0_formula(down)) / (2.0 * step) * base / r0_formula(p);
}

// Each rate log-uniform within a factor 10 of the baseline, alpha in [0.5, 1].
inline fovir::ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> decade(-1.0, 1.0);
  std::uniform_real_distribution<double> order(0.5, 1.0);
  fovir::ModelParams p;
  for (fovir::Param id : fovir::all_params()) {
    if (id == fovir::Param::Alpha) continue;
    fovir::set_param(p, id, fovir::get_param(p, id) * std::pow(10.0, decade(rng)));
  }
  p.alpha = order(rng);
  return p;
}

inline fovir::State random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  // Mix exact zeros in so the boundary hyperplanes are exercised.
  auto draw = [&](double scale) { return u(rng) < 0.2 ? 0.0 : scale * u(rng); };
  return {draw(2000.0), draw(50.0), draw(500.0), draw(500.0)};
}

}  // namespace oracle
