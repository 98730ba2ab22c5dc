#include "fovir/mittag_leffler.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace fovir {

namespace {

constexpr int kMaxTerms = 200000;
constexpr long double kTermTolerance = 1e-15L;
// Cancellation ratio (largest term / result) beyond which the extended
// precision series no longer carries ~13 digits.
constexpr long double kMaxCancellation = 1e6L;

struct SeriesResult {
  long double sum = 0.0L;
  long double max_term = 0.0L;
};

void check_domain(double alpha, double z) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw std::invalid_argument("mittag_leffler: alpha must lie in (0, 2]");
  }
  if (!std::isfinite(z) || std::abs(z) > 50.0) {
    throw std::invalid_argument("mittag_leffler: |z| must not exceed 50");
  }
}

SeriesResult sum_series(double alpha, double z) {
  SeriesResult r;
  if (z == 0.0) {
    r.sum = 1.0L;
    r.max_term = 1.0L;
    return r;
  }
  const long double log_abs_z = std::log(std::abs(static_cast<long double>(z)));
  const bool alternating = z < 0.0;
  long double previous = std::numeric_limits<long double>::infinity();
  for (int k = 0; k < kMaxTerms; ++k) {
    const long double kl = static_cast<long double>(k);
    const long double log_term = kl * log_abs_z - std::lgamma(static_cast<long double>(alpha) * kl + 1.0L);
    const long double magnitude = std::exp(log_term);
    if (!std::isfinite(magnitude)) {
      throw EvaluationError("mittag_leffler: series terms overflow");
    }
    r.sum += (alternating && (k % 2 == 1)) ? -magnitude : magnitude;
    r.max_term = std::max(r.max_term, magnitude);
    // Terms are log-concave in k, so once they shrink they keep shrinking.
    if (k > 0 && magnitude < previous && magnitude <= kTermTolerance * std::abs(r.sum)) {
      return r;
    }
    previous = magnitude;
  }
  std::ostringstream os;
  os << "mittag_leffler: series did not converge within " << kMaxTerms
     << " terms (alpha = " << alpha << ", z = " << z << ")";
  throw EvaluationError(os.str());
}

// E_alpha(-x), 0 < alpha < 1, x > 0, from the spectral density of the
// relaxation kernel.
double laplace_route(double alpha, double x) {
  constexpr double pi = boost::math::constants::pi<double>();
  const double t = std::pow(x, 1.0 / alpha);
  const double s = std::sin(alpha * pi);
  const double cs = std::cos(alpha * pi);
  auto integrand = [=](double r) {
    if (r <= 0.0) return 0.0;
    const double ra = std::pow(r, alpha);
    const double density = s * std::pow(r, alpha - 1.0) / (pi * (ra * ra + 2.0 * ra * cs + 1.0));
    return std::exp(-r * t) * density;
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  double error = 0.0;
  const double value = integrator.integrate(integrand, 0.0, std::numeric_limits<double>::infinity(),
                                            1e-13, &error);
  if (!std::isfinite(value)) {
    throw EvaluationError("mittag_leffler: quadrature failed");
  }
  return value;
}

}  // namespace

double mittag_leffler_series(double alpha, double z) {
  check_domain(alpha, z);
  return static_cast<double>(sum_series(alpha, z).sum);
}

double mittag_leffler(double alpha, double z) {
  check_domain(alpha, z);
  if (z >= 0.0 || alpha > 1.0) {
    const SeriesResult r = sum_series(alpha, z);
    if (z >= 0.0 || r.max_term <= kMaxCancellation * std::abs(r.sum)) {
      return static_cast<double>(r.sum);
    }
    std::ostringstream os;
    os << "mittag_leffler: series loses precision for alpha = " << alpha << ", z = " << z;
    throw EvaluationError(os.str());
  }
  try {
    const SeriesResult r = sum_series(alpha, z);
    if (r.max_term <= kMaxCancellation * std::abs(r.sum)) {
      return static_cast<double>(r.sum);
    }
  } catch (const EvaluationError&) {
    // overflowing terms: fall through to the cancellation-free routes
  }
  return alpha == 1.0 ? std::exp(z) : laplace_route(alpha, -z);
}

}  // namespace fovir
