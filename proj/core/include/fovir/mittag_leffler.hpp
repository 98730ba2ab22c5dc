#pragma once

#include <stdexcept>

namespace fovir {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One-parameter Mittag-Leffler function E_alpha(z) = sum_k z^k / Gamma(alpha k + 1)
/// for 0 < alpha <= 2 and real |z| <= 50.
///
/// The power series is summed in extended precision until a term drops
/// below 1e-15 of the running sum. For negative z the alternating series
/// cancels catastrophically once |z| grows; when the cancellation would cost
/// more than ~1e-13 relative accuracy and 0 < alpha < 1, the value is taken
/// from the completely monotone Laplace representation
///   E_alpha(-t^alpha) = int_0^inf exp(-r t) K_alpha(r) dr
/// instead, and alpha = 1 falls back to exp(z). Throws EvaluationError when
/// neither route is accurate (alpha > 1 with strongly negative z) or the
/// series does not terminate.
double mittag_leffler(double alpha, double z);

/// The power series alone, without any fallback.
double mittag_leffler_series(double alpha, double z);

}  // namespace fovir
