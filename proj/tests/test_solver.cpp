#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "fovir/mittag_leffler.hpp"
#include "fovir/solver.hpp"
#include "oracles.hpp"

using namespace fovir;

namespace {

const VectorField<1> kRelaxation = [](double, const Vec<1>& y) { return Vec<1>{-y[0]}; };

SolverConfig make_config(double alpha, double h, double t_end) {
  SolverConfig cfg;
  cfg.alpha = alpha;
  cfg.step_size = h;
  cfg.t_end = t_end;
  return cfg;
}

double ml_error(double alpha, double h) {
  const auto tr = integrate<1>(kRelaxation, Vec<1>{1.0}, make_config(alpha, h, 1.0));
  double err = 0.0;
  for (std::size_t n = 0; n < tr.size(); ++n) {
    err = std::max(err, std::abs(tr.states[n][0] -
                                 mittag_leffler(alpha, -std::pow(tr.times[n], alpha))));
  }
  return err;
}

}  // namespace

TEST_CASE("abm_weights: order one gives rectangle and trapezoid rules") {
  const double h = 0.1;
  const auto w = abm_weights(5, 1.0, h);
  REQUIRE(w.predictor.size() == 6);
  REQUIRE(w.corrector.size() == 7);
  for (double b : w.predictor) CHECK(b == doctest::Approx(h).epsilon(1e-14));
  CHECK(w.corrector.front() == doctest::Approx(h / 2).epsilon(1e-14));
  CHECK(w.corrector.back() == doctest::Approx(h / 2).epsilon(1e-14));
  for (std::size_t j = 1; j + 1 < w.corrector.size(); ++j) {
    CHECK(w.corrector[j] == doctest::Approx(h).epsilon(1e-14));
  }
}

TEST_CASE("abm_weights: newest predictor weight and telescoping sum") {
  for (double alpha : {0.3, 0.5, 0.92, 1.0}) {
    for (std::size_t n : {0u, 1u, 7u, 40u}) {
      const double h = 0.05;
      const auto w = abm_weights(n, alpha, h);
      const double ha = std::pow(h, alpha);
      CHECK(w.predictor[n] == doctest::Approx(ha / alpha).epsilon(1e-13));
      const double sum = std::accumulate(w.predictor.begin(), w.predictor.end(), 0.0);
      CHECK(sum == doctest::Approx(ha / alpha * std::pow(n + 1.0, alpha)).epsilon(1e-12));
      // Product trapezoid integrates constants exactly as well.
      const double csum = std::accumulate(w.corrector.begin(), w.corrector.end(), 0.0);
      CHECK(csum == doctest::Approx(ha / alpha * std::pow(n + 1.0, alpha)).epsilon(1e-12));
      for (double b : w.predictor) CHECK(b > 0.0);
      for (double a : w.corrector) CHECK(a > 0.0);
    }
  }
}

TEST_CASE("abm_weights agree with direct quadrature of the Volterra kernel") {
  const double h = 0.2;
  for (double alpha : {0.4, 0.75, 0.96}) {
    const std::size_t n = 6;
    const double t = (n + 1) * h;
    const auto w = abm_weights(n, alpha, h);
    for (std::size_t j = 0; j <= n; ++j) {
      const double lo = j * h;
      const double b = oracle::weighted_integral(t, alpha, lo, lo + h, [](double) { return 1.0; });
      CHECK(w.predictor[j] == doctest::Approx(b).epsilon(1e-10));
    }
    for (std::size_t j = 0; j <= n + 1; ++j) {
      const double tj = j * h;
      double a = 0.0;
      if (j > 0) {
        a += oracle::weighted_integral(t, alpha, tj - h, tj, [&](double s) { return (s - (tj - h)) / h; });
      }
      if (j <= n) {
        a += oracle::weighted_integral(t, alpha, tj, tj + h, [&](double s) { return (tj + h - s) / h; });
      }
      CHECK(w.corrector[j] == doctest::Approx(a).epsilon(1e-10));
    }
  }
}

TEST_CASE("abm_weights rejects invalid orders") {
  CHECK_THROWS_AS(abm_weights(3, 0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(abm_weights(3, 1.2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(abm_weights(3, 0.5, -0.1), std::invalid_argument);
}

TEST_CASE("integrate: order one relaxation matches exp(-t)") {
  const auto tr = integrate<1>(kRelaxation, Vec<1>{1.0}, make_config(1.0, 1e-3, 1.0));
  CHECK(tr.times.back() == doctest::Approx(1.0));
  CHECK(std::abs(tr.back()[0] - std::exp(-1.0)) <= 1e-6);
}

TEST_CASE("integrate: error against Mittag-Leffler decreases as h halves") {
  for (double alpha : {0.5, 0.92, 0.96, 1.0}) {
    CAPTURE(alpha);
    double previous = std::numeric_limits<double>::infinity();
    for (double h : {0.02, 0.01, 0.005, 0.0025}) {
      const double err = ml_error(alpha, h);
      CHECK(err < previous);
      previous = err;
    }
  }
}

TEST_CASE("integrate: zero field keeps the initial state") {
  const VectorField<4> zero = [](double, const Vec<4>&) { return Vec<4>{}; };
  const Vec<4> y0{1000.0, 0.0, 10.0, 333.0};
  for (double alpha : {0.7, 1.0}) {
    const auto tr = integrate<4>(zero, y0, make_config(alpha, 0.1, 5.0));
    for (const auto& s : tr.states) CHECK(s == y0);
  }
}

TEST_CASE("integrate: grid contract") {
  for (auto [h, t_end] : std::vector<std::pair<double, double>>{{0.5, 1.0}, {0.01, 1.0},
                                                                {0.3, 1.0}, {0.005, 2.5}}) {
    const auto tr = integrate<1>(kRelaxation, Vec<1>{1.0}, make_config(0.8, h, t_end));
    CHECK(tr.size() == static_cast<std::size_t>(std::floor(t_end / h + 1e-9)) + 1);
    CHECK(tr.states.size() == tr.times.size());
    CHECK(tr.states.front()[0] == 1.0);
    CHECK(tr.times.front() == 0.0);
    for (std::size_t n = 1; n < tr.size(); ++n) {
      CHECK(tr.times[n] > tr.times[n - 1]);
      CHECK(tr.times[n] == doctest::Approx(n * h).epsilon(1e-15));
    }
  }
}

TEST_CASE("integrate: deterministic across calls") {
  const VectorField<2> f = [](double t, const Vec<2>& y) {
    return Vec<2>{-y[0] * y[1] + std::sin(t) + 1.0, y[0] - 0.5 * y[1]};
  };
  const auto a = integrate<2>(f, {1.0, 2.0}, make_config(0.9, 0.01, 3.0));
  const auto b = integrate<2>(f, {1.0, 2.0}, make_config(0.9, 0.01, 3.0));
  CHECK(a.states == b.states);
  CHECK(a.times == b.times);
}

TEST_CASE("integrate: more corrector passes approach the implicit trapezoid solution") {
  const double exact = mittag_leffler(0.8, -std::pow(1.0, 0.8));
  SolverConfig one = make_config(0.8, 0.05, 1.0);
  SolverConfig many = one;
  many.corrector_iterations = 8;
  const double e1 = std::abs(integrate<1>(kRelaxation, {1.0}, one).back()[0] - exact);
  const double e8 = std::abs(integrate<1>(kRelaxation, {1.0}, many).back()[0] - exact);
  CHECK(e1 < 1e-2);
  CHECK(e8 < 1e-2);
  CHECK(e1 != e8);
}

TEST_CASE("integrate: non-finite state raises IntegrationError with the step") {
  const VectorField<1> blows = [](double t, const Vec<1>& y) {
    return Vec<1>{t > 0.25 ? std::numeric_limits<double>::quiet_NaN() : y[0]};
  };
  try {
    integrate<1>(blows, {1.0}, make_config(0.9, 0.1, 1.0));
    FAIL("expected IntegrationError");
  } catch (const PositivityViolation&) {
    FAIL("wrong error type");
  } catch (const IntegrationError& e) {
    CHECK(e.step() == 3);
  }
}

TEST_CASE("integrate: undershoot below tolerance aborts, no clamping") {
  const VectorField<1> drain = [](double, const Vec<1>&) { return Vec<1>{-1.0}; };
  try {
    integrate<1>(drain, {0.5}, make_config(1.0, 0.1, 2.0));
    FAIL("expected PositivityViolation");
  } catch (const PositivityViolation& e) {
    CHECK(e.step() == 6);
    CHECK(e.component() == 0);
    CHECK(e.value() < 0.0);
  }
  SolverConfig loose = make_config(1.0, 0.1, 2.0);
  loose.positivity_tolerance = std::numeric_limits<double>::infinity();
  const auto tr = integrate<1>(drain, {0.5}, loose);
  CHECK(tr.back()[0] == doctest::Approx(-1.5));
}

TEST_CASE("integrate: tolerance scales with the initial condition") {
  // One trapezoid step lands on -2.5e-8: inside the floor for |y0| = 1000
  // (-1e-6), outside it for |y0| = 1 (-1e-9).
  const VectorField<2> dip = [](double t, const Vec<2>&) {
    return Vec<2>{t < 0.25 ? -1e-7 : 0.0, 0.0};
  };
  SolverConfig cfg = make_config(1.0, 0.5, 1.0);
  const auto tr = integrate<2>(dip, {0.0, 1000.0}, cfg);
  CHECK(tr.states[1][0] == doctest::Approx(-2.5e-8));
  CHECK_THROWS_AS(integrate<2>(dip, {0.0, 1.0}, cfg), PositivityViolation);
}

TEST_CASE("integrate: configuration and initial condition are validated") {
  CHECK_THROWS_AS(integrate<1>(kRelaxation, {1.0}, make_config(0.0, 0.1, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(integrate<1>(kRelaxation, {1.0}, make_config(1.5, 0.1, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(integrate<1>(kRelaxation, {1.0}, make_config(0.5, 0.0, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(integrate<1>(kRelaxation, {1.0}, make_config(0.5, 0.2, 0.1)), std::invalid_argument);
  SolverConfig cfg = make_config(0.5, 0.1, 1.0);
  cfg.corrector_iterations = 0;
  CHECK_THROWS_AS(integrate<1>(kRelaxation, {1.0}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(integrate<1>(kRelaxation, {-1.0}, make_config(0.5, 0.1, 1.0)), std::invalid_argument);
}

TEST_CASE("integrate: kernel hook perturbs the scheme") {
  SolverConfig cfg = make_config(0.9, 0.01, 1.0);
  const double clean = integrate<1>(kRelaxation, {1.0}, cfg).back()[0];
  cfg.kernel_hook = [](AbmKernel& k) {
    for (double& w : k.corrector) w *= 1.01;
  };
  const double dirty = integrate<1>(kRelaxation, {1.0}, cfg).back()[0];
  CHECK(std::abs(clean - dirty) > 1e-4);
}
