#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fovir/analysis.hpp"
#include "oracles.hpp"

using namespace fovir;

namespace {

ModelParams with_n(double n) {
  ModelParams p;
  p.N = n;
  return p;
}

double scaled_residual(const State& x, const ModelParams& p) {
  double scale = 1.0;
  for (double v : x.to_vec()) scale = std::max(scale, std::abs(v));
  return equilibrium_residual(x, p) / scale;
}

}  // namespace

TEST_CASE("thresholds at the baseline") {
  CHECK(std::abs(r0(ModelParams{}) - 100.0 / 3.0) <= 1e-12);
  CHECK(std::abs(r0(with_n(3.0)) - 1.0) <= 1e-12);
  CHECK(std::abs(phi0(ModelParams{}) - 7.0 / 3.0) <= 1e-12);
  CHECK(phi0(with_n(10.0)) == doctest::Approx(1.0 + 0.0008 / 0.006).epsilon(1e-14));
  CHECK(r0(ModelParams{}) == doctest::Approx(oracle::r0_formula(ModelParams{})).epsilon(1e-15));
  ModelParams tiny;
  tiny.beta = 1e-300;
  CHECK(r0(tiny) < 1e-290);
}

TEST_CASE("equilibria at the baseline") {
  const ModelParams p;
  CHECK(disease_free_equilibrium(p) == State{1000.0, 0.0, 0.0, 0.0});
  ModelParams same = p;
  same.lambda = same.mu;
  CHECK(disease_free_equilibrium(same).T == doctest::Approx(1.0));

  const auto x1 = ctl_free_equilibrium(p);
  REQUIRE(x1);
  CHECK(x1->T == doctest::Approx(30.0).epsilon(1e-13));
  CHECK(x1->I == doctest::Approx(9.7).epsilon(1e-13));
  CHECK(x1->V == doctest::Approx(970.0 / 3.0).epsilon(1e-13));
  CHECK(x1->C == 0.0);

  const auto x2 = endemic_equilibrium(p);
  REQUIRE(x2);
  CHECK(x2->T == doctest::Approx(6.0 / 0.014).epsilon(1e-13));
  CHECK(x2->I == doctest::Approx(0.4).epsilon(1e-13));
  CHECK(x2->V == doctest::Approx(40.0 / 3.0).epsilon(1e-13));
  CHECK(x2->C == doctest::Approx(0.186 / 0.0098).epsilon(1e-12));

  for (const State& x : {disease_free_equilibrium(p), *x1, *x2}) {
    CHECK(scaled_residual(x, p) <= 1e-10);
  }
}

TEST_CASE("I2 depends only on sigma and q") {
  ModelParams p;
  const double base = endemic_equilibrium(p)->I;
  p.N = 500.0;
  p.beta = 0.004;
  p.lambda = 30.0;
  REQUIRE(endemic_equilibrium(p));
  CHECK(endemic_equilibrium(p)->I == doctest::Approx(base).epsilon(1e-14));
}

TEST_CASE("regimes and boundaries") {
  CHECK(classify_regime(ModelParams{}) == Regime::Coexistence);
  // r0 = N/3 and phi0 = 1 + N/75 cross at N = 3.125, so the CTL-free-only
  // band is 3 < N <= 3.125; N = 4 is already coexistence.
  CHECK(classify_regime(with_n(3.1)) == Regime::CtlFreeExists);
  CHECK(phi0(with_n(4.0)) == doctest::Approx(1.0 + 0.00032 / 0.006).epsilon(1e-14));
  CHECK(r0(with_n(4.0)) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(classify_regime(with_n(4.0)) == Regime::Coexistence);
  // 0.001 * 10 * 3 == 0.01 * 3 is not exact in binary, but the tie must still
  // fall to the lower regime.
  CHECK(classify_regime(with_n(3.0)) == Regime::DiseaseFreeOnly);
  CHECK_FALSE(ctl_free_equilibrium(with_n(3.0)));
  CHECK_FALSE(endemic_equilibrium(with_n(3.0)));
  CHECK_FALSE(endemic_equilibrium(with_n(3.1)));
  CHECK(ctl_free_equilibrium(with_n(3.1)));

  const auto r = equilibrium_report(with_n(3.0));
  CHECK_FALSE(r.x1);
  CHECK_FALSE(r.x2);
  CHECK(r.regime == Regime::DiseaseFreeOnly);
  CHECK(regime_name(Regime::Coexistence) != regime_name(Regime::CtlFreeExists));
}

TEST_CASE("r0 = phi0 is not coexistence") {
  // Solve for the N that puts r0 exactly on phi0 at alpha = 1:
  // r0 = K N and phi0 = 1 + A N with K = beta lambda/(mu c) and A = sigma beta delta/(q c mu).
  ModelParams p;
  const double K = p.beta * p.lambda / (p.mu * p.c);
  const double A = p.sigma * p.beta * p.delta / (p.q * p.c * p.mu);
  p.N = 1.0 / (K - A);
  const bool tied = r0(p) == phi0(p);
  if (tied) {
    CHECK(classify_regime(p) == Regime::CtlFreeExists);
    CHECK_FALSE(endemic_equilibrium(p));
  }
  p.N *= 1.0 + 1e-9;
  CHECK(classify_regime(p) == Regime::Coexistence);
  p.N /= (1.0 + 1e-9) * (1.0 + 1e-9);
  CHECK(classify_regime(p) == Regime::CtlFreeExists);
}

TEST_CASE("closed forms are not claimed for other laws") {
  const ModelParams p;
  CHECK(ctl_free_equilibrium(p, ProliferationKind::F1).status == EquilibriumStatus::Present);
  CHECK(endemic_equilibrium(with_n(3.1), ProliferationKind::F1).status == EquilibriumStatus::Absent);
  for (auto kind : {ProliferationKind::F2, ProliferationKind::F3, ProliferationKind::F4}) {
    CHECK(ctl_free_equilibrium(p, kind).status == EquilibriumStatus::NotDerived);
    CHECK_FALSE(endemic_equilibrium(p, kind).state);
  }
}

TEST_CASE("random parameters: residuals, positivity and regime consistency") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = oracle::random_params(rng);
    const auto r = equilibrium_report(p);
    CHECK(r.phi0 > 1.0);
    CHECK(scaled_residual(r.x0, p) <= 1e-10);
    CHECK(bool(r.x1) == (r.r0 > 1.0));
    CHECK(bool(r.x2) == (r.r0 > r.phi0));
    for (const auto& x : {r.x1, r.x2}) {
      if (!x) continue;
      CHECK(scaled_residual(*x, p) <= 1e-10);
      for (double v : x->to_vec()) CHECK(v >= 0.0);
    }
    if (r.x2) CHECK(r.regime == Regime::Coexistence);
    else if (r.x1) CHECK(r.regime == Regime::CtlFreeExists);
    else CHECK(r.regime == Regime::DiseaseFreeOnly);
  }
}

TEST_CASE("sensitivity indices") {
  const auto one = sensitivity_indices(ModelParams{});
  CHECK(one.indices.at(Param::Beta) == 1.0);
  CHECK(one.indices.at(Param::Lambda) == 1.0);
  CHECK(one.indices.at(Param::N) == 1.0);
  CHECK(one.indices.at(Param::Mu) == -1.0);
  CHECK(one.indices.at(Param::C) == -1.0);
  CHECK(one.indices.size() == 5);

  ModelParams p;
  p.alpha = 0.92;
  const auto frac = sensitivity_indices(p);
  CHECK(frac.indices.at(Param::N) == 1.0);
  CHECK(frac.indices.at(Param::Beta) == doctest::Approx(0.92).epsilon(1e-15));
  CHECK(frac.indices.at(Param::C) == doctest::Approx(-0.92).epsilon(1e-15));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams q = oracle::random_params(rng);
    const auto s = sensitivity_indices(q);
    for (Param id : kSensitivityParams) {
      const double closed = s.indices.at(id);
      CHECK(std::abs(oracle::elasticity_fd(q, id) - closed) <= 1e-6 * std::abs(closed));
      CHECK(std::abs(sensitivity_finite_difference(q, id) - closed) <= 1e-6 * std::abs(closed));
    }
    CHECK(s.indices.at(Param::Beta) > 0.0);
    CHECK(s.indices.at(Param::Lambda) > 0.0);
    CHECK(s.indices.at(Param::N) > 0.0);
    CHECK(s.indices.at(Param::Mu) < 0.0);
    CHECK(s.indices.at(Param::C) < 0.0);
  }
}
