#include "fovir/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fovir {

namespace {

struct Powers {
  double lambda, beta, mu, k, delta, c, q, sigma, N;

  explicit Powers(const ModelParams& p)
      : lambda(std::pow(p.lambda, p.alpha)),
        beta(std::pow(p.beta, p.alpha)),
        mu(std::pow(p.mu, p.alpha)),
        k(std::pow(p.k, p.alpha)),
        delta(std::pow(p.delta, p.alpha)),
        c(std::pow(p.c, p.alpha)),
        q(std::pow(p.q, p.alpha)),
        sigma(std::pow(p.sigma, p.alpha)),
        N(p.N) {
    p.validate();
  }
};

}  // namespace

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::DiseaseFreeOnly:
      return "DiseaseFreeOnly";
    case Regime::CtlFreeExists:
      return "CtlFreeExists";
    case Regime::Coexistence:
      return "Coexistence";
  }
  return "?";
}

double r0(const ModelParams& params) {
  const Powers w(params);
  return w.beta * w.lambda * w.N / (w.mu * w.c);
}

double phi0(const ModelParams& params) {
  const Powers w(params);
  return 1.0 + w.sigma * w.N * w.beta * w.delta / (w.q * w.c * w.mu);
}

State disease_free_equilibrium(const ModelParams& params) {
  const Powers w(params);
  return {w.lambda / w.mu, 0.0, 0.0, 0.0};
}

std::optional<State> ctl_free_equilibrium(const ModelParams& params) {
  if (!(r0(params) > 1.0)) return std::nullopt;
  const Powers w(params);
  const double excess = w.N * w.beta * w.lambda - w.c * w.mu;
  if (!(excess > 0.0)) return std::nullopt;
  return State{w.c / (w.N * w.beta), excess / (w.N * w.beta * w.delta), excess / (w.beta * w.c),
               0.0};
}

std::optional<State> endemic_equilibrium(const ModelParams& params) {
  if (!(r0(params) > phi0(params))) return std::nullopt;
  const Powers w(params);
  const double denom = w.sigma * w.N * w.beta * w.delta + w.c * w.mu * w.q;
  const double bracket =
      w.q * (w.N * w.beta * w.lambda - w.c * w.mu) - w.sigma * w.N * w.beta * w.delta;
  if (!(bracket > 0.0)) return std::nullopt;
  const double B = w.delta / (denom * w.k);
  return State{w.lambda * w.c * w.q / denom, w.sigma / w.q, w.N * w.delta * w.sigma / (w.q * w.c),
               B * bracket};
}

Regime classify_regime(const ModelParams& params) {
  const double r = r0(params);
  if (!(r > 1.0)) return Regime::DiseaseFreeOnly;
  if (!(r > phi0(params))) return Regime::CtlFreeExists;
  return Regime::Coexistence;
}

EquilibriumResult ctl_free_equilibrium(const ModelParams& params, ProliferationKind kind) {
  if (kind != ProliferationKind::F1) return {EquilibriumStatus::NotDerived, std::nullopt};
  auto x = ctl_free_equilibrium(params);
  return {x ? EquilibriumStatus::Present : EquilibriumStatus::Absent, x};
}

EquilibriumResult endemic_equilibrium(const ModelParams& params, ProliferationKind kind) {
  if (kind != ProliferationKind::F1) return {EquilibriumStatus::NotDerived, std::nullopt};
  auto x = endemic_equilibrium(params);
  return {x ? EquilibriumStatus::Present : EquilibriumStatus::Absent, x};
}

EquilibriumReport equilibrium_report(const ModelParams& params) {
  EquilibriumReport report;
  report.x0 = disease_free_equilibrium(params);
  report.x1 = ctl_free_equilibrium(params);
  report.x2 = endemic_equilibrium(params);
  report.r0 = r0(params);
  report.phi0 = phi0(params);
  report.regime = classify_regime(params);
  return report;
}

double equilibrium_residual(const State& x, const ModelParams& params) {
  const Vec4 f = rhs(x, params, ProliferationKind::F1);
  double m = 0.0;
  for (double v : f) m = std::max(m, std::abs(v));
  return m;
}

SensitivityReport sensitivity_indices(const ModelParams& params) {
  params.validate();
  const double a = params.alpha;
  SensitivityReport report;
  report.indices = {{Param::Beta, a}, {Param::Lambda, a}, {Param::N, 1.0},
                    {Param::Mu, -a},  {Param::C, -a}};
  return report;
}

double sensitivity_finite_difference(const ModelParams& params, Param p, double relative_step) {
  const double base = get_param(params, p);
  const double dp = relative_step * base;
  ModelParams up = params;
  ModelParams down = params;
  set_param(up, p, base + dp);
  set_param(down, p, base - dp);
  const double derivative = (r0(up) - r0(down)) / (2.0 * dp);
  return derivative * base / r0(params);
}

}  // namespace fovir
