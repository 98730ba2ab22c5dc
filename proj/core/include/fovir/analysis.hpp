#pragma once

// Closed-form steady states, thresholds and sensitivity indices of the model
// with mass-action CTL proliferation (f1). None of these are derived for the
// saturating or linear laws.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "fovir/model.hpp"

namespace fovir {

enum class Regime { DiseaseFreeOnly, CtlFreeExists, Coexistence };

std::string_view regime_name(Regime regime);

/// R0 = beta^a lambda^a N / (mu^a c^a).
double r0(const ModelParams& params);

/// phi0 = 1 + sigma^a N beta^a delta^a / (q^a c^a mu^a); always > 1.
double phi0(const ModelParams& params);

/// X0 = (lambda^a / mu^a, 0, 0, 0).
State disease_free_equilibrium(const ModelParams& params);

/// X1 with C = 0; present iff R0 > 1.
std::optional<State> ctl_free_equilibrium(const ModelParams& params);

/// X2 with all compartments positive; present iff R0 > phi0.
std::optional<State> endemic_equilibrium(const ModelParams& params);

/// Ties at R0 = 1 and R0 = phi0 go to the lower regime.
Regime classify_regime(const ModelParams& params);

enum class EquilibriumStatus { Present, Absent, NotDerived };

struct EquilibriumResult {
  EquilibriumStatus status = EquilibriumStatus::NotDerived;
  std::optional<State> state;
};

/// Kind-aware variants: F2-F4 yield NotDerived instead of f1 algebra.
EquilibriumResult ctl_free_equilibrium(const ModelParams& params, ProliferationKind kind);
EquilibriumResult endemic_equilibrium(const ModelParams& params, ProliferationKind kind);

struct EquilibriumReport {
  State x0;
  std::optional<State> x1;
  std::optional<State> x2;
  double r0 = 0.0;
  double phi0 = 0.0;
  Regime regime = Regime::DiseaseFreeOnly;
};

EquilibriumReport equilibrium_report(const ModelParams& params);

/// |rhs(x, f1)|_inf.
double equilibrium_residual(const State& x, const ModelParams& params);

/// Parameters with respect to which R0 elasticities are reported.
inline constexpr std::array<Param, 5> kSensitivityParams{Param::Beta, Param::Lambda, Param::N,
                                                         Param::Mu, Param::C};

struct SensitivityReport {
  std::map<Param, double> indices;
};

/// Closed-form elasticities (dR0/dp)(p/R0) in the base parameters:
/// +alpha for beta and lambda, +1 for N, -alpha for mu and c.
SensitivityReport sensitivity_indices(const ModelParams& params);

/// Central-difference estimate of the same elasticity with relative step
/// `relative_step`.
double sensitivity_finite_difference(const ModelParams& params, Param p,
                                     double relative_step = 1e-5);

}  // namespace fovir
