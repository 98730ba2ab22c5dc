#pragma once

// Within-host SARS-CoV-2 / CTL model with Caputo derivatives of order alpha.
//
//   D^a T = lambda^a - beta^a V T - mu^a T
//   D^a I = beta^a V T - k^a I C - delta^a I
//   D^a V = N delta^a I - c^a V
//   D^a C = f_n(I, C) - sigma^a C
//
// Parameters are stored as base values and raised to alpha on use. The burst
// size N is a count and is never exponentiated; epsilon and a enter the
// saturating proliferation laws unexponentiated.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fovir/solver.hpp"

namespace fovir {

using Vec4 = Vec<4>;

struct ModelParams {
  double lambda = 10.0;   // proliferation rate of healthy cells
  double beta = 0.001;    // infection rate
  double mu = 0.01;       // death rate of healthy cells
  double k = 0.7;         // elimination of infected cells by CTL
  double delta = 1.0;     // death rate of infected cells
  double N = 100.0;       // burst size
  double c = 3.0;         // death rate of virus
  double q = 0.2;         // CTL proliferation rate
  double sigma = 0.08;    // death rate of CTL
  double epsilon = 0.01;  // CTL expansion saturation level
  double a = 120.0;       // half-saturation constant
  double alpha = 1.0;     // fractional order

  /// Throws std::invalid_argument unless all rates are positive and finite
  /// and 0 < alpha <= 1.
  void validate() const;

  bool operator==(const ModelParams&) const = default;
};

/// Names of the individually addressable parameters.
enum class Param { Lambda, Beta, Mu, K, Delta, N, C, Q, Sigma, Epsilon, A, Alpha };

std::optional<Param> parse_param(std::string_view name);
std::string_view param_name(Param p);
double get_param(const ModelParams& params, Param p);
void set_param(ModelParams& params, Param p, double value);
const std::vector<Param>& all_params();

struct State {
  double T = 0.0;
  double I = 0.0;
  double V = 0.0;
  double C = 0.0;

  Vec4 to_vec() const { return {T, I, V, C}; }
  static State from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
  bool operator==(const State&) const = default;
};

/// Initial condition used for all trajectory runs: T=1000, I=0, V=10, C=333.
State default_initial_state();

enum class ProliferationKind { F1, F2, F3, F4 };

std::optional<ProliferationKind> parse_kind(std::string_view name);
std::string_view kind_name(ProliferationKind kind);  // "f1" .. "f4"
const std::vector<ProliferationKind>& all_kinds();

/// f1 = q^a I C, f2 = q^a I, f3 = q^a I C / (eps C + 1), f4 = q^a I / (a + eps I).
double proliferation(ProliferationKind kind, double infected, double ctl,
                     const ModelParams& params);

Vec4 rhs(const State& state, const ModelParams& params, ProliferationKind kind);

/// Derivatives on the four boundary hyperplanes of the non-negative orthant:
/// (dT at T=0, dI at I=0, dV at V=0, dC at C=0).
Vec4 boundary_fluxes(const State& state, const ModelParams& params, ProliferationKind kind);

/// Autonomous vector field for the solver. Powers of alpha are computed once.
VectorField<4> make_vector_field(const ModelParams& params, ProliferationKind kind);

}  // namespace fovir
