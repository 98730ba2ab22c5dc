#pragma once

// Batch engines: R0 surfaces over two parameters and trajectory suites over
// proliferation laws and fractional orders. Grid cells and suite runs are
// independent and evaluated concurrently into pre-sized slots.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fovir/model.hpp"
#include "fovir/solver.hpp"

namespace fovir {

enum class Spacing { Linear, Log };

struct Axis {
  Param param = Param::Beta;
  std::vector<double> values;

  /// Throws std::invalid_argument for names outside {beta, mu, c, N, lambda},
  /// non-positive bounds or count < 2.
  static Axis make(std::string_view name, double lo, double hi, std::size_t count,
                   Spacing spacing = Spacing::Linear);

  /// Parses "<name>:<lo>:<hi>:<count>[:log]".
  static Axis parse(std::string_view spec);

  std::string_view name() const { return param_name(param); }
};

/// Default ranges used for the standard R0 surfaces.
Axis default_axis(Param param, std::size_t count = 100);

struct SweepGrid {
  Axis x;
  Axis y;
  // values[iy * x.values.size() + ix]
  std::vector<double> values;

  double at(std::size_t ix, std::size_t iy) const { return values[iy * x.values.size() + ix]; }
  std::size_t rows() const { return y.values.size(); }
  std::size_t cols() const { return x.values.size(); }
};

/// R0 on the Cartesian grid of two parameters with the order fixed at 1.
SweepGrid r0_surface(const ModelParams& base, const Axis& x, const Axis& y);

/// The parameters a surface cell is evaluated with.
ModelParams surface_cell_params(const ModelParams& base, const Axis& x, const Axis& y,
                                std::size_t ix, std::size_t iy);

struct SuiteRun {
  ProliferationKind kind = ProliferationKind::F1;
  double alpha = 1.0;
  Trajectory<4> trajectory;
};

struct TrajectorySuite {
  ModelParams params;
  State initial;
  double step_size = 0.0;
  double t_end = 0.0;
  std::vector<SuiteRun> runs;

  const SuiteRun& find(ProliferationKind kind, double alpha) const;
};

class SuiteError : public std::runtime_error {
 public:
  SuiteError(ProliferationKind kind, double alpha, const std::string& what)
      : std::runtime_error(what), kind_(kind), alpha_(alpha) {}
  ProliferationKind kind() const { return kind_; }
  double alpha() const { return alpha_; }

 private:
  ProliferationKind kind_;
  double alpha_;
};

/// One integration per (kind, alpha), kinds outermost. The order in `config`
/// and `params` is overridden per run.
TrajectorySuite trajectory_suite(const ModelParams& params, const std::vector<double>& alphas,
                                 const std::vector<ProliferationKind>& kinds, const State& y0,
                                 const SolverConfig& config);

/// Integrates a single (kind, alpha) run.
Trajectory<4> simulate(ModelParams params, ProliferationKind kind, double alpha, const State& y0,
                       SolverConfig config);

}  // namespace fovir
