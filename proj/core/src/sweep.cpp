#include "fovir/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <thread>

#include "fovir/analysis.hpp"

namespace fovir {

namespace {

// Runs fn(i) for i in [0, count) on up to hardware_concurrency threads.
// The exception of the lowest failing index is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  std::vector<std::exception_ptr> errors(count);
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < count; i += workers) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

bool sweepable(Param p) {
  return p == Param::Beta || p == Param::Mu || p == Param::C || p == Param::N ||
         p == Param::Lambda;
}

double parse_number(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("axis: cannot parse " + std::string(what) + " '" +
                                std::string(text) + "'");
  }
  return value;
}

std::string shortest(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

Axis Axis::make(std::string_view name, double lo, double hi, std::size_t count, Spacing spacing) {
  const auto param = parse_param(name);
  if (!param || !sweepable(*param)) {
    throw std::invalid_argument("axis: unknown parameter '" + std::string(name) +
                                "' (expected beta, mu, c, N or lambda)");
  }
  if (!(lo > 0.0) || !(hi > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("axis: range of '" + std::string(name) + "' must be positive");
  }
  if (count < 2) {
    throw std::invalid_argument("axis: count must be at least 2");
  }
  Axis axis;
  axis.param = *param;
  axis.values.resize(count);
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) / last;
    if (spacing == Spacing::Log) {
      const double la = std::log10(lo);
      const double lb = std::log10(hi);
      axis.values[i] = std::pow(10.0, la + (lb - la) * s);
    } else {
      axis.values[i] = lo + (hi - lo) * s;
    }
  }
  axis.values.front() = lo;
  axis.values.back() = hi;
  return axis;
}

Axis Axis::parse(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = spec.find(':', start);
    parts.push_back(spec.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 4 && parts.size() != 5) {
    throw std::invalid_argument("axis: expected <name>:<lo>:<hi>:<count>[:log], got '" +
                                std::string(spec) + "'");
  }
  Spacing spacing = Spacing::Linear;
  if (parts.size() == 5) {
    if (parts[4] == "log") {
      spacing = Spacing::Log;
    } else if (parts[4] != "lin") {
      throw std::invalid_argument("axis: unknown spacing '" + std::string(parts[4]) + "'");
    }
  }
  const double count = parse_number(parts[3], "count");
  if (count != std::floor(count) || count < 0) {
    throw std::invalid_argument("axis: count must be a whole number");
  }
  return make(parts[0], parse_number(parts[1], "lower bound"), parse_number(parts[2], "upper bound"),
              static_cast<std::size_t>(count), spacing);
}

Axis default_axis(Param param, std::size_t count) {
  switch (param) {
    case Param::Beta:
      return Axis::make("beta", 1e-4, 1.0, count, Spacing::Log);
    case Param::Mu:
      return Axis::make("mu", 1e-3, 1.0, count, Spacing::Log);
    case Param::C:
      return Axis::make("c", 0.1, 10.0, count, Spacing::Log);
    case Param::N:
      return Axis::make("N", 10.0, 2500.0, count, Spacing::Linear);
    case Param::Lambda:
      return Axis::make("lambda", 1.0, 100.0, count, Spacing::Linear);
    default:
      throw std::invalid_argument("axis: parameter is not sweepable");
  }
}

ModelParams surface_cell_params(const ModelParams& base, const Axis& x, const Axis& y,
                                std::size_t ix, std::size_t iy) {
  ModelParams p = base;
  p.alpha = 1.0;
  set_param(p, x.param, x.values.at(ix));
  set_param(p, y.param, y.values.at(iy));
  return p;
}

SweepGrid r0_surface(const ModelParams& base, const Axis& x, const Axis& y) {
  if (x.values.size() < 2 || y.values.size() < 2) {
    throw std::invalid_argument("r0_surface: each axis needs at least 2 values");
  }
  surface_cell_params(base, x, y, 0, 0).validate();
  SweepGrid grid{x, y, std::vector<double>(x.values.size() * y.values.size())};
  const std::size_t cols = x.values.size();
  parallel_for(y.values.size(), [&](std::size_t iy) {
    for (std::size_t ix = 0; ix < cols; ++ix) {
      grid.values[iy * cols + ix] = r0(surface_cell_params(base, x, y, ix, iy));
    }
  });
  return grid;
}

Trajectory<4> simulate(ModelParams params, ProliferationKind kind, double alpha, const State& y0,
                       SolverConfig config) {
  params.alpha = alpha;
  config.alpha = alpha;
  return integrate<4>(make_vector_field(params, kind), y0.to_vec(), config);
}

const SuiteRun& TrajectorySuite::find(ProliferationKind kind, double alpha) const {
  for (const auto& run : runs) {
    if (run.kind == kind && run.alpha == alpha) return run;
  }
  throw std::out_of_range("trajectory suite has no run for the requested kind and order");
}

TrajectorySuite trajectory_suite(const ModelParams& params, const std::vector<double>& alphas,
                                 const std::vector<ProliferationKind>& kinds, const State& y0,
                                 const SolverConfig& config) {
  TrajectorySuite suite;
  suite.params = params;
  suite.initial = y0;
  suite.step_size = config.step_size;
  suite.t_end = config.t_end;
  for (auto kind : kinds) {
    for (double alpha : alphas) {
      suite.runs.push_back({kind, alpha, {}});
    }
  }
  parallel_for(suite.runs.size(), [&](std::size_t i) {
    SuiteRun& run = suite.runs[i];
    try {
      run.trajectory = simulate(params, run.kind, run.alpha, y0, config);
    } catch (const std::exception& e) {
      throw SuiteError(run.kind, run.alpha,
                       "run " + std::string(kind_name(run.kind)) + " alpha=" +
                           shortest(run.alpha) + ": " + e.what());
    }
  });
  return suite;
}

}  // namespace fovir
