#pragma once

// Classical fourth-order Runge-Kutta on a uniform grid. Used as the
// integer-order reference for the fractional integrator at alpha = 1.

#include <cmath>
#include <cstddef>

#include "fovir/solver.hpp"

namespace fovir {

template <std::size_t Dim>
Trajectory<Dim> integrate_rk4(const VectorField<Dim>& rhs, const Vec<Dim>& y0, double step_size,
                              double t_end) {
  SolverConfig grid;
  grid.step_size = step_size;
  grid.t_end = t_end;
  grid.validate();
  const std::size_t steps = grid.step_count();
  const double h = step_size;

  Trajectory<Dim> out;
  out.step_size = h;
  out.times.resize(steps + 1);
  out.states.resize(steps + 1);
  out.states[0] = y0;

  auto axpy = [](const Vec<Dim>& y, double a, const Vec<Dim>& k) {
    Vec<Dim> r;
    for (std::size_t i = 0; i < Dim; ++i) r[i] = y[i] + a * k[i];
    return r;
  };
  for (std::size_t n = 0; n < steps; ++n) {
    const double t = static_cast<double>(n) * h;
    const Vec<Dim>& y = out.states[n];
    const Vec<Dim> k1 = rhs(t, y);
    const Vec<Dim> k2 = rhs(t + h / 2, axpy(y, h / 2, k1));
    const Vec<Dim> k3 = rhs(t + h / 2, axpy(y, h / 2, k2));
    const Vec<Dim> k4 = rhs(t + h, axpy(y, h, k3));
    Vec<Dim> next;
    for (std::size_t i = 0; i < Dim; ++i) {
      next[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out.times[n + 1] = static_cast<double>(n + 1) * h;
    out.states[n + 1] = next;
  }
  return out;
}

}  // namespace fovir
