#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fovir/solver.hpp"
#include "fovir/sweep.hpp"

namespace fovir::cli {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Strict full-string parse; throws std::invalid_argument.
double parse_double(std::string_view text);

/// `t,T,I,V,C` with one row per grid point. Each entry of `comments` is
/// written as a `# ` line before the header.
void write_trajectory_csv(std::ostream& os, const Trajectory<4>& trajectory,
                          const std::vector<std::string>& comments = {});

/// Reads a file written by write_trajectory_csv; `#` lines are skipped.
Trajectory<4> read_trajectory_csv(std::istream& is);

/// `<xname>,<yname>,r0`, y-major row order.
void write_sweep_csv(std::ostream& os, const SweepGrid& grid,
                     const std::vector<std::string>& comments = {});

}  // namespace fovir::cli
