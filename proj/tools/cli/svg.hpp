#pragma once

#include <iosfwd>

#include "fovir/sweep.hpp"

namespace fovir::cli {

/// 2x2 panels (T, I, V, C) with one line per proliferation law, for the
/// runs of `suite` at order `alpha`.
void write_suite_svg(std::ostream& os, const TrajectorySuite& suite, double alpha);

/// Heatmap of log10(R0); cells with R0 < 1 are drawn in grey tones.
void write_heatmap_svg(std::ostream& os, const SweepGrid& grid);

}  // namespace fovir::cli
