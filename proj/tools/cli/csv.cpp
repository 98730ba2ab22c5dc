#include "cli/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace fovir::cli {

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

namespace {

void write_comments(std::ostream& os, const std::vector<std::string>& comments) {
  for (const auto& c : comments) {
    os << "# " << c << '\n';
  }
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory<4>& trajectory,
                          const std::vector<std::string>& comments) {
  write_comments(os, comments);
  os << "t,T,I,V,C\n";
  for (std::size_t n = 0; n < trajectory.size(); ++n) {
    os << format_double(trajectory.times[n]);
    for (double v : trajectory.states[n]) {
      os << ',' << format_double(v);
    }
    os << '\n';
  }
}

Trajectory<4> read_trajectory_csv(std::istream& is) {
  Trajectory<4> out;
  std::string line;
  bool header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != "t,T,I,V,C") {
        throw std::runtime_error("trajectory csv: unexpected header '" + line + "'");
      }
      header = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 5) {
      throw std::runtime_error("trajectory csv: expected 5 fields in '" + line + "'");
    }
    out.times.push_back(parse_double(fields[0]));
    out.states.push_back({parse_double(fields[1]), parse_double(fields[2]),
                          parse_double(fields[3]), parse_double(fields[4])});
  }
  if (!header) {
    throw std::runtime_error("trajectory csv: missing header");
  }
  if (out.times.size() >= 2) {
    out.step_size = out.times[1] - out.times[0];
  }
  return out;
}

void write_sweep_csv(std::ostream& os, const SweepGrid& grid,
                     const std::vector<std::string>& comments) {
  write_comments(os, comments);
  os << grid.x.name() << ',' << grid.y.name() << ",r0\n";
  for (std::size_t iy = 0; iy < grid.rows(); ++iy) {
    for (std::size_t ix = 0; ix < grid.cols(); ++ix) {
      os << format_double(grid.x.values[ix]) << ',' << format_double(grid.y.values[iy]) << ','
         << format_double(grid.at(ix, iy)) << '\n';
    }
  }
}

}  // namespace fovir::cli
