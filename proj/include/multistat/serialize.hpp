#pragma once

#include <string>
#include <vector>

#include "multistat/cad2d.hpp"
#include "multistat/pointsolve.hpp"

namespace multistat {

/// Graded-lex terms, integer coefficients without common factor, positive
/// leading coefficient.
std::string canonical_text(const MultiPoly& p);

/// "num/den", den >= 1.
std::string rational_json(const Rational& q);

std::string reduced_system_json(const std::string& model, const ReducedSystem& rs);

/// Header `<params>,count,status,seconds`; LF line endings.
std::string grid_csv(const GridResult& grid);
std::string grid_json(const GridResult& grid);

/// One row per record: variables (decimal midpoints), positivity, stability.
std::string fixed_points_csv(const std::vector<FixedPointRecord>& records, const std::vector<std::string>& vars,
                             int digits);
std::string fixed_points_json(const std::vector<FixedPointRecord>& records, const std::vector<std::string>& vars,
                              int digits);

std::string region_json(const OpenCad& cad, const RegionReport& report);

struct ScatterPoint {
  double x = 0, y = 0;
  unsigned count = 0;
};

struct PlotFrame {
  std::string x_label, y_label;
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  int width = 480, height = 360;
};

/// Disc for count 1, box for count 3, diamond otherwise.
std::string scatter_svg(const std::vector<ScatterPoint>& points, const PlotFrame& frame);
/// Grid entries plotted with the given parameter indices as axes.
std::string grid_svg(const GridResult& grid, size_t x_param, size_t y_param);

/// Cells shaded by classification, rasterised at `resolution` samples per
/// axis; one group per cell that is hit.
std::string region_svg(const OpenCad& cad, const PlotFrame& frame, int resolution = 160);

}  // namespace multistat
