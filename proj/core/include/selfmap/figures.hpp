#pragma once

#include <iosfwd>
#include <vector>

#include "selfmap/eval_result.hpp"

namespace selfmap {

enum class GridKind { RealLine, PolarDisk };

struct GridSpec {
  GridKind kind = GridKind::RealLine;
  // RealLine
  double lo = -1.0;
  double hi = 1.0;
  int points = 0;
  // PolarDisk
  double max_radius = 1.0;
  int radial_count = 0;
  int angular_count = 0;
};

/// h_k(x) over a closed equispaced grid on [-1, 1] (all families extend
/// continuously to the endpoints), one column per k.
struct IntervalFigure {
  GridSpec grid;
  std::vector<double> ks;
  std::vector<double> xs;
  std::vector<std::vector<double>> columns;  // columns[ki][xi]
};

/// |erf(z)| over the polar grid r in [0, max_radius], theta in [0, 2pi).
struct DiskFigure {
  GridSpec grid;
  struct Row {
    double r, theta, re_z, im_z, abs_erf;
  };
  std::vector<Row> rows;
};

IntervalFigure figure_interval(const std::vector<double>& ks, int points,
                               double tol = 1e-12);

DiskFigure figure_disk(int radial, int angular, double tol = 1e-12);

// CSV emission: comma separated, '\n' endings, header row, 17-significant-
// digit values, byte-identical for identical inputs.
void write_interval_csv(const IntervalFigure& fig, std::ostream& out);
void write_disk_csv(const DiskFigure& fig, std::ostream& out);

}  // namespace selfmap
