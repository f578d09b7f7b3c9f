#include "selfmap/figures.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "selfmap/erf.hpp"
#include "selfmap/families.hpp"
#include "selfmap/format.hpp"

namespace selfmap {

IntervalFigure figure_interval(const std::vector<double>& ks, int points,
                               double tol) {
  if (points < 2)
    throw std::invalid_argument("figure_interval: points must be >= 2");
  if (ks.empty())
    throw std::invalid_argument("figure_interval: need at least one k");
  IntervalFigure fig;
  fig.grid.kind = GridKind::RealLine;
  fig.grid.lo = -1.0;
  fig.grid.hi = 1.0;
  fig.grid.points = points;
  fig.ks = ks;
  fig.xs.reserve(points);
  for (int i = 0; i < points; ++i)
    fig.xs.push_back(-1.0 + 2.0 * i / (points - 1));
  for (double k : ks) {
    const MapFamily fam = MapFamily::scaled_erf(k);
    std::vector<double> col;
    col.reserve(points);
    for (double x : fig.xs)
      col.push_back(eval(fam, Complex{x, 0.0}, tol).value.real());
    fig.columns.push_back(std::move(col));
  }
  return fig;
}

DiskFigure figure_disk(int radial, int angular, double tol) {
  if (radial < 2 || angular < 2)
    throw std::invalid_argument("figure_disk: grid counts must be >= 2");
  DiskFigure fig;
  fig.grid.kind = GridKind::PolarDisk;
  fig.grid.max_radius = 1.0;
  fig.grid.radial_count = radial;
  fig.grid.angular_count = angular;
  fig.rows.reserve(static_cast<std::size_t>(radial) * angular);
  for (int ir = 0; ir < radial; ++ir) {
    const double r = static_cast<double>(ir) / (radial - 1);
    for (int ja = 0; ja < angular; ++ja) {
      const double th = 2.0 * std::numbers::pi * ja / angular;
      const Complex z{r * std::cos(th), r * std::sin(th)};
      fig.rows.push_back(
          {r, th, z.real(), z.imag(), std::abs(erf_series(z, tol).value)});
    }
  }
  return fig;
}

void write_interval_csv(const IntervalFigure& fig, std::ostream& out) {
  out << 'x';
  for (double k : fig.ks) out << ",hk_" << format_double(k);
  out << '\n';
  for (std::size_t i = 0; i < fig.xs.size(); ++i) {
    out << format_double(fig.xs[i]);
    for (const auto& col : fig.columns) out << ',' << format_double(col[i]);
    out << '\n';
  }
}

void write_disk_csv(const DiskFigure& fig, std::ostream& out) {
  out << "r,theta,re_z,im_z,abs_erf\n";
  for (const auto& row : fig.rows) {
    out << format_double(row.r) << ',' << format_double(row.theta) << ','
        << format_double(row.re_z) << ',' << format_double(row.im_z) << ','
        << format_double(row.abs_erf) << '\n';
  }
}

}  // namespace selfmap
