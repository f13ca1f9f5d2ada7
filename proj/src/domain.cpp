#include "flatpipe/domain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flatpipe/error.hpp"

namespace flatpipe {
namespace {

// Coverage fractions this close to 0 or 1 are footprint edges that coincide
// with cell faces up to rounding of the face coordinates.
constexpr double kSnap = 1e-9;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(Errc::NonPositive, "domain", std::string(name) + " must be positive");
  }
}

void require_inside(const Footprint& f, const Geometry& g, const char* name) {
  require_positive(f.length, name);
  require_positive(f.width, name);
  const double tol_x = 1e-12 * g.length;
  const double tol_y = 1e-12 * g.width;
  if (f.x0 < -tol_x || f.y0 < -tol_y || f.x1() > g.length + tol_x || f.y1() > g.width + tol_y) {
    throw Error(Errc::FootprintOutside, "domain",
                std::string(name) + " footprint extends beyond the planform");
  }
}

double overlap_1d(double a0, double a1, double b0, double b1) {
  return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

double snap(double fraction) {
  if (fraction < kSnap) return 0.0;
  if (fraction > 1.0 - kSnap) return 1.0;
  return fraction;
}

// Fraction of each cell covered by the footprint; row-major like the grid.
std::vector<double> coverage(const Grid& grid, const Footprint& f) {
  std::vector<double> frac(grid.size(), 0.0);
  for (int j = 0; j < grid.ny; ++j) {
    const double cy0 = grid.width * j / grid.ny;
    const double cy1 = grid.width * (j + 1) / grid.ny;
    const double fy = snap(overlap_1d(cy0, cy1, f.y0, f.y1()) / (cy1 - cy0));
    if (fy == 0.0) continue;
    for (int i = 0; i < grid.nx; ++i) {
      const double cx0 = grid.length * i / grid.nx;
      const double cx1 = grid.length * (i + 1) / grid.nx;
      const double fx = snap(overlap_1d(cx0, cx1, f.x0, f.x1()) / (cx1 - cx0));
      frac[grid.index(i, j)] = fx * fy;
    }
  }
  return frac;
}

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

void Geometry::validate() const {
  require_positive(length, "length");
  require_positive(width, "width");
  require_positive(wick_thickness, "wick thickness");
  require_positive(vapor_thickness, "vapor thickness");
  require_inside(evaporator, *this, "evaporator");
  require_inside(condenser, *this, "condenser");
  const double ox = overlap_1d(evaporator.x0, evaporator.x1(), condenser.x0, condenser.x1());
  const double oy = overlap_1d(evaporator.y0, evaporator.y1(), condenser.y0, condenser.y1());
  if (ox * oy > 1e-12 * length * width) {
    throw Error(Errc::OverlappingFootprints, "domain", "evaporator and condenser overlap");
  }
}

bool Geometry::within_packaging_limit() const {
  return wick_thickness + vapor_thickness <= 1e-3 * (1.0 + 1e-12);
}

Grid build_grid(const Geometry& geometry, int nx, int ny) {
  if (nx < 2 || ny < 2) {
    throw Error(Errc::GridTooSmall, "domain",
                "grid " + std::to_string(nx) + "x" + std::to_string(ny) + " needs at least 2x2 cells");
  }
  require_positive(geometry.length, "length");
  require_positive(geometry.width, "width");
  return Grid{
      .nx = nx,
      .ny = ny,
      .length = geometry.length,
      .width = geometry.width,
      .dx = geometry.length / nx,
      .dy = geometry.width / ny,
  };
}

MassFluxField phase_change_flux(const Grid& grid, const Geometry& geometry, double power_w,
                                double h_fg) {
  if (power_w < 0.0 || !std::isfinite(power_w)) {
    throw Error(Errc::NegativePower, "domain", "heat power must be non-negative");
  }
  require_positive(h_fg, "latent heat");
  geometry.validate();

  MassFluxField field{.grid = grid, .values = std::vector<double>(grid.size(), 0.0)};
  if (power_w == 0.0) return field;

  const std::vector<double> evap = coverage(grid, geometry.evaporator);
  const std::vector<double> cond = coverage(grid, geometry.condenser);
  const double evap_cover = sum(evap);
  const double cond_cover = sum(cond);
  if (evap_cover == 0.0 || cond_cover == 0.0) {
    throw Error(Errc::GridTooSmall, "domain", "footprint covers no grid cell");
  }

  const double cell = grid.cell_area();
  const double evap_flux = power_w / (geometry.evaporator.area() * h_fg);
  const double cond_flux = power_w / (geometry.condenser.area() * h_fg);
  const double evap_total = evap_flux * evap_cover * cell;
  const double cond_total = cond_flux * cond_cover * cell;
  const double scale = evap_total / cond_total;

  for (std::size_t k = 0; k < field.values.size(); ++k) {
    double v = 0.0;
    if (evap[k] != 0.0) v += evap_flux * evap[k];
    if (cond[k] != 0.0) v -= scale * cond_flux * cond[k];
    field.values[k] = v;
  }
  field.evaporation_rate = evap_total;
  field.condenser_scale = scale;
  return field;
}

}  // namespace flatpipe
