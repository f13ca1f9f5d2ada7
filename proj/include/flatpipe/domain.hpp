#pragma once

#include <cstddef>
#include <vector>

namespace flatpipe {

/// Axis-aligned rectangle in planform coordinates (metres).
struct Footprint {
  double x0 = 0.0;
  double y0 = 0.0;
  double length = 0.0;  // x-extent
  double width = 0.0;   // y-extent

  double x1() const { return x0 + length; }
  double y1() const { return y0 + width; }
  double area() const { return length * width; }
};

/// Heat pipe planform and layer stack. Defaults are the 44 × 30 mm test
/// pipe with a 0.7 mm wick, 0.3 mm vapor space and full-width 10 mm
/// evaporator/condenser strips at opposite ends.
struct Geometry {
  double length = 0.044;
  double width = 0.030;
  double wick_thickness = 0.7e-3;
  double vapor_thickness = 0.3e-3;
  double wall_thickness = 0.8e-3;  // informational only
  Footprint evaporator{0.0, 0.0, 0.010, 0.030};
  Footprint condenser{0.034, 0.0, 0.010, 0.030};

  /// Throws NonPositive, FootprintOutside or OverlappingFootprints.
  void validate() const;

  /// Packaging constraint: vapor core plus wick no thicker than 1 mm.
  /// Violations are reported, never rejected.
  bool within_packaging_limit() const;
};

/// Uniform cell-centred grid over [0, L] × [0, W].
struct Grid {
  int nx = 0;
  int ny = 0;
  double length = 0.0;
  double width = 0.0;
  double dx = 0.0;
  double dy = 0.0;

  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
  }
  double x_center(int i) const { return (i + 0.5) * dx; }
  double y_center(int j) const { return (j + 0.5) * dy; }
  double cell_area() const { return dx * dy; }
};

/// Throws GridTooSmall for nx < 2 or ny < 2.
Grid build_grid(const Geometry& geometry, int nx, int ny);

/// Per-cell phase-change mass flux in kg/(m²·s), row-major (j outer).
/// Positive values evaporate liquid into vapor.
struct MassFluxField {
  Grid grid;
  std::vector<double> values;
  double evaporation_rate = 0.0;  // Σ over evaporator cells of m''·dx·dy, kg/s
  double condenser_scale = 1.0;   // factor applied to balance the condenser side
};

/// Uniform flux Q/(A_e h_fg) over the evaporator and the opposite sign over
/// the condenser, weighted by exact cell coverage fractions. The condenser
/// side is rescaled once so the discrete area-weighted sum vanishes.
MassFluxField phase_change_flux(const Grid& grid, const Geometry& geometry, double power_w,
                                double h_fg);

}  // namespace flatpipe
