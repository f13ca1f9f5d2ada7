#include "flatpipe/limits.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <sstream>

#include "flatpipe/error.hpp"
#include "flatpipe/fluids.hpp"

namespace flatpipe {
namespace {

void check_setup(const Geometry& geometry, const WickSpec& wick) {
  geometry.validate();
  wick.validate();
  if (std::abs(geometry.wick_thickness - wick.thickness) > 1e-12 * geometry.wick_thickness) {
    throw Error(Errc::InvalidValue, "limits", "wick thickness differs between geometry and wick");
  }
}

PressureDrops solve_drops(const Geometry& geometry, const WickSpec& wick, const FluidState& fluid,
                          const Grid& grid, double power_w, const SolverOptions& options) {
  const MassFluxField flux = phase_change_flux(grid, geometry, power_w, fluid.h_fg);
  PressureField pl = liquid_pressure(grid, flux, fluid, wick, options);
  PressureField pv = vapor_pressure(grid, flux, fluid, geometry.vapor_thickness, options);
  return pressure_drops(pl, pv);
}

bool near(double a, double b, double scale) { return std::abs(a - b) <= 1e-9 * scale; }

}  // namespace

CapillaryReport q_max(const Geometry& geometry, const WickSpec& wick, double temperature_c,
                      const Grid& grid, const SolverOptions& options) {
  check_setup(geometry, wick);
  const FluidState fluid = saturation_properties(temperature_c);
  const PressureDrops unit = solve_drops(geometry, wick, fluid, grid, 1.0, options);

  CapillaryReport report;
  report.temperature = temperature_c;
  report.dp_cap = wick.max_capillary_pressure(fluid.sigma);
  report.dp_l_per_w = unit.liquid;
  report.dp_v_per_w = unit.vapor;
  const double per_w = unit.liquid + unit.vapor;
  if (!(per_w > 0.0) || !std::isfinite(per_w)) {
    throw Error(Errc::ZeroDrop, "limits", "no pressure drop at unit power; geometry is degenerate");
  }
  report.q_max = report.dp_cap / per_w;
  return report;
}

double capillary_margin(const Geometry& geometry, const WickSpec& wick, double temperature_c,
                        const Grid& grid, double power_w, const SolverOptions& options) {
  check_setup(geometry, wick);
  const FluidState fluid = saturation_properties(temperature_c);
  const PressureDrops d = solve_drops(geometry, wick, fluid, grid, power_w, options);
  return wick.max_capillary_pressure(fluid.sigma) - d.total;
}

double q_max_bisection(const Geometry& geometry, const WickSpec& wick, double temperature_c,
                       const Grid& grid, double q_hi, double tol, const SolverOptions& options) {
  if (!(tol > 0.0)) throw Error(Errc::NonPositive, "limits", "bisection tolerance must be positive");
  if (!(q_hi > 0.0)) throw Error(Errc::NonPositive, "limits", "upper power bound must be positive");

  auto margin = [&](double q) { return capillary_margin(geometry, wick, temperature_c, grid, q, options); };
  if (margin(0.0) <= 0.0) return 0.0;
  if (margin(q_hi) >= 0.0) {
    std::ostringstream msg;
    msg << "capillary margin still non-negative at q_hi = " << q_hi << " W";
    throw Error(Errc::BracketFailure, "limits", msg.str());
  }

  double lo = 0.0;
  double hi = q_hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (margin(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

OneDimensionalModel one_dimensional_model(const Geometry& geometry, const WickSpec& wick,
                                          double temperature_c) {
  check_setup(geometry, wick);
  const Footprint& e = geometry.evaporator;
  const Footprint& c = geometry.condenser;
  const double L = geometry.length;
  const double W = geometry.width;

  const bool full_width = near(e.y0, 0.0, W) && near(e.width, W, W) && near(c.y0, 0.0, W) &&
                          near(c.width, W, W);
  const bool evap_left = near(e.x0, 0.0, L) && near(c.x1(), L, L);
  const bool evap_right = near(c.x0, 0.0, L) && near(e.x1(), L, L);
  if (!full_width || !(evap_left || evap_right)) {
    throw Error(Errc::NotStripLayout, "limits",
                "1D model needs full-width evaporator and condenser strips at opposite ends");
  }

  const FluidState f = saturation_properties(temperature_c);
  OneDimensionalModel m;
  const double adiabatic = L - e.length - c.length;
  m.effective_length = adiabatic + 0.5 * (e.length + c.length);
  const double hv3 = geometry.vapor_thickness * geometry.vapor_thickness * geometry.vapor_thickness;
  m.dp_cap = wick.max_capillary_pressure(f.sigma);
  m.dp_l_per_w = f.mu_l * m.effective_length / (f.rho_l * wick.permeability() * W * wick.thickness * f.h_fg);
  m.dp_v_per_w = 12.0 * f.mu_v * m.effective_length / (f.rho_v * W * hv3 * f.h_fg);
  m.q_max = m.dp_cap / (m.dp_l_per_w + m.dp_v_per_w);
  return m;
}

SweepResult sweep_temperature(const Geometry& geometry, const WickSpec& wick,
                              std::span<const double> temperatures_c, const Grid& grid,
                              const SolverOptions& options) {
  if (temperatures_c.empty()) throw Error(Errc::EmptyList, "limits", "no temperatures to sweep");
  for (std::size_t k = 0; k < temperatures_c.size(); ++k) {
    (void)saturation_properties(temperatures_c[k]);
    if (k > 0 && !(temperatures_c[k] > temperatures_c[k - 1])) {
      throw Error(Errc::NotIncreasing, "limits", "sweep temperatures must be strictly increasing");
    }
  }
  check_setup(geometry, wick);

  SweepResult result;
  result.rows.resize(temperatures_c.size());
  std::vector<std::exception_ptr> failures(temperatures_c.size());
  const auto n = static_cast<std::int64_t>(temperatures_c.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      result.rows[i] = q_max(geometry, wick, temperatures_c[i], grid, options);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return result;
}

}  // namespace flatpipe
