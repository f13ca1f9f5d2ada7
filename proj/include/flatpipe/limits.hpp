#pragma once

#include <span>
#include <vector>

#include "flatpipe/domain.hpp"
#include "flatpipe/elliptic.hpp"
#include "flatpipe/hydro.hpp"
#include "flatpipe/wick.hpp"

namespace flatpipe {

/// Capillary balance at one working temperature. Pressure drops are per
/// watt of transported heat; the hydraulic model is linear in power.
struct CapillaryReport {
  double temperature = 0.0;  // °C
  double dp_cap = 0.0;       // Pa
  double dp_l_per_w = 0.0;   // Pa/W
  double dp_v_per_w = 0.0;   // Pa/W
  double q_max = 0.0;        // W

  double margin_at(double power_w) const { return dp_cap - power_w * (dp_l_per_w + dp_v_per_w); }
};

struct SweepResult {
  std::vector<CapillaryReport> rows;
};

/// Capillary limit from one unit-power solve of both phases:
/// q_max = ΔP_cap / (ΔP_l/W + ΔP_v/W). Throws ZeroDrop for a degenerate
/// configuration with no pressure drop.
CapillaryReport q_max(const Geometry& geometry, const WickSpec& wick, double temperature_c,
                      const Grid& grid, const SolverOptions& options = {});

/// ΔP_cap − (ΔP_l + ΔP_v) at the given power, from a full hydraulic solve.
double capillary_margin(const Geometry& geometry, const WickSpec& wick, double temperature_c,
                        const Grid& grid, double power_w, const SolverOptions& options = {});

/// Bisection on the power with a full re-solve per probe; independent of the
/// linear-scaling shortcut in q_max(). Returns the bracket midpoint once the
/// bracket is narrower than `tol`. Throws BracketFailure if the margin at
/// `q_hi` is still non-negative.
double q_max_bisection(const Geometry& geometry, const WickSpec& wick, double temperature_c,
                       const Grid& grid, double q_hi, double tol, const SolverOptions& options = {});

/// Closed-form 1D model for full-width strips at opposite ends, using the
/// effective length L_a + (L_e + L_c)/2.
struct OneDimensionalModel {
  double effective_length = 0.0;  // m
  double dp_cap = 0.0;            // Pa
  double dp_l_per_w = 0.0;        // Pa/W
  double dp_v_per_w = 0.0;        // Pa/W
  double q_max = 0.0;             // W
};

/// Throws NotStripLayout unless both footprints span the full width and sit
/// flush against opposite ends.
OneDimensionalModel one_dimensional_model(const Geometry& geometry, const WickSpec& wick,
                                          double temperature_c);

inline double q_max_1d(const Geometry& geometry, const WickSpec& wick, double temperature_c) {
  return one_dimensional_model(geometry, wick, temperature_c).q_max;
}

/// One independent CapillaryReport per temperature; rows may run
/// concurrently and are returned in input order. Temperatures must be
/// non-empty (EmptyList) and strictly increasing (NotIncreasing).
SweepResult sweep_temperature(const Geometry& geometry, const WickSpec& wick,
                              std::span<const double> temperatures_c, const Grid& grid,
                              const SolverOptions& options = {});

}  // namespace flatpipe
