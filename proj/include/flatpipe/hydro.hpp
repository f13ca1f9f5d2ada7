#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "flatpipe/domain.hpp"
#include "flatpipe/elliptic.hpp"
#include "flatpipe/fluids.hpp"
#include "flatpipe/wick.hpp"

namespace flatpipe {

enum class Phase { Liquid, Vapor };

const char* to_string(Phase phase) noexcept;

/// Pressure field stored as solver gauge values plus a datum.
///
/// `gauge` is never modified once solved; absolute pressures are
/// `datum_pressure + (gauge[i] − gauge[datum_cell])`. Drops are taken from
/// the gauge values, so re-referencing cannot perturb them.
struct PressureField {
  Grid grid;
  Phase phase = Phase::Liquid;
  std::vector<double> gauge;  // Pa, zero mean as returned by the solver
  std::size_t datum_cell = 0;
  double datum_pressure = 0.0;  // Pa

  double absolute(std::size_t cell) const {
    return datum_pressure + (gauge[cell] - gauge[datum_cell]);
  }
  std::vector<double> absolute_values() const;
  /// Constant added to the gauge values to obtain absolute pressures.
  double offset() const { return datum_pressure - gauge[datum_cell]; }

  double max() const;
  double min() const;
  std::size_t argmin() const;
  std::size_t argmax() const;
};

struct PressureDrops {
  double liquid = 0.0;  // Pa
  double vapor = 0.0;   // Pa
  double total = 0.0;   // Pa
};

/// Depth-averaged Darcy flow in the wick: Δp_l = μ_l m''/(ρ_l K h_w).
PressureField liquid_pressure(const Grid& grid, const MassFluxField& flux, const FluidState& fluid,
                              const WickSpec& wick, const SolverOptions& options = {});

/// Plane-Poiseuille flow in the vapor gap: Δp_v = −12 μ_v m''/(ρ_v h_v³).
PressureField vapor_pressure(const Grid& grid, const MassFluxField& flux, const FluidState& fluid,
                             double vapor_thickness, const SolverOptions& options = {});

/// Vapor minimum pinned at p_sat; liquid equal to vapor at that same cell
/// (flat meniscus where the vapor pressure is lowest).
std::pair<PressureField, PressureField> rereference(PressureField liquid, PressureField vapor,
                                                    const FluidState& fluid, const Geometry& geometry);

PressureDrops pressure_drops(const PressureField& liquid, const PressureField& vapor);

}  // namespace flatpipe
