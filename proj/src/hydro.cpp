#include "flatpipe/hydro.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flatpipe/error.hpp"

namespace flatpipe {
namespace {

PressureField solve_phase(const Grid& grid, const MassFluxField& flux, double coefficient, Phase phase,
                          const SolverOptions& options) {
  if (flux.values.size() != grid.size()) {
    throw Error(Errc::ShapeMismatch, "hydro", "mass flux does not match grid");
  }
  ScalarField source = ScalarField::zeros(grid);
  for (std::size_t k = 0; k < source.values.size(); ++k) source.values[k] = coefficient * flux.values[k];

  ScalarField solved = solve_poisson_neumann(grid, source, options);
  PressureField field{.grid = grid, .phase = phase, .gauge = std::move(solved.values)};
  field.datum_cell = 0;
  field.datum_pressure = field.gauge.front();
  return field;
}

}  // namespace

const char* to_string(Phase phase) noexcept { return phase == Phase::Liquid ? "liquid" : "vapor"; }

std::vector<double> PressureField::absolute_values() const {
  std::vector<double> out(gauge.size());
  for (std::size_t k = 0; k < gauge.size(); ++k) out[k] = absolute(k);
  return out;
}

double PressureField::max() const { return *std::max_element(gauge.begin(), gauge.end()); }
double PressureField::min() const { return *std::min_element(gauge.begin(), gauge.end()); }

std::size_t PressureField::argmin() const {
  return static_cast<std::size_t>(std::min_element(gauge.begin(), gauge.end()) - gauge.begin());
}

std::size_t PressureField::argmax() const {
  return static_cast<std::size_t>(std::max_element(gauge.begin(), gauge.end()) - gauge.begin());
}

PressureField liquid_pressure(const Grid& grid, const MassFluxField& flux, const FluidState& fluid,
                              const WickSpec& wick, const SolverOptions& options) {
  wick.validate();
  const double coefficient = fluid.mu_l / (fluid.rho_l * wick.permeability() * wick.thickness);
  return solve_phase(grid, flux, coefficient, Phase::Liquid, options);
}

PressureField vapor_pressure(const Grid& grid, const MassFluxField& flux, const FluidState& fluid,
                             double vapor_thickness, const SolverOptions& options) {
  if (!(vapor_thickness > 0.0)) {
    throw Error(Errc::NonPositive, "hydro", "vapor thickness must be positive");
  }
  const double h3 = vapor_thickness * vapor_thickness * vapor_thickness;
  const double coefficient = -12.0 * fluid.mu_v / (fluid.rho_v * h3);
  return solve_phase(grid, flux, coefficient, Phase::Vapor, options);
}

std::pair<PressureField, PressureField> rereference(PressureField liquid, PressureField vapor,
                                                    const FluidState& fluid, const Geometry& geometry) {
  if (liquid.gauge.size() != vapor.gauge.size() || liquid.grid.nx != vapor.grid.nx ||
      liquid.grid.ny != vapor.grid.ny) {
    throw Error(Errc::ShapeMismatch, "hydro", "liquid and vapor fields are on different grids");
  }
  if (std::abs(liquid.grid.length - geometry.length) > 1e-12 * geometry.length ||
      std::abs(liquid.grid.width - geometry.width) > 1e-12 * geometry.width) {
    throw Error(Errc::ShapeMismatch, "hydro", "fields do not span the given geometry");
  }
  const std::size_t pin = vapor.argmin();
  vapor.datum_cell = pin;
  vapor.datum_pressure = fluid.p_sat;
  liquid.datum_cell = pin;
  liquid.datum_pressure = fluid.p_sat;
  return {std::move(liquid), std::move(vapor)};
}

PressureDrops pressure_drops(const PressureField& liquid, const PressureField& vapor) {
  PressureDrops d;
  d.liquid = liquid.max() - liquid.min();
  d.vapor = vapor.max() - vapor.min();
  d.total = d.liquid + d.vapor;
  return d;
}

}  // namespace flatpipe
