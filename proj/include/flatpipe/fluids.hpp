#pragma once

namespace flatpipe {

/// Saturated-water properties at one working temperature (SI units,
/// temperature in degrees Celsius).
struct FluidState {
  double temperature;  // °C
  double sigma;        // surface tension, N/m
  double rho_l;        // liquid density, kg/m³
  double mu_l;         // liquid dynamic viscosity, Pa·s
  double rho_v;        // vapor density, kg/m³
  double mu_v;         // vapor dynamic viscosity, Pa·s
  double h_fg;         // latent heat of vaporization, J/kg
  double p_sat;        // saturation pressure, Pa
};

inline constexpr double kMinTemperatureC = 10.0;
inline constexpr double kMaxTemperatureC = 95.0;

/// Linear interpolation in a built-in 5 °C saturated-water table. Node
/// temperatures return the tabulated values exactly.
/// Throws Error{OutOfRange} outside [10, 95] °C.
FluidState saturation_properties(double temperature_c);

}  // namespace flatpipe
