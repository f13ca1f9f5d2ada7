#pragma once

namespace flatpipe {

inline constexpr double kDefaultPoreRadiusFactor = 0.21;
inline constexpr double kBlakeKozenyConstant = 150.0;

/// r_eff = factor · d_s. Throws Error{NonPositive} for d_s <= 0.
double effective_pore_radius(double sphere_diameter,
                             double factor = kDefaultPoreRadiusFactor);

/// Blake–Kozeny packed-sphere permeability d_s² ε³ / (C (1-ε)²), in m².
/// Throws NonPositive for d_s <= 0, PorosityRange for ε outside (0, 1).
double permeability(double sphere_diameter, double porosity,
                    double kozeny_constant = kBlakeKozenyConstant);

/// Laplace-Young maximum capillary pressure 2σ cos θ / r_eff, in Pa.
/// θ in degrees on [0, 90); a non-wetting angle is rejected with AngleRange.
double capillary_pressure(double sigma, double wetting_angle_deg, double pore_radius);

/// Sintered-sphere wick. The two closure constants stay overridable so a
/// wick can be calibrated without touching the closures themselves.
struct WickSpec {
  double sphere_diameter = 45e-6;  // m
  double porosity = 0.4;
  double thickness = 0.7e-3;  // m
  double wetting_angle_deg = 10.0;
  double pore_radius_factor = kDefaultPoreRadiusFactor;
  double kozeny_constant = kBlakeKozenyConstant;

  /// Throws on any invariant violation.
  void validate() const;

  double pore_radius() const { return effective_pore_radius(sphere_diameter, pore_radius_factor); }
  double permeability() const {
    return flatpipe::permeability(sphere_diameter, porosity, kozeny_constant);
  }
  double max_capillary_pressure(double sigma) const {
    return capillary_pressure(sigma, wetting_angle_deg, pore_radius());
  }
};

}  // namespace flatpipe
