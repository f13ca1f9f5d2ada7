#include "flatpipe/wick.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "flatpipe/error.hpp"

namespace flatpipe {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(Errc::NonPositive, "wick", std::string(name) + " must be positive");
  }
}

void require_angle(double deg) {
  if (!(deg >= 0.0 && deg < 90.0)) {
    throw Error(Errc::AngleRange, "wick",
                "wetting angle " + std::to_string(deg) + " deg outside [0, 90)");
  }
}

}  // namespace

double effective_pore_radius(double sphere_diameter, double factor) {
  require_positive(sphere_diameter, "sphere diameter");
  require_positive(factor, "pore radius factor");
  return factor * sphere_diameter;
}

double permeability(double sphere_diameter, double porosity, double kozeny_constant) {
  require_positive(sphere_diameter, "sphere diameter");
  require_positive(kozeny_constant, "Kozeny constant");
  if (!(porosity > 0.0 && porosity < 1.0)) {
    throw Error(Errc::PorosityRange, "wick",
                "porosity " + std::to_string(porosity) + " outside (0, 1)");
  }
  const double solid = 1.0 - porosity;
  return sphere_diameter * sphere_diameter * porosity * porosity * porosity /
         (kozeny_constant * solid * solid);
}

double capillary_pressure(double sigma, double wetting_angle_deg, double pore_radius) {
  require_positive(sigma, "surface tension");
  require_positive(pore_radius, "pore radius");
  require_angle(wetting_angle_deg);
  const double theta = wetting_angle_deg * std::numbers::pi / 180.0;
  return 2.0 * sigma * std::cos(theta) / pore_radius;
}

void WickSpec::validate() const {
  require_positive(thickness, "wick thickness");
  require_angle(wetting_angle_deg);
  (void)pore_radius();
  (void)permeability();
}

}  // namespace flatpipe
