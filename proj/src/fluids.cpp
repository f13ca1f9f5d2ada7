#include "flatpipe/fluids.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "flatpipe/error.hpp"

namespace flatpipe {
namespace {

// Saturated water at 5 °C intervals, evaluated from the IAPWS-95 formulation
// (IAPWS 2008 viscosity, IAPWS 1994 surface tension). Surface tension is
// rounded to four decimals as in the usual engineering tables.
//   T [°C], sigma [N/m], rho_l, mu_l [Pa s], rho_v, mu_v [Pa s], h_fg [J/kg], p_sat [Pa]
constexpr std::array<FluidState, 18> kTable{{
    {10.0, 0.0742, 999.65, 13.06e-4, 0.009407, 0.9238e-5, 2.4772e6, 1228.2},
    {15.0, 0.0735, 999.06, 11.38e-4, 0.01284, 0.9390e-5, 2.4654e6, 1705.8},
    {20.0, 0.0727, 998.16, 10.02e-4, 0.01731, 0.9544e-5, 2.4535e6, 2339.3},
    {25.0, 0.0720, 997.00, 8.900e-4, 0.02307, 0.9701e-5, 2.4417e6, 3169.9},
    {30.0, 0.0712, 995.61, 7.972e-4, 0.03042, 0.9860e-5, 2.4298e6, 4247.0},
    {35.0, 0.0704, 993.99, 7.191e-4, 0.03967, 1.002e-5, 2.4179e6, 5629.0},
    {40.0, 0.0696, 992.18, 6.527e-4, 0.05124, 1.018e-5, 2.4060e6, 7384.9},
    {45.0, 0.0688, 990.17, 5.958e-4, 0.06556, 1.035e-5, 2.3940e6, 9595.0},
    {50.0, 0.0679, 988.00, 5.465e-4, 0.08315, 1.052e-5, 2.3819e6, 12352.0},
    {55.0, 0.0671, 985.66, 5.036e-4, 0.1046, 1.068e-5, 2.3698e6, 15762.0},
    {60.0, 0.0662, 983.16, 4.660e-4, 0.1304, 1.085e-5, 2.3577e6, 19946.0},
    {65.0, 0.0654, 980.52, 4.329e-4, 0.1615, 1.102e-5, 2.3454e6, 25042.0},
    {70.0, 0.0645, 977.73, 4.035e-4, 0.1984, 1.119e-5, 2.3330e6, 31201.0},
    {75.0, 0.0636, 974.81, 3.774e-4, 0.2422, 1.137e-5, 2.3206e6, 38595.0},
    {80.0, 0.0627, 971.77, 3.540e-4, 0.2937, 1.154e-5, 2.3080e6, 47414.0},
    {85.0, 0.0618, 968.59, 3.331e-4, 0.3539, 1.171e-5, 2.2953e6, 57867.0},
    {90.0, 0.0608, 965.30, 3.142e-4, 0.4239, 1.189e-5, 2.2825e6, 70182.0},
    {95.0, 0.0599, 961.88, 2.971e-4, 0.5049, 1.206e-5, 2.2695e6, 84608.0},
}};

constexpr double kStep = 5.0;

double lerp(double a, double b, double t) { return t == 0.0 ? a : a + t * (b - a); }

}  // namespace

FluidState saturation_properties(double temperature_c) {
  if (!(temperature_c >= kMinTemperatureC && temperature_c <= kMaxTemperatureC)) {
    std::ostringstream msg;
    msg << "temperature " << temperature_c << " C outside supported range ["
        << kMinTemperatureC << ", " << kMaxTemperatureC << "]";
    throw Error(Errc::OutOfRange, "fluids", msg.str());
  }

  auto idx = static_cast<std::size_t>(std::floor((temperature_c - kMinTemperatureC) / kStep));
  if (idx >= kTable.size() - 1) {
    return kTable.back();
  }
  const FluidState& lo = kTable[idx];
  const FluidState& hi = kTable[idx + 1];
  const double t = (temperature_c - lo.temperature) / kStep;

  return FluidState{
      .temperature = temperature_c,
      .sigma = lerp(lo.sigma, hi.sigma, t),
      .rho_l = lerp(lo.rho_l, hi.rho_l, t),
      .mu_l = lerp(lo.mu_l, hi.mu_l, t),
      .rho_v = lerp(lo.rho_v, hi.rho_v, t),
      .mu_v = lerp(lo.mu_v, hi.mu_v, t),
      .h_fg = lerp(lo.h_fg, hi.h_fg, t),
      .p_sat = lerp(lo.p_sat, hi.p_sat, t),
  };
}

}  // namespace flatpipe
