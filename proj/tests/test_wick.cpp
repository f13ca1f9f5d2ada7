#include <doctest.h>

#include <random>

#include "flatpipe/error.hpp"
#include "flatpipe/wick.hpp"
#include "support.hpp"

using namespace flatpipe;
using support::rel_diff;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidValue;
}

}  // namespace

TEST_CASE("effective pore radius") {
  CHECK(rel_diff(effective_pore_radius(100e-6), 21e-6) < 1e-15);
  CHECK(rel_diff(effective_pore_radius(45e-6), 9.45e-6) < 1e-15);
  CHECK(code_of([] { effective_pore_radius(0.0); }) == Errc::NonPositive);
  CHECK(code_of([] { effective_pore_radius(-1e-6); }) == Errc::NonPositive);
}

TEST_CASE("Blake-Kozeny permeability") {
  // d² ε³ / (150 (1-ε)²) = 1e-8 · 0.064 / 54
  CHECK(rel_diff(permeability(100e-6, 0.4), 1.185185185185e-11) < 1e-12);
  CHECK(rel_diff(permeability(45e-6, 0.4), 2.4e-12) < 1e-12);
  CHECK(code_of([] { permeability(100e-6, 1.0); }) == Errc::PorosityRange);
  CHECK(code_of([] { permeability(100e-6, 0.0); }) == Errc::PorosityRange);
  CHECK(code_of([] { permeability(0.0, 0.4); }) == Errc::NonPositive);
  // Overriding the constant scales K inversely.
  CHECK(rel_diff(permeability(45e-6, 0.4, 300.0), 1.2e-12) < 1e-12);
}

TEST_CASE("Laplace-Young capillary pressure") {
  // 2 · 0.0662 · cos(10°) / 21e-6
  CHECK(rel_diff(capillary_pressure(0.0662, 10.0, 21e-6), 6208.978404705541) < 1e-12);
  CHECK(std::abs(capillary_pressure(0.0662, 10.0, 21e-6) - 6.21e3) < 2.0);
  CHECK(rel_diff(capillary_pressure(0.1324, 10.0, 21e-6), 1.242e4) < 1e-3);
  CHECK(capillary_pressure(0.0662, 89.99999, 21e-6) < 1.2e-3);  // 2σ·1.745e-7/r ≈ 1.1e-3 Pa
  CHECK(capillary_pressure(0.0662, 89.99, 21e-6) < 1e-3 * capillary_pressure(0.0662, 0.0, 21e-6));

  CHECK(code_of([] { capillary_pressure(0.0662, 90.0, 21e-6); }) == Errc::AngleRange);
  CHECK(code_of([] { capillary_pressure(0.0662, -1.0, 21e-6); }) == Errc::AngleRange);
  CHECK(code_of([] { capillary_pressure(0.0, 10.0, 21e-6); }) == Errc::NonPositive);
  CHECK(code_of([] { capillary_pressure(0.0662, 10.0, 0.0); }) == Errc::NonPositive);
}

TEST_CASE("capillary pressure scales exactly with sigma and inverse pore radius") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const double sigma = support::draw(rng, 0.01, 0.1);
    const double theta = support::draw(rng, 0.0, 89.0);
    const double r = support::draw(rng, 1e-6, 1e-4);
    const double base = capillary_pressure(sigma, theta, r);
    CHECK(capillary_pressure(2.0 * sigma, theta, r) == 2.0 * base);
    CHECK(capillary_pressure(sigma, theta, r / 2.0) == 2.0 * base);
  }
}

TEST_CASE("capillary pressure decreases with wetting angle; permeability increases with eps and d_s") {
  double previous = capillary_pressure(0.0662, 0.0, 21e-6);
  for (double theta = 0.5; theta < 90.0; theta += 0.5) {
    const double p = capillary_pressure(0.0662, theta, 21e-6);
    CHECK(p < previous);
    previous = p;
  }
  double k_prev = permeability(45e-6, 0.01);
  for (double eps = 0.02; eps < 0.995; eps += 0.01) {
    const double k = permeability(45e-6, eps);
    CHECK(k > k_prev);
    k_prev = k;
  }
  CHECK(permeability(46e-6, 0.4) > permeability(45e-6, 0.4));
}

TEST_CASE("WickSpec derived quantities and validation") {
  WickSpec w;
  w.sphere_diameter = 100e-6;
  CHECK(w.pore_radius() == effective_pore_radius(100e-6));
  CHECK(w.permeability() == permeability(100e-6, 0.4));
  CHECK(w.max_capillary_pressure(0.0662) == capillary_pressure(0.0662, 10.0, 21e-6));
  CHECK_NOTHROW(w.validate());

  w.pore_radius_factor = 0.5;
  CHECK(w.pore_radius() == 0.5 * 100e-6);

  WickSpec bad = w;
  bad.wetting_angle_deg = 90.0;
  CHECK(code_of([&] { bad.validate(); }) == Errc::AngleRange);
  bad = w;
  bad.thickness = 0.0;
  CHECK(code_of([&] { bad.validate(); }) == Errc::NonPositive);
  bad = w;
  bad.porosity = 1.3;
  CHECK(code_of([&] { bad.validate(); }) == Errc::PorosityRange);
}
