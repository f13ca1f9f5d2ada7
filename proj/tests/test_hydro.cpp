#include <doctest.h>

#include <random>

#include "flatpipe/error.hpp"
#include "flatpipe/hydro.hpp"
#include "support.hpp"

using namespace flatpipe;
using support::draw;
using support::rel_diff;

namespace {

WickSpec reference_wick() {
  WickSpec w;
  w.sphere_diameter = 100e-6;
  w.porosity = 0.4;
  w.kozeny_constant = 150.0;
  return w;
}

struct Solved {
  PressureField liquid;
  PressureField vapor;
};

Solved solve(const Geometry& g, const WickSpec& w, const FluidState& f, double q, int nx, int ny) {
  const Grid grid = build_grid(g, nx, ny);
  const MassFluxField flux = phase_change_flux(grid, g, q, f.h_fg);
  return {liquid_pressure(grid, flux, f, w), vapor_pressure(grid, flux, f, g.vapor_thickness)};
}

// 1D closed forms over L_eff = L_a + (L_e + L_c)/2, per watt.
double liquid_drop_1d(const Geometry& g, const WickSpec& w, const FluidState& f) {
  const double l_eff = g.length - 0.5 * (g.evaporator.length + g.condenser.length);
  const double k = w.sphere_diameter * w.sphere_diameter * 0.064 / (w.kozeny_constant * 0.36);
  return f.mu_l * l_eff / (f.rho_l * k * g.width * w.thickness * f.h_fg);
}

double vapor_drop_1d(const Geometry& g, const FluidState& f) {
  const double l_eff = g.length - 0.5 * (g.evaporator.length + g.condenser.length);
  const double h = g.vapor_thickness;
  return 12.0 * f.mu_v * l_eff / (f.rho_v * g.width * h * h * h * f.h_fg);
}

bool cell_touches(const Grid& grid, std::size_t cell, const Footprint& fp) {
  const int i = static_cast<int>(cell % static_cast<std::size_t>(grid.nx));
  const int j = static_cast<int>(cell / static_cast<std::size_t>(grid.nx));
  const double x0 = i * grid.dx, x1 = (i + 1) * grid.dx;
  const double y0 = j * grid.dy, y1 = (j + 1) * grid.dy;
  return x0 <= fp.x1() && x1 >= fp.x0 && y0 <= fp.y1() && y1 >= fp.y0;
}

Geometry random_end_mounted(std::mt19937_64& rng) {
  Geometry g;
  g.length = draw(rng, 0.03, 0.08);
  g.width = draw(rng, 0.01, 0.04);
  g.evaporator.length = draw(rng, 0.1, 0.35) * g.length;
  g.evaporator.width = draw(rng, 0.2, 1.0) * g.width;
  g.evaporator.x0 = 0.0;
  g.evaporator.y0 = draw(rng, 0.0, g.width - g.evaporator.width);
  g.condenser.length = draw(rng, 0.1, 0.35) * g.length;
  g.condenser.width = draw(rng, 0.2, 1.0) * g.width;
  g.condenser.x0 = g.length - g.condenser.length;
  g.condenser.y0 = draw(rng, 0.0, g.width - g.condenser.width);
  return g;
}

}  // namespace

TEST_CASE("zero flux gives zero pressure fields") {
  Geometry g;
  const Solved s = solve(g, reference_wick(), saturation_properties(60.0), 0.0, 44, 30);
  for (double v : s.liquid.gauge) CHECK(v == 0.0);
  for (double v : s.vapor.gauge) CHECK(v == 0.0);
  CHECK(s.liquid.phase == Phase::Liquid);
  CHECK(s.vapor.phase == Phase::Vapor);
}

TEST_CASE("full-width strips reproduce the 1D closed-form drops") {
  Geometry g;
  const WickSpec w = reference_wick();
  const FluidState f = saturation_properties(60.0);
  const Solved s = solve(g, w, f, 1.0, 176, 120);
  const PressureDrops d = pressure_drops(s.liquid, s.vapor);

  CHECK(rel_diff(d.liquid, liquid_drop_1d(g, w, f)) < 1e-6);
  CHECK(rel_diff(d.vapor, vapor_drop_1d(g, f)) < 1e-6);
  CHECK(rel_diff(d.liquid, 27.5) < 0.01);
  // 17.4 Pa follows from an older 1.06e-5 vapor viscosity; IAPWS gives 17.8.
  CHECK(rel_diff(d.vapor, 17.4) < 0.03);
  CHECK(d.total == d.liquid + d.vapor);
  CHECK(rel_diff(d.total, 44.9) < 0.02);

  g.vapor_thickness = 0.6e-3;
  const Solved thick = solve(g, w, f, 1.0, 176, 120);
  const double dv_thick = pressure_drops(thick.liquid, thick.vapor).vapor;
  CHECK(rel_diff(dv_thick, d.vapor / 8.0) < 1e-8);
  CHECK(rel_diff(dv_thick, 2.2) < 0.03);
}

TEST_CASE("1D discrepancy shrinks when cells straddle the footprint edges") {
  Geometry g;
  const WickSpec w = reference_wick();
  const FluidState f = saturation_properties(60.0);
  const double ref = liquid_drop_1d(g, w, f);
  double previous = 1.0;
  for (int nx : {13, 26, 52, 104, 208}) {
    const Solved s = solve(g, w, f, 1.0, nx, 9);
    const double err = rel_diff(pressure_drops(s.liquid, s.vapor).liquid, ref);
    CAPTURE(nx);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 0.02);
}

TEST_CASE("mirror-symmetric footprints give an odd liquid field") {
  Geometry g;
  const Grid grid = build_grid(g, 88, 60);
  const Solved s = solve(g, reference_wick(), saturation_properties(45.0), 3.0, 88, 60);
  double scale = 0.0;
  for (double v : s.liquid.gauge) scale = std::max(scale, std::abs(v));
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const double a = s.liquid.gauge[grid.index(i, j)];
      const double b = s.liquid.gauge[grid.index(grid.nx - 1 - i, j)];
      CHECK(std::abs(a + b) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("rereference pins the vapor minimum at p_sat and the liquid to it") {
  Geometry g;
  const FluidState f = saturation_properties(60.0);

  const Solved zero = solve(g, reference_wick(), f, 0.0, 20, 10);
  auto [zl, zv] = rereference(zero.liquid, zero.vapor, f, g);
  for (double v : zl.absolute_values()) CHECK(v == f.p_sat);
  for (double v : zv.absolute_values()) CHECK(v == f.p_sat);

  const Solved s = solve(g, reference_wick(), f, 1.0, 176, 120);
  const PressureDrops before = pressure_drops(s.liquid, s.vapor);
  auto [pl, pv] = rereference(s.liquid, s.vapor, f, g);
  const PressureDrops after = pressure_drops(pl, pv);
  CHECK(before.liquid == after.liquid);
  CHECK(before.vapor == after.vapor);

  const std::vector<double> lv = pl.absolute_values();
  const std::vector<double> vv = pv.absolute_values();
  CHECK(*std::min_element(vv.begin(), vv.end()) == f.p_sat);
  const std::size_t pin = pv.argmin();
  CHECK(lv[pin] == vv[pin]);
  CHECK(*std::max_element(lv.begin(), lv.end()) == doctest::Approx(f.p_sat).epsilon(1e-12));
  CHECK(*std::min_element(lv.begin(), lv.end()) == doctest::Approx(f.p_sat - 27.46).epsilon(1e-4));
  CHECK(pl.offset() + pl.gauge[0] == doctest::Approx(lv[0]).epsilon(1e-14));

  Geometry other = g;
  other.length = 0.05;
  CHECK_THROWS_AS(rereference(s.liquid, s.vapor, f, other), Error);
}

TEST_CASE("pressure drops of constant fields vanish") {
  Geometry g;
  const Grid grid = build_grid(g, 5, 4);
  PressureField c{.grid = grid, .phase = Phase::Liquid, .gauge = std::vector<double>(grid.size(), 7.0)};
  PressureField d{.grid = grid, .phase = Phase::Vapor, .gauge = std::vector<double>(grid.size(), -2.0)};
  const PressureDrops drops = pressure_drops(c, d);
  CHECK(drops.liquid == 0.0);
  CHECK(drops.vapor == 0.0);
  CHECK(drops.total == 0.0);
}

TEST_CASE("drops are linear in power and extrema sit under the footprints") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Geometry g = random_end_mounted(rng);
    WickSpec w = reference_wick();
    w.sphere_diameter = draw(rng, 20e-6, 200e-6);
    w.porosity = draw(rng, 0.3, 0.6);
    const FluidState f = saturation_properties(draw(rng, 20.0, 90.0));
    const double q = draw(rng, 0.5, 40.0);
    const int nx = std::uniform_int_distribution<int>(20, 90)(rng);
    const int ny = std::uniform_int_distribution<int>(10, 60)(rng);
    const Grid grid = build_grid(g, nx, ny);

    const Solved one = solve(g, w, f, q, nx, ny);
    const Solved two = solve(g, w, f, 2.0 * q, nx, ny);
    const PressureDrops d1 = pressure_drops(one.liquid, one.vapor);
    const PressureDrops d2 = pressure_drops(two.liquid, two.vapor);
    CAPTURE(trial);
    CHECK(rel_diff(d2.total, 2.0 * d1.total) <= 1e-9);
    CHECK(d1.liquid > 0.0);
    CHECK(d1.vapor > 0.0);

    CHECK(cell_touches(grid, one.liquid.argmin(), g.evaporator));
    CHECK(cell_touches(grid, one.vapor.argmax(), g.evaporator));
    CHECK(cell_touches(grid, one.liquid.argmax(), g.condenser));
    CHECK(cell_touches(grid, one.vapor.argmin(), g.condenser));
  }
}

TEST_CASE("vapor thickness must be positive") {
  Geometry g;
  const Grid grid = build_grid(g, 10, 10);
  const FluidState f = saturation_properties(60.0);
  const MassFluxField flux = phase_change_flux(grid, g, 1.0, f.h_fg);
  try {
    vapor_pressure(grid, flux, f, 0.0);
    FAIL("expected NonPositive");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPositive);
  }
}
