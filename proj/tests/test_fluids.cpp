#include <doctest.h>

#include <array>
#include <random>

#include "flatpipe/error.hpp"
#include "flatpipe/fluids.hpp"
#include "support.hpp"

using namespace flatpipe;
using support::rel_diff;

namespace {

// IAPWS-95 saturation states between table nodes (iapws 1.5, evaluated
// offline). Linear interpolation at 5 °C spacing has to stay within 1 %.
struct Reference {
  double t, sigma, rho_l, mu_l, rho_v, mu_v, h_fg, p_sat;
};
constexpr std::array<Reference, 5> kMidNodes{{
    {32.5, 0.0707999, 994.825, 0.000756542, 0.0347818, 9.94059e-06, 2.42387e+06, 4895.82},
    {47.5, 0.0683621, 989.106, 0.000570254, 0.0739145, 1.0433e-05, 2.38798e+06, 10898.8},
    {62.5, 0.0658037, 981.857, 0.000448938, 0.14525, 1.09385e-05, 2.35153e+06, 22371},
    {77.5, 0.0631295, 973.307, 0.000365397, 0.266907, 1.14527e-05, 2.3143e+06, 42814.3},
    {92.5, 0.0603444, 963.602, 0.000305412, 0.462953, 1.19718e-05, 2.27603e+06, 77114.7},
}};

}  // namespace

TEST_CASE("saturation properties at 60 C match steam-table values") {
  const FluidState f = saturation_properties(60.0);
  CHECK(f.temperature == 60.0);
  CHECK(rel_diff(f.sigma, 0.0662) < 1e-3);
  CHECK(rel_diff(f.rho_l, 983.2) < 1e-3);
  CHECK(rel_diff(f.mu_l, 4.67e-4) < 5e-3);
  CHECK(rel_diff(f.rho_v, 0.130) < 5e-3);
  // Older tables list 1.06e-5; IAPWS 2008 gives 1.085e-5.
  CHECK(rel_diff(f.mu_v, 1.06e-5) < 0.03);
  CHECK(rel_diff(f.h_fg, 2.358e6) < 1e-3);
  CHECK(rel_diff(f.p_sat, 1.994e4) < 1e-3);
}

TEST_CASE("saturation properties at 30 C") {
  const FluidState f = saturation_properties(30.0);
  CHECK(rel_diff(f.sigma, 0.0712) < 1e-3);
  CHECK(rel_diff(f.p_sat, 4.25e3) < 1e-3);
  CHECK(rel_diff(f.h_fg, 2.430e6) < 1e-3);
}

TEST_CASE("temperatures outside [10, 95] C are rejected") {
  for (double t : {4.0, 9.999, 95.001, 120.0, -5.0}) {
    CAPTURE(t);
    try {
      (void)saturation_properties(t);
      FAIL("expected OutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::OutOfRange);
      CHECK(e.module() == "fluids");
    }
  }
  CHECK_THROWS_AS((void)saturation_properties(std::nan("")), Error);
  CHECK_NOTHROW((void)saturation_properties(10.0));
  CHECK_NOTHROW((void)saturation_properties(95.0));
}

TEST_CASE("interpolation stays within 1 % of IAPWS-95 between nodes") {
  for (const auto& r : kMidNodes) {
    CAPTURE(r.t);
    const FluidState f = saturation_properties(r.t);
    CHECK(rel_diff(f.sigma, r.sigma) < 0.01);
    CHECK(rel_diff(f.rho_l, r.rho_l) < 0.01);
    CHECK(rel_diff(f.mu_l, r.mu_l) < 0.01);
    CHECK(rel_diff(f.rho_v, r.rho_v) < 0.01);
    CHECK(rel_diff(f.mu_v, r.mu_v) < 0.01);
    CHECK(rel_diff(f.h_fg, r.h_fg) < 0.01);
    CHECK(rel_diff(f.p_sat, r.p_sat) < 0.01);
  }
}

TEST_CASE("node values are exact and interpolation is continuous across nodes") {
  for (double t = 15.0; t <= 90.0; t += 5.0) {
    CAPTURE(t);
    const FluidState at = saturation_properties(t);
    const FluidState lo = saturation_properties(t - 1e-9);
    const FluidState hi = saturation_properties(t + 1e-9);
    for (auto member : {&FluidState::sigma, &FluidState::rho_l, &FluidState::mu_l, &FluidState::rho_v,
                        &FluidState::mu_v, &FluidState::h_fg, &FluidState::p_sat}) {
      CHECK(rel_diff(at.*member, lo.*member) < 1e-6);
      CHECK(rel_diff(at.*member, hi.*member) < 1e-6);
    }
  }
  CHECK(saturation_properties(95.0).p_sat == 84608.0);
  CHECK(saturation_properties(10.0).sigma == 0.0742);
}

TEST_CASE("property monotonicity and positivity over random temperature pairs") {
  std::mt19937_64 rng(20241017);
  for (int trial = 0; trial < 500; ++trial) {
    double t1 = support::draw(rng, 10.0, 95.0);
    double t2 = support::draw(rng, 10.0, 95.0);
    if (std::abs(t1 - t2) < 1e-6) continue;
    if (t1 > t2) std::swap(t1, t2);
    const FluidState a = saturation_properties(t1);
    const FluidState b = saturation_properties(t2);
    CAPTURE(t1);
    CAPTURE(t2);
    CHECK(a.sigma > b.sigma);
    CHECK(a.mu_l > b.mu_l);
    CHECK(a.p_sat < b.p_sat);
    CHECK(a.rho_v < b.rho_v);
    for (const FluidState* f : {&a, &b}) {
      CHECK(f->sigma > 0.0);
      CHECK(f->rho_l > 1000.0 * f->rho_v);
      CHECK(f->mu_v > 0.0);
      CHECK(f->h_fg > 0.0);
    }
  }
}

TEST_CASE("surface tension is strictly decreasing between distinct nodes") {
  for (double t = 10.0; t < 95.0; t += 5.0) {
    CHECK(saturation_properties(t).sigma > saturation_properties(t + 5.0).sigma);
    CHECK(saturation_properties(t).sigma > saturation_properties(t + 2.5).sigma);
  }
}
