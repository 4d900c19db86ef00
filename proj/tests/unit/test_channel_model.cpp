#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "alpha_channel/channel_model.hpp"
#include "alpha_channel/errors.hpp"
#include "alpha_channel/profile.hpp"

using namespace alpha_channel;

namespace {
const ChannelGeometry unit(1.0, 1.0, 1.0);
constexpr double pi = std::numbers::pi;
}  // namespace

TEST_CASE("poiseuille profile peaks at b on the midplane") {
  const auto p = poiseuille_profile(unit, 2.5, uniform_grid(unit, 5));
  CHECK(p.values()[2] == 2.5);
  CHECK(p.values()[0] == 0.0);
  CHECK(p.values()[4] == 0.0);
  CHECK(p.values()[1] == doctest::Approx(2.5 * 0.75));
}

TEST_CASE("NS-alpha profile vanishes at the walls for random coefficients") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10.0, 10.0), a(1e-3, 2.0);
  for (int i = 0; i < 200; ++i) {
    const FluidParams fluid(1.0, a(rng));
    const auto p = ns_alpha_profile(unit, fluid, u(rng), u(rng), uniform_grid(unit, 9));
    CHECK(std::abs(p.values().front()) <= 1e-14);
    CHECK(std::abs(p.values().back()) <= 1e-14);
  }
}

TEST_CASE("NS-alpha profile needs positive alpha") {
  CHECK_THROWS_AS(ns_alpha_profile(unit, FluidParams(1.0, 0.0), 1.0, 1.0, uniform_grid(unit, 9)),
                  DomainError);
}

TEST_CASE("NS-alpha profile with a1 = 0 is the Poiseuille parabola") {
  const auto grid = uniform_grid(unit, 65);
  const auto p = ns_alpha_profile(unit, FluidParams(1.0, 0.3), 0.0, 1.7, grid);
  const auto q = poiseuille_profile(unit, 1.7, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(p.values()[i] == q.values()[i]);
}

TEST_CASE("cosh ratio survives tiny alpha") {
  CHECK(cosh_ratio(0.5, 1.0, 1e-4) == doctest::Approx(1.0));
  CHECK(cosh_ratio(0.0, 1.0, 1e-4) == 0.0);
  CHECK(cosh_ratio(0.2, 1.0, 0.5) == doctest::Approx(std::cosh(0.4) / std::cosh(1.0)));
}

TEST_CASE("helmholtz multiplier") {
  CHECK(helmholtz_multiplier(0.0, 7, 1.0) == 1.0);
  CHECK(helmholtz_multiplier(0.5, 2, 2.0) == doctest::Approx(1.0 + 0.25 * pi * pi));
}

TEST_CASE("bridge multiplies each mode by the Helmholtz symbol") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n01;
  for (int s = 0; s < 20; ++s) {
    std::vector<double> c(64);
    for (auto& v : c) v = n01(rng);
    const SineSpectrum u(unit, c);
    const FluidParams fluid(0.7, 0.05 + 0.01 * s);
    const auto r = ns_alpha_bridge(u, fluid, -1.3);
    for (std::size_t k = 1; k <= 64; ++k) {
      const double m = 1.0 + fluid.alpha() * fluid.alpha() * std::pow(k * pi, 2);
      CHECK(r.velocity.coeff(k) == doctest::Approx(m * u.coeff(k)).epsilon(1e-13));
    }
    CHECK(r.q_slope == doctest::Approx(-1.3));
    CHECK(r.grid.size() == 257);
  }
}

TEST_CASE("bridge pressure term is the quadratic combination") {
  const SineSpectrum u(unit, {1.0});
  const FluidParams fluid(1.0, 0.2);
  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto r = ns_alpha_bridge(u, fluid, -2.0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = u.value(grid[i]), d = u.derivative(grid[i]);
    CHECK(r.q_quadratic[i] == doctest::Approx(-(v * v - 0.04 * d * d) / 2.0));
  }
}

TEST_CASE("stationary residual on the cosh profile") {
  const FluidParams fluid(0.5, 0.1);
  const auto p = ns_alpha_profile(unit, fluid, 1.0, 2.0, uniform_grid(unit, 257));
  const auto r = stationary_residual(p, fluid);
  CHECK(r.analytic_derivatives);
  CHECK(r.max_third_difference < 1e-12);
  CHECK(r.nu_curvature == doctest::Approx(0.5 * -16.0).epsilon(1e-9));
  CHECK(r.curvature_deviation < 1e-8);
}

TEST_CASE("stationary residual third differences shrink at least at fourth order") {
  const FluidParams fluid(1.0, 0.1);
  std::vector<double> e;
  for (const std::size_t n : {17, 33, 65, 129}) {
    const auto shaped = ns_alpha_profile(unit, fluid, 1.0, 1.0, uniform_grid(unit, n));
    const MeanProfile bare(unit, {shaped.grid().begin(), shaped.grid().end()},
                           {shaped.values().begin(), shaped.values().end()});
    const auto r = stationary_residual(bare, fluid);
    CHECK_FALSE(r.analytic_derivatives);
    e.push_back(r.max_third_difference);
  }
  CHECK(std::log2(e[0] / e[1]) >= 3.6);
  CHECK(std::log2(e[1] / e[2]) >= 3.6);
}

TEST_CASE("stationary residual rejects coarse grids") {
  const FluidParams fluid(1.0, 0.0);
  const auto p = poiseuille_profile(unit, 1.0, uniform_grid(unit, 5));
  CHECK_THROWS_AS(stationary_residual(p, fluid), ResolutionError);
}
