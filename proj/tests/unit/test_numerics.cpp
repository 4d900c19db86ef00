#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "alpha_channel/errors.hpp"
#include "alpha_channel/geometry.hpp"
#include "alpha_channel/numerics.hpp"
#include "alpha_channel/profile.hpp"
#include "alpha_channel/summation.hpp"

using namespace alpha_channel;

TEST_CASE("geometry validation") {
  CHECK_THROWS_AS(ChannelGeometry(0.0, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(ChannelGeometry(1.0, -1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(ChannelGeometry(1.0, 1.0, NAN), ValidationError);
  CHECK_THROWS_AS(require_positive_viscosity(0.0), ValidationError);
  const ChannelGeometry g(2.0, 3.0, 4.0, -1.0);
  CHECK(g.upper() == 1.0);
  CHECK(g.midplane() == 0.0);
  CHECK(g.contains(1.0));
  CHECK_FALSE(g.contains(1.1));
  CHECK(g.with_height(5.0).height() == 5.0);
  CHECK(g.with_pi1(7.0).pi1() == 7.0);
}

TEST_CASE("uniform grid hits the walls exactly") {
  const ChannelGeometry g(0.3, 1.0, 1.0, 0.1);
  const auto grid = uniform_grid(g, 7);
  CHECK(grid.front() == 0.1);
  CHECK(grid.back() == g.upper());
  CHECK(grid.size() == 7);
}

TEST_CASE("mean profile enforces no-slip and ordering") {
  const ChannelGeometry g(1.0, 1.0, 1.0);
  CHECK_THROWS_AS(MeanProfile(g, {0.0, 0.5, 1.0}, {0.1, 1.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(MeanProfile(g, {0.0, 0.7, 0.5, 1.0}, {0.0, 1.0, 1.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(MeanProfile(g, {0.0, 0.5, 0.9}, {0.0, 1.0, 0.0}), ValidationError);
  const MeanProfile p(g, {0.0, 0.5, 1.0}, {0.0, 1.0, 0.0});
  REQUIRE(p.uniform_spacing().has_value());
  CHECK(*p.uniform_spacing() == doctest::Approx(0.5));
}

TEST_CASE("simpson is exact for cubics") {
  std::vector<double> v;
  const double dx = 0.1;
  for (int i = 0; i <= 10; ++i) {
    const double x = i * dx;
    v.push_back(x * x * x - 2.0 * x + 1.0);
  }
  CHECK(simpson(v, dx) == doctest::Approx(0.25 - 1.0 + 1.0).epsilon(1e-14));
  CHECK_THROWS_AS(simpson(std::vector<double>{1.0, 2.0}, dx), ResolutionError);
}

TEST_CASE("fourth-order derivative converges at fourth order") {
  auto error = [](int n) {
    const double dx = 1.0 / n;
    std::vector<double> v;
    for (int i = 0; i <= n; ++i) v.push_back(std::sin(3.0 * i * dx));
    const auto d = derivative4(v, dx);
    double e = 0.0;
    for (int i = 0; i <= n; ++i) e = std::max(e, std::abs(d[i] - 3.0 * std::cos(3.0 * i * dx)));
    return e;
  };
  CHECK(std::log2(error(32) / error(64)) > 3.7);
}

TEST_CASE("second derivative interior and third differences") {
  const double dx = 0.05;
  std::vector<double> quad;
  for (int i = 0; i <= 20; ++i) quad.push_back(2.0 * (i * dx) * (i * dx));
  const auto d2 = second_derivative4_interior(quad, dx);
  CHECK(d2.size() == quad.size() - 4);
  for (const double v : d2) CHECK(v == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(max_third_difference(quad) < 1e-14);
}

TEST_CASE("uniform spacing detection") {
  CHECK_THROWS_AS(require_uniform_spacing(std::vector<double>{0.0, 0.1, 0.3}), ResolutionError);
  CHECK(require_uniform_spacing(std::vector<double>{0.0, 0.25, 0.5}) == doctest::Approx(0.25));
}

TEST_CASE("compensated sum keeps small terms") {
  CompensatedSum s;
  s += 1.0;
  for (int i = 0; i < 1000; ++i) s += 1e-16;
  s += -1.0;
  CHECK(s.value() == doctest::Approx(1e-13).epsilon(1e-6));
}

TEST_CASE("sine spectrum projection, evaluation and Parseval") {
  const ChannelGeometry g(2.0, 1.0, 1.0, -1.0);
  const SineSpectrum s(g, {0.3, -0.2, 0.0, 0.7});
  const auto grid = uniform_grid(g, 33);
  const auto profile = s.to_profile(grid, 1.5);
  CHECK(profile.time() == 1.5);
  const auto back = SineSpectrum::project(profile, 4);
  for (std::size_t k = 1; k <= 4; ++k) CHECK(back.coeff(k) == doctest::Approx(s.coeff(k)).epsilon(1e-12));
  CHECK(s.l2_norm() == doctest::Approx(std::sqrt(0.09 + 0.04 + 0.49)));
  CHECK(std::abs(s.value(-1.0)) < 1e-15);
  CHECK(std::abs(s.value(1.0)) < 1e-15);
  CHECK_THROWS(SineSpectrum::project(profile, 32));

  const double h = 2.0, x = 0.3, c = std::sqrt(2.0 / h), pi = std::numbers::pi;
  double d1 = 0.0, d2 = 0.0;
  for (std::size_t k = 1; k <= 4; ++k) {
    const double w = pi * k / h;
    d1 += s.coeff(k) * c * w * std::cos(w * (x + 1.0));
    d2 -= s.coeff(k) * c * w * w * std::sin(w * (x + 1.0));
  }
  CHECK(s.derivative(x) == doctest::Approx(d1).epsilon(1e-13));
  CHECK(s.second_derivative(x) == doctest::Approx(d2).epsilon(1e-13));
  const auto sum = s + s.scaled(2.0) - s;
  CHECK(sum.coeff(4) == doctest::Approx(1.4));
}

TEST_CASE("sin_pi is exact at integers") {
  for (int m = -5; m <= 5; ++m) CHECK(sin_pi(m) == 0.0);
  CHECK(cos_pi(3.0) == -1.0);
  CHECK(sin_pi(0.5) == doctest::Approx(1.0));
}
