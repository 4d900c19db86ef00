#include "alpha_channel/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "alpha_channel/errors.hpp"
#include "alpha_channel/numerics.hpp"

namespace alpha_channel {

namespace {

void require_inside(const ChannelGeometry& geom, std::span<const double> grid) {
  for (const double x : grid) {
    if (!geom.contains(x)) {
      throw DomainError("grid sample " + std::to_string(x) + " lies outside the walls [" +
                        std::to_string(geom.lower()) + ", " + std::to_string(geom.upper()) + "]");
    }
  }
}

double parabola(double y, double half_height) {
  const double r = y / half_height;
  return 1.0 - r * r;
}

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

// Wall samples are forced to exactly zero; the closed forms only vanish
// there up to round-off.
void pin_walls(std::vector<double>& values) {
  values.front() = 0.0;
  values.back() = 0.0;
}

double analytic_second_derivative(const StationaryShape& shape, double y, double h) {
  double out = -8.0 * shape.a2 / (h * h);
  if (shape.a1 != 0.0) {
    out -= shape.a1 * cosh_ratio(y, h, shape.alpha) / (shape.alpha * shape.alpha);
  }
  return out;
}

}  // namespace

double cosh_ratio(double y, double h, double alpha) {
  const double ay = std::abs(y);
  return std::exp((ay - 0.5 * h) / alpha) * (1.0 + std::exp(-2.0 * ay / alpha)) /
         (1.0 + std::exp(-h / alpha));
}

double helmholtz_multiplier(double alpha, std::size_t k, double h) {
  const double wave = std::numbers::pi * static_cast<double>(k) / h;
  return 1.0 + alpha * alpha * wave * wave;
}

MeanProfile poiseuille_profile(const ChannelGeometry& geom, double b,
                               std::span<const double> grid) {
  require_inside(geom, grid);
  const double mid = geom.midplane();
  const double half = 0.5 * geom.height();
  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(),
                 [&](double x) { return b * parabola(x - mid, half); });
  if (!values.empty()) pin_walls(values);
  return MeanProfile(geom, to_vector(grid), std::move(values), 0.0,
                     StationaryShape{0.0, b, 0.0});
}

MeanProfile ns_alpha_profile(const ChannelGeometry& geom, const FluidParams& fluid, double a1,
                             double a2, std::span<const double> grid) {
  if (fluid.alpha() <= 0.0) {
    throw DomainError("ns_alpha_profile needs alpha > 0; use poiseuille_profile for alpha = 0");
  }
  require_inside(geom, grid);
  const double mid = geom.midplane();
  const double h = geom.height();
  const double alpha = fluid.alpha();
  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), [&](double x) {
    const double y = x - mid;
    return a1 * (1.0 - cosh_ratio(y, h, alpha)) + a2 * parabola(y, 0.5 * h);
  });
  if (!values.empty()) pin_walls(values);
  return MeanProfile(geom, to_vector(grid), std::move(values), 0.0,
                     StationaryShape{a1, a2, alpha});
}

BridgeResult ns_alpha_bridge(const SineSpectrum& profile, const FluidParams& fluid,
                             double p1_at_t, std::span<const double> grid) {
  const ChannelGeometry& geom = profile.geometry();
  const double alpha = fluid.alpha();
  const double h = geom.height();

  std::vector<double> samples =
      grid.empty() ? uniform_grid(geom, 257) : std::vector<double>(grid.begin(), grid.end());
  require_inside(geom, samples);

  std::vector<double> q(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double u = profile.value(samples[i]);
    const double du = profile.derivative(samples[i]);
    q[i] = -0.5 * (u * u - alpha * alpha * du * du);
  }
  return BridgeResult{
      profile.map_modes([&](std::size_t k) { return helmholtz_multiplier(alpha, k, h); }),
      std::move(samples), std::move(q), p1_at_t / geom.pi1()};
}

StationaryReport stationary_residual(const MeanProfile& profile, const FluidParams& fluid) {
  const std::size_t n = profile.size();
  if (n < 7) {
    throw ResolutionError("stationary residual needs at least 5 interior grid points");
  }
  const auto spacing = profile.uniform_spacing();
  if (!spacing) {
    throw ResolutionError("stationary residual needs a uniform grid");
  }
  const double dx = *spacing;
  const double alpha = fluid.alpha();
  const double h = profile.geometry().height();
  const double mid = profile.geometry().midplane();
  const auto grid = profile.grid();
  const auto u = profile.values();

  StationaryReport report;
  std::vector<double> v1;
  if (alpha == 0.0) {
    v1.assign(u.begin(), u.end());
    report.analytic_derivatives = profile.shape().has_value();
  } else if (const auto& shape = profile.shape(); shape && (shape->a1 == 0.0 || shape->alpha > 0.0)) {
    report.analytic_derivatives = true;
    v1.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      v1[i] = u[i] - alpha * alpha * analytic_second_derivative(*shape, grid[i] - mid, h);
    }
  } else {
    if (n < 11) {
      throw ResolutionError(
          "finite-difference stationary residual with alpha > 0 needs at least 9 interior points");
    }
    const auto upp = second_derivative4_interior(u, dx);
    v1.resize(upp.size());
    for (std::size_t i = 0; i < upp.size(); ++i) {
      v1[i] = u[i + 2] - alpha * alpha * upp[i];
    }
  }

  const auto curvature = second_derivative4_interior(v1, dx);
  double sum = 0.0;
  for (const double c : curvature) sum += fluid.nu() * c;
  report.nu_curvature = sum / static_cast<double>(curvature.size());
  for (const double c : curvature) {
    report.curvature_deviation =
        std::max(report.curvature_deviation, std::abs(fluid.nu() * c - report.nu_curvature));
  }
  report.max_third_difference = max_third_difference(v1);
  return report;
}

}  // namespace alpha_channel
