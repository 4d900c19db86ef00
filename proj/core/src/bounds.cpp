#include "alpha_channel/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "alpha_channel/errors.hpp"
#include "alpha_channel/numerics.hpp"
#include "alpha_channel/summation.hpp"

namespace alpha_channel {

namespace {

constexpr double kPi = std::numbers::pi;

double l2_by_simpson(std::span<const double> grid, std::span<const double> values) {
  const double dx = require_uniform_spacing(grid);
  std::vector<double> sq(values.size());
  std::transform(values.begin(), values.end(), sq.begin(), [](double v) { return v * v; });
  return std::sqrt(simpson(sq, dx));
}

}  // namespace

SineSpectrum time_averaged_spectrum(const ChannelGeometry& geom, double nu,
                                    const PressureHistory& pressure, double window,
                                    const KernelConfig& cfg, std::size_t odd_modes) {
  cfg.validate();
  require_positive_viscosity(nu);
  if (!(window > 0.0)) throw ValidationError("averaging window T must be positive");
  if (odd_modes == 0) throw ValidationError("at least one odd mode is required");

  const std::size_t k_max = 2 * odd_modes - 1;
  const double lag = history_lag(geom, nu, cfg.tail_tol);
  const double forcing = pressure.integral(0.0, window);
  std::vector<double> c(k_max, 0.0);
  for (std::size_t k = 1; k <= k_max; k += 2) {
    const double rate = mode_decay_rate(geom, nu, k);
    const double start = pressure.memory_integral(rate, 0.0, lag);
    const double end = pressure.memory_integral(rate, window, lag);
    c[k - 1] = mode_forcing_weight(geom, k) * (forcing - (end - start)) / (rate * window);
  }
  return SineSpectrum(geom, std::move(c));
}

MeanProfile time_averaged_profile(const ChannelGeometry& geom, double nu,
                                  const PressureHistory& pressure, double window,
                                  std::span<const double> grid, const KernelConfig& cfg,
                                  std::size_t odd_modes) {
  return time_averaged_spectrum(geom, nu, pressure, window, cfg, odd_modes).to_profile(grid);
}

double reynolds_number(const MeanProfile& profile, double nu) {
  require_positive_viscosity(nu);
  const double h = profile.geometry().height();
  return std::sqrt(h) * l2_by_simpson(profile.grid(), profile.values()) / nu;
}

double reynolds_number(const SineSpectrum& spectrum, double nu) {
  require_positive_viscosity(nu);
  return std::sqrt(spectrum.geometry().height()) * spectrum.l2_norm() / nu;
}

double reynolds_bound(const ChannelGeometry& geom, double nu, double p_bar) {
  require_positive_viscosity(nu);
  const double h = geom.height();
  return p_bar * h * h * h / (geom.pi1() * nu * nu * kPi * kPi);
}

ReynoldsReport reynolds_bound_check(const ChannelGeometry& geom, double nu,
                                    const PressureHistory& pressure, const KernelConfig& cfg,
                                    double window, std::size_t grid_points) {
  const double T = window > 0.0 ? window : pressure.default_window();
  const auto spectrum = time_averaged_spectrum(geom, nu, pressure, T, cfg);
  const double re = reynolds_number(spectrum, nu);
  const double bound = reynolds_bound(geom, nu, pressure.bound());
  return ReynoldsReport{spectrum.to_profile(uniform_grid(geom, grid_points)),
                        T,
                        spectrum.l2_norm(),
                        re,
                        bound,
                        re <= bound};
}

double odd_series_sum(std::size_t k_max) {
  if (k_max < 1) throw ValidationError("odd_series_sum needs k_max >= 1");
  CompensatedSum acc;
  for (std::size_t k = k_max; k >= 1; --k) {
    const double odd = 2.0 * static_cast<double>(k) - 1.0;
    acc += 1.0 / (odd * odd);
  }
  return acc.value();
}

PoincareReport poincare_check(std::span<const double> grid, std::span<const double> values,
                              double grid_tol) {
  if (grid.size() != values.size()) {
    throw ValidationError("Poincare check: grid and values differ in length");
  }
  if (grid.size() < 5) {
    throw ResolutionError("Poincare check needs at least 5 samples");
  }
  double scale = 1.0;
  for (const double v : values) scale = std::max(scale, std::abs(v));
  if (std::abs(values.front()) > 1e-12 * scale || std::abs(values.back()) > 1e-12 * scale) {
    throw ValidationError("Poincare check needs phi = 0 at both endpoints");
  }
  const double dx = require_uniform_spacing(grid);
  const double h = grid.back() - grid.front();

  const auto slope = derivative4(values, dx);
  std::vector<double> slope_sq(slope.size()), value_sq(values.size());
  std::transform(slope.begin(), slope.end(), slope_sq.begin(), [](double v) { return v * v; });
  std::transform(values.begin(), values.end(), value_sq.begin(), [](double v) { return v * v; });

  PoincareReport report{};
  report.lhs = simpson(slope_sq, dx);
  report.rhs = simpson(value_sq, dx) / (h * h);
  report.ratio = report.rhs > 0.0 ? report.lhs / report.rhs : 0.0;
  report.satisfied = report.lhs >= report.rhs * (1.0 - grid_tol);
  return report;
}

}  // namespace alpha_channel
