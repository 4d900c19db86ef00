#include "alpha_channel/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "alpha_channel/errors.hpp"
#include "alpha_channel/summation.hpp"

namespace alpha_channel {

double sin_pi(double m) {
  double r = std::fmod(m, 2.0);
  if (r < 0.0) r += 2.0;
  double sign = 1.0;
  if (r >= 1.0) {
    r -= 1.0;
    sign = -1.0;
  }
  if (r == 0.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  return sign * std::sin(std::numbers::pi * r);
}

double cos_pi(double m) {
  double r = std::fmod(std::abs(m), 2.0);
  if (r > 1.0) r = 2.0 - r;
  // r in [0, 1]; cos(pi r) = -cos(pi (1 - r))
  double sign = 1.0;
  if (r > 0.5) {
    r = 1.0 - r;
    sign = -1.0;
  }
  if (r == 0.5) return 0.0;
  if (r < 0.25) return sign * std::cos(std::numbers::pi * r);
  return sign * std::sin(std::numbers::pi * (0.5 - r));
}

std::vector<double> uniform_grid(const ChannelGeometry& geom, std::size_t points) {
  if (points < 2) {
    throw ResolutionError("a wall-normal grid needs at least 2 points");
  }
  std::vector<double> grid(points);
  const double h = geom.height();
  const auto intervals = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = geom.lower() + h * (static_cast<double>(i) / intervals);
  }
  grid.back() = geom.upper();
  return grid;
}

MeanProfile::MeanProfile(const ChannelGeometry& geom, std::vector<double> grid,
                         std::vector<double> values, double time,
                         std::optional<StationaryShape> shape)
    : geom_(geom),
      grid_(std::move(grid)),
      values_(std::move(values)),
      time_(time),
      shape_(shape) {
  if (grid_.size() < 2) {
    throw ValidationError("profile grid needs at least the two wall points");
  }
  if (grid_.size() != values_.size()) {
    throw ValidationError("profile grid and values differ in length");
  }
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (!(grid_[i] > grid_[i - 1])) {
      throw ValidationError("profile grid must be strictly increasing");
    }
  }
  const double tol = 1e-12 * geom_.height();
  if (std::abs(grid_.front() - geom_.lower()) > tol ||
      std::abs(grid_.back() - geom_.upper()) > tol) {
    throw ValidationError("profile grid endpoints must coincide with the walls");
  }
  double scale = 1.0;
  for (const double v : values_) {
    if (!std::isfinite(v)) throw ValidationError("profile contains a non-finite value");
    scale = std::max(scale, std::abs(v));
  }
  if (std::abs(values_.front()) > 1e-12 * scale || std::abs(values_.back()) > 1e-12 * scale) {
    throw ValidationError("profile violates no-slip: wall values must vanish");
  }
}

std::optional<double> MeanProfile::uniform_spacing(double rel_tol) const {
  const double dx = (grid_.back() - grid_.front()) / static_cast<double>(grid_.size() - 1);
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (std::abs(grid_[i] - grid_[i - 1] - dx) > rel_tol * dx) return std::nullopt;
  }
  return dx;
}

SineSpectrum::SineSpectrum(const ChannelGeometry& geom, std::vector<double> coeffs,
                           double tail_bound)
    : geom_(geom), coeffs_(std::move(coeffs)), tail_bound_(tail_bound) {
  if (coeffs_.empty()) {
    throw ValidationError("a sine spectrum needs at least one mode");
  }
  for (const double c : coeffs_) {
    if (!std::isfinite(c)) throw ValidationError("sine spectrum contains a non-finite coefficient");
  }
}

SineSpectrum SineSpectrum::zeros(const ChannelGeometry& geom, std::size_t k_max) {
  return SineSpectrum(geom, std::vector<double>(k_max, 0.0));
}

SineSpectrum SineSpectrum::project(const MeanProfile& profile, std::size_t k_max) {
  const auto dx = profile.uniform_spacing();
  if (!dx) {
    throw ResolutionError("spectral projection requires a uniform grid");
  }
  const std::size_t intervals = profile.size() - 1;
  if (k_max == 0 || k_max >= intervals) {
    throw ResolutionError("spectral projection needs 1 <= k_max < number of grid intervals (" +
                          std::to_string(intervals) + ")");
  }
  const double h = profile.geometry().height();
  const double norm = std::sqrt(2.0 / h) * (h / static_cast<double>(intervals));
  const auto values = profile.values();
  std::vector<double> coeffs(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    CompensatedSum acc;
    for (std::size_t j = 1; j < intervals; ++j) {
      const double m = static_cast<double>(k * j) / static_cast<double>(intervals);
      acc += values[j] * sin_pi(m);
    }
    coeffs[k - 1] = norm * acc.value();
  }
  return SineSpectrum(profile.geometry(), std::move(coeffs));
}

double SineSpectrum::value(double x3) const {
  const double h = geom_.height();
  const double s = (x3 - geom_.lower()) / h;
  CompensatedSum acc;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    acc += coeffs_[i] * sin_pi(static_cast<double>(i + 1) * s);
  }
  return std::sqrt(2.0 / h) * acc.value();
}

double SineSpectrum::derivative(double x3) const {
  const double h = geom_.height();
  const double s = (x3 - geom_.lower()) / h;
  CompensatedSum acc;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    const double k = static_cast<double>(i + 1);
    acc += coeffs_[i] * (std::numbers::pi * k / h) * cos_pi(k * s);
  }
  return std::sqrt(2.0 / h) * acc.value();
}

double SineSpectrum::second_derivative(double x3) const {
  const double h = geom_.height();
  const double s = (x3 - geom_.lower()) / h;
  CompensatedSum acc;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    const double wave = std::numbers::pi * static_cast<double>(i + 1) / h;
    acc += -coeffs_[i] * wave * wave * sin_pi(static_cast<double>(i + 1) * s);
  }
  return std::sqrt(2.0 / h) * acc.value();
}

double SineSpectrum::l2_norm() const {
  CompensatedSum acc;
  for (const double c : coeffs_) acc += c * c;
  return std::sqrt(acc.value());
}

MeanProfile SineSpectrum::to_profile(std::span<const double> grid, double time) const {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!geom_.contains(grid[i])) {
      throw DomainError("grid sample " + std::to_string(grid[i]) + " lies outside the channel");
    }
    values[i] = value(grid[i]);
  }
  return MeanProfile(geom_, std::vector<double>(grid.begin(), grid.end()), std::move(values), time);
}

SineSpectrum SineSpectrum::scaled(double factor) const {
  return map_modes([factor](std::size_t) { return factor; });
}

namespace {

SineSpectrum combine(const SineSpectrum& a, const SineSpectrum& b, double sign) {
  if (a.geometry().height() != b.geometry().height() ||
      a.geometry().lower() != b.geometry().lower()) {
    throw DomainError("cannot combine spectra on different channels");
  }
  const std::size_t n = std::max(a.k_max(), b.k_max());
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < a.k_max(); ++i) out[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.k_max(); ++i) out[i] += sign * b.coeffs()[i];
  return SineSpectrum(a.geometry(), std::move(out), a.tail_bound() + b.tail_bound());
}

}  // namespace

SineSpectrum operator+(const SineSpectrum& a, const SineSpectrum& b) { return combine(a, b, 1.0); }

SineSpectrum operator-(const SineSpectrum& a, const SineSpectrum& b) {
  return combine(a, b, -1.0);
}

}  // namespace alpha_channel
