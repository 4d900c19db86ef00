#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "alpha_channel/geometry.hpp"

namespace alpha_channel {

/// `points` equally spaced wall-normal samples, endpoints exactly on the walls.
std::vector<double> uniform_grid(const ChannelGeometry& geom, std::size_t points);

/// Closed-form description of a stationary profile
///   U = a1 (1 - cosh(y/alpha)/cosh(h/(2 alpha))) + a2 (1 - y^2/(h/2)^2),
/// y measured from the midplane. alpha = 0 requires a1 = 0 (Poiseuille).
struct StationaryShape {
  double a1 = 0.0;
  double a2 = 0.0;
  double alpha = 0.0;
};

/// Wall-normal profile of the averaged streamwise velocity at one instant.
class MeanProfile {
 public:
  /// Validates: grid strictly increasing, endpoints on the walls, values
  /// vanish at both walls (no-slip). Throws ValidationError otherwise.
  MeanProfile(const ChannelGeometry& geom, std::vector<double> grid, std::vector<double> values,
              double time = 0.0, std::optional<StationaryShape> shape = std::nullopt);

  [[nodiscard]] const ChannelGeometry& geometry() const { return geom_; }
  [[nodiscard]] std::span<const double> grid() const { return grid_; }
  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] double time() const { return time_; }
  [[nodiscard]] std::size_t size() const { return grid_.size(); }
  [[nodiscard]] const std::optional<StationaryShape>& shape() const { return shape_; }

  /// Grid spacing if the grid is uniform to `rel_tol`, otherwise nullopt.
  [[nodiscard]] std::optional<double> uniform_spacing(double rel_tol = 1e-9) const;

 private:
  ChannelGeometry geom_;
  std::vector<double> grid_;
  std::vector<double> values_;
  double time_;
  std::optional<StationaryShape> shape_;
};

/// Coefficients c_k (k = 1..k_max) on the orthonormal basis
/// sqrt(2/h) sin(pi k (x3 - x3_lower)/h). Index 0 of `coeffs()` is mode k=1.
class SineSpectrum {
 public:
  SineSpectrum(const ChannelGeometry& geom, std::vector<double> coeffs, double tail_bound = 0.0);

  /// All-zero spectrum with `k_max` modes.
  static SineSpectrum zeros(const ChannelGeometry& geom, std::size_t k_max);

  /// Exact discrete sine transform of samples on a uniform grid with N
  /// intervals. Exact for sine polynomials of degree < N; requires k_max < N.
  static SineSpectrum project(const MeanProfile& profile, std::size_t k_max);

  [[nodiscard]] const ChannelGeometry& geometry() const { return geom_; }
  [[nodiscard]] std::size_t k_max() const { return coeffs_.size(); }
  [[nodiscard]] double coeff(std::size_t k) const { return coeffs_.at(k - 1); }
  [[nodiscard]] std::span<const double> coeffs() const { return coeffs_; }

  /// Bound on the L2 norm of the modes dropped by truncation, as reported by
  /// whoever produced the spectrum (0 when the spectrum is exact).
  [[nodiscard]] double tail_bound() const { return tail_bound_; }

  [[nodiscard]] double value(double x3) const;
  [[nodiscard]] double derivative(double x3) const;
  [[nodiscard]] double second_derivative(double x3) const;

  /// L2([x3_lower, x3_upper]) norm by Parseval.
  [[nodiscard]] double l2_norm() const;

  [[nodiscard]] MeanProfile to_profile(std::span<const double> grid, double time = 0.0) const;

  /// Mode-wise product with `multiplier(k)`.
  template <typename Fn>
  [[nodiscard]] SineSpectrum map_modes(Fn&& multiplier) const {
    std::vector<double> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out[i] = coeffs_[i] * multiplier(i + 1);
    }
    return SineSpectrum(geom_, std::move(out), tail_bound_);
  }

  [[nodiscard]] SineSpectrum scaled(double factor) const;

  friend SineSpectrum operator+(const SineSpectrum& a, const SineSpectrum& b);
  friend SineSpectrum operator-(const SineSpectrum& a, const SineSpectrum& b);

 private:
  ChannelGeometry geom_;
  std::vector<double> coeffs_;
  double tail_bound_;
};

/// sin(pi * m) for m = k (x - x_lower)/h, reduced modulo 2 before the call so
/// that integer arguments give exact zeros and large k keeps full accuracy.
double sin_pi(double m);
double cos_pi(double m);

}  // namespace alpha_channel
