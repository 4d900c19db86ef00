#include "alpha_channel/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "alpha_channel/errors.hpp"
#include "alpha_channel/summation.hpp"

namespace alpha_channel {

double simpson(std::span<const double> values, double dx) {
  const std::size_t n = values.size();
  if (n < 3 || n % 2 == 0) {
    throw ResolutionError("Simpson quadrature needs an odd number (>= 3) of samples");
  }
  CompensatedSum acc;
  acc += values[0];
  acc += values[n - 1];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    acc += (i % 2 == 1 ? 4.0 : 2.0) * values[i];
  }
  return acc.value() * dx / 3.0;
}

std::vector<double> derivative4(std::span<const double> f, double dx) {
  const std::size_t n = f.size();
  if (n < 5) {
    throw ResolutionError("fourth-order derivative needs at least 5 samples");
  }
  std::vector<double> d(n);
  const double s = 1.0 / (12.0 * dx);
  d[0] = s * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
  d[1] = s * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = s * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
  }
  d[n - 2] = -s * (-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]);
  d[n - 1] =
      -s * (-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] - 3.0 * f[n - 5]);
  return d;
}

std::vector<double> second_derivative4_interior(std::span<const double> f, double dx) {
  const std::size_t n = f.size();
  if (n < 5) {
    throw ResolutionError("fourth-order second derivative needs at least 5 samples");
  }
  std::vector<double> d(n - 4);
  const double s = 1.0 / (12.0 * dx * dx);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i - 2] = s * (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]);
  }
  return d;
}

double max_third_difference(std::span<const double> f) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 3 < f.size(); ++i) {
    worst = std::max(worst, std::abs(f[i + 3] - 3.0 * f[i + 2] + 3.0 * f[i + 1] - f[i]));
  }
  return worst;
}

double require_uniform_spacing(std::span<const double> grid, double rel_tol) {
  if (grid.size() < 2) {
    throw ResolutionError("grid needs at least 2 points");
  }
  const double dx = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::abs(grid[i] - grid[i - 1] - dx) > rel_tol * std::abs(dx)) {
      throw ResolutionError("grid is not uniform");
    }
  }
  return dx;
}

}  // namespace alpha_channel
