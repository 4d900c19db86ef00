#pragma once

#include <cstddef>

#include "alpha_channel/geometry.hpp"

namespace alpha_channel {

/// Truncation controls for the sine-series kernel
///   K(x,t) = sum_k 2((-1)^k - 1)/(pi1 k pi) exp(-nu (pi k/h)^2 t) sin(pi k x/h).
struct KernelConfig {
  /// Hard cap on the mode index.
  std::size_t k_max = 1'000'000;
  /// Relative tolerance of the geometric tail bound.
  double tail_tol = 1e-12;
  /// Smallest time at which pointwise evaluation is permitted.
  double t_floor = 1e-6;

  /// Default configuration with t_floor = 1e-6 h^2/nu.
  static KernelConfig for_channel(const ChannelGeometry& geom, double nu);

  /// Throws ValidationError unless k_max >= 1, tail_tol > 0, t_floor > 0.
  void validate() const;
};

/// Weight of mode k in K: 2((-1)^k - 1)/(pi1 k pi). Zero for even k.
double kernel_mode_weight(std::size_t k, double pi1);

/// Pointwise K(x, t), x in [0, h] measured from the lower wall. Only odd modes
/// are summed; truncation stops once the tail bound drops below
/// tail_tol * max(|partial sum|, |leading term|).
/// Throws RegimeError for t < cfg.t_floor, DomainError for x outside [0, h].
double eval_kernel(const ChannelGeometry& geom, double nu, double x, double t,
                   const KernelConfig& cfg);

/// Termwise analytic derivatives of K.
struct KernelDerivatives {
  double value = 0.0;
  double dx = 0.0;
  double dxx = 0.0;
  double dt = 0.0;
  /// Number of odd modes summed.
  std::size_t modes = 0;
};

KernelDerivatives kernel_derivatives(const ChannelGeometry& geom, double nu, double x, double t,
                                     const KernelConfig& cfg);

/// Series for int_{-inf}^{t} K(x, t - tau) dtau, summed termwise with the
/// 1/k^3 tail bound.
double kernel_time_integral(const ChannelGeometry& geom, double nu, double x,
                            const KernelConfig& cfg);

/// Closed form -x (h - x) / (2 pi1 nu) of the same integral.
double kernel_time_integral_closed(const ChannelGeometry& geom, double nu, double x);

/// Residual of dK/dt - nu d2K/dx2 = 0, estimated two ways.
struct HeatResidual {
  /// From termwise analytic derivatives; zero up to round-off.
  double analytic = 0.0;
  /// From central differences of the truncated sum; O(dx^2 + dt^2).
  double finite_difference = 0.0;
};

/// Throws DomainError if the stencil leaves (0, h) in x or drops below
/// t_floor in time.
HeatResidual kernel_heat_residual(const ChannelGeometry& geom, double nu, double x, double t,
                                  const KernelConfig& cfg, double dx, double dt);

/// |central difference of K in h  -  (-(x/h) dK/dx - (2t/h) dK/dt)|, the right
/// side from termwise derivatives. O(dh^2).
double kernel_h_derivative_check(const ChannelGeometry& geom, double nu, double x, double t,
                                 const KernelConfig& cfg, double dh);

/// Termwise value of (1/h) int_0^h pi1 (x/h) dK/dx(x, 0) dx, times h, over
/// the first `k_max` modes. This is the factor multiplying R/h in the
/// roughness-corrected pressure drop; it tends to 1.
double kernel_wall_slope_factor(std::size_t k_max);

}  // namespace alpha_channel
