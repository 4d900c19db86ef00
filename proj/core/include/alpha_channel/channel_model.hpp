#pragma once

#include <span>
#include <vector>

#include "alpha_channel/geometry.hpp"
#include "alpha_channel/profile.hpp"

namespace alpha_channel {

/// Parabolic stationary profile b (1 - y^2/(h/2)^2), y measured from the
/// midplane. Throws DomainError for grid samples outside the walls.
MeanProfile poiseuille_profile(const ChannelGeometry& geom, double b, std::span<const double> grid);

/// Stationary NS-alpha profile
///   a1 (1 - cosh(y/alpha)/cosh(h/(2 alpha))) + a2 (1 - y^2/(h/2)^2).
/// Requires fluid.alpha() > 0 (use poiseuille_profile for alpha = 0).
MeanProfile ns_alpha_profile(const ChannelGeometry& geom, const FluidParams& fluid, double a1,
                             double a2, std::span<const double> grid);

/// cosh(y/alpha) / cosh(h/(2 alpha)) without overflow for h/alpha large.
double cosh_ratio(double y, double h, double alpha);

/// Spectral symbol of (1 - alpha^2 d^2/dx3^2) on mode k.
double helmholtz_multiplier(double alpha, std::size_t k, double h);

/// Output of the NSE to NS-alpha bridge at one instant:
///   V = (1 - alpha^2 d^2/dx3^2) <u1>,
///   Q(x1, x3) = q_quadratic(x3) + x1 * q_slope,
/// q_quadratic = -(<u1>^2 - alpha^2 (d<u1>/dx3)^2)/2, q_slope = p1(t)/pi1.
struct BridgeResult {
  SineSpectrum velocity;
  std::vector<double> grid;
  std::vector<double> q_quadratic;
  double q_slope;
};

/// Uses a 257-point uniform grid when `grid` is empty.
BridgeResult ns_alpha_bridge(const SineSpectrum& profile, const FluidParams& fluid, double p1_at_t,
                             std::span<const double> grid = {});

/// How far a sampled profile is from being stationary.
struct StationaryReport {
  bool analytic_derivatives = false;
  /// Mean of nu * v1'' over the evaluated points (v1 = U - alpha^2 U'').
  double nu_curvature = 0.0;
  /// max |nu * v1'' - nu_curvature|.
  double curvature_deviation = 0.0;
  /// Largest third finite difference of v1 on the evaluated points.
  double max_third_difference = 0.0;
};

/// Needs a uniform grid with >= 5 interior points (>= 7 interior points when
/// alpha > 0 and the profile carries no closed-form shape, since U'' is then
/// itself a finite difference). Throws ResolutionError otherwise.
StationaryReport stationary_residual(const MeanProfile& profile, const FluidParams& fluid);

}  // namespace alpha_channel
