#pragma once

#include <cstddef>
#include <span>

#include "alpha_channel/averaging.hpp"
#include "alpha_channel/geometry.hpp"
#include "alpha_channel/kernel.hpp"
#include "alpha_channel/pressure.hpp"
#include "alpha_channel/profile.hpp"

namespace alpha_channel {

/// Time average over [0, T] of the mean streamwise velocity, mode by mode.
/// Uses int_0^T I_k dt = (int_0^T p1 dt - I_k(T) + I_k(0)) / rate_k for the
/// memory integral I_k, which is exact for every supported signal.
SineSpectrum time_averaged_spectrum(const ChannelGeometry& geom, double nu,
                                    const PressureHistory& pressure, double window,
                                    const KernelConfig& cfg,
                                    std::size_t odd_modes = kDefaultOddModes);

MeanProfile time_averaged_profile(const ChannelGeometry& geom, double nu,
                                  const PressureHistory& pressure, double window,
                                  std::span<const double> grid, const KernelConfig& cfg,
                                  std::size_t odd_modes = kDefaultOddModes);

/// sqrt(h) ||U||_{L2} / nu with the norm by composite Simpson. The grid must be
/// uniform with an odd number of points.
double reynolds_number(const MeanProfile& profile, double nu);

/// Same, with the norm by Parseval.
double reynolds_number(const SineSpectrum& spectrum, double nu);

/// p_bar h^3 / (pi1 nu^2 pi^2).
double reynolds_bound(const ChannelGeometry& geom, double nu, double p_bar);

struct ReynoldsReport {
  MeanProfile u1_time_avg;
  double window;
  double l2_norm;
  double re;
  double bound;
  bool satisfied;
};

/// Re of the time-averaged profile against the pressure-drop bound. A
/// non-positive `window` selects pressure.default_window().
ReynoldsReport reynolds_bound_check(const ChannelGeometry& geom, double nu,
                                    const PressureHistory& pressure,
                                    const KernelConfig& cfg = {}, double window = 0.0,
                                    std::size_t grid_points = 257);

/// sum_{k=1}^{k_max} 1/(2k-1)^2, accumulated smallest term first.
double odd_series_sum(std::size_t k_max);

struct PoincareReport {
  double lhs;  ///< int (phi')^2
  double rhs;  ///< (1/h^2) int phi^2
  double ratio;
  bool satisfied;
};

/// Checks int (phi')^2 >= h^-2 int phi^2 for samples with zero endpoints on a
/// uniform odd-sized grid. phi' by fourth-order differences, integrals by
/// Simpson; satisfied means lhs >= rhs (1 - grid_tol).
PoincareReport poincare_check(std::span<const double> grid, std::span<const double> values,
                              double grid_tol = 1e-3);

}  // namespace alpha_channel
