#pragma once

#include <cstddef>
#include <vector>

#include "alpha_channel/geometry.hpp"
#include "alpha_channel/profile.hpp"

namespace alpha_channel {

/// Parameters of the self-similar rugosity cascade on the lower wall.
///
/// Generation n is a lattice of boxes of height r1(n x1) r2(n x2)/(n^2 h),
/// where r_j is the sub-period pi_j = Pi_j/N_j periodic box of half-width
/// delta_j and amplitude r_j(0).
struct RoughnessSpec {
  double c1 = 1e-3;       ///< effect constant
  double h1 = 1e-3;       ///< rugosity height scale, h1/h <= 1e-2
  double delta1 = 0.1;
  double delta2 = 0.1;
  double r1_0 = 0.05;
  double r2_0 = 0.05;
  int n1 = 2;
  int n2 = 2;
  std::size_t n_max = 2037;  ///< cascade truncation

  /// 4 k_max + 1, enough margin for mode-local matching up to k_max.
  static std::size_t default_n_max(std::size_t k_max) { return 4 * k_max + 1; }

  /// Throws ValidationError unless all parameters are positive, each box
  /// fits inside its sub-period (2 delta_j < pi_j) and h1/h <= 1e-2.
  void validate(const ChannelGeometry& geom) const;
};

struct RugosityGeneration {
  std::size_t n;
  double volume;  ///< vol_1 / n^4
  double effect;  ///< c1 n^4 / vol_1
};

/// Period pi_j = Pi_j / N_j of the box function in direction j (1 or 2).
double sub_period(const RoughnessSpec& spec, const ChannelGeometry& geom, int direction);

/// Box function of the given half-width and period, centered on multiples of
/// the period.
double box_function(double amplitude, double half_width, double period, double x);

/// Height r1(n x1) r2(n x2) / (n^2 h) of generation n at (x1, x2).
double rugosity_profile(const RoughnessSpec& spec, const ChannelGeometry& geom, std::size_t n,
                        double x1, double x2);

/// vol_1 = 4 delta1 delta2 r1(0) r2(0) / h.
double base_volume(const RoughnessSpec& spec, const ChannelGeometry& geom);

RugosityGeneration generation(const RoughnessSpec& spec, const ChannelGeometry& geom,
                              std::size_t n);

/// (h1/h) sum_{l=1}^n 1/l^2, with epsilon_0 = 0.
double epsilon_n(const RoughnessSpec& spec, const ChannelGeometry& geom, std::size_t n);

/// 1 iff n is odd and h/k lies in ((h - eps_n h)/n, (h - eps_{n-1} h)/(n-1)];
/// for n = 1 the upper end is +infinity.
int selector(const RoughnessSpec& spec, const ChannelGeometry& geom, std::size_t n,
             std::size_t k);

/// All n <= n_max with selector(n, k) = 1. Throws DomainError for even k or
/// k > n_max.
std::vector<std::size_t> matching_check(const RoughnessSpec& spec, const ChannelGeometry& geom,
                                        std::size_t k, std::size_t n_max);

/// True when h/k falls inside generation k's own selector interval, i.e.
/// k eps_{k-1} <= 1. Outside this regime the matching set for mode k is empty.
bool matching_regime_holds(const RoughnessSpec& spec, const ChannelGeometry& geom,
                           std::size_t k);

/// p1 (1 + R/h) for a given aggregate roughness R.
double update_pressure_drop(double p1, double roughness, const ChannelGeometry& geom);

/// Aggregate roughness R as the sum over generations 1..n_max of the
/// cell-averaged rugosity heights.
double aggregate_roughness(const RoughnessSpec& spec, const ChannelGeometry& geom);

/// Fraction (2 delta1 N1/Pi1)(2 delta2 N2/Pi2) of the wall covered by boxes.
double duty_cycle(const RoughnessSpec& spec, const ChannelGeometry& geom);

/// sqrt(c1 h / (4 pi^2 delta1 delta2)).
double alpha_from_spec(const RoughnessSpec& spec, const ChannelGeometry& geom);

/// sqrt(c1 r1(0) r2(0) / (pi^2 vol_1)); equal to alpha_from_spec.
double alpha_from_volume(const RoughnessSpec& spec, const ChannelGeometry& geom);

/// Which plane average replaces r1(k x1) r2(k x2) in the cascade sum.
enum class PlaneAverage {
  /// r1(0) r2(0), the substitution the NS-alpha emergence relies on.
  box_peak,
  /// The literal cell average, r1(0) r2(0) times the duty cycle.
  cell_mean,
};

/// 1 + (1/h) sum_{n <= n_max} e(n) s(n, k) <height of generation n>, for odd k.
double cascade_mode_multiplier(const RoughnessSpec& spec, const ChannelGeometry& geom,
                               std::size_t k, PlaneAverage average = PlaneAverage::box_peak);

struct AlphaUpdate {
  SineSpectrum updated;
  double alpha;
  double duty_cycle;
  /// Net per-mode multiplier applied (index 0 is k = 1).
  std::vector<double> multipliers;
  /// The same with the literal cell-mean plane average, for diagnostics.
  std::vector<double> cell_mean_multipliers;
};

/// Roughness-corrected mean velocity, mode by mode. Odd modes go through the
/// cascade sum; even modes carry no kernel weight and take the Helmholtz
/// symbol of the emergent alpha directly. Throws DomainError when an odd mode
/// is not matched to exactly its own generation.
AlphaUpdate apply_alpha_update_detailed(const SineSpectrum& profile, const RoughnessSpec& spec,
                                        const ChannelGeometry& geom);

SineSpectrum apply_alpha_update(const SineSpectrum& profile, const RoughnessSpec& spec,
                                const ChannelGeometry& geom);

}  // namespace alpha_channel
