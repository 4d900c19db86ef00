#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "alpha_channel/geometry.hpp"
#include "alpha_channel/kernel.hpp"
#include "alpha_channel/pressure.hpp"
#include "alpha_channel/profile.hpp"

namespace alpha_channel {

/// Default number of odd modes kept in mean-velocity spectra (k up to 509).
inline constexpr std::size_t kDefaultOddModes = 255;

/// Forcing weight of mode k in the averaged streamwise equation on the
/// orthonormal sine basis: sqrt(2/h) h/(pi1 pi k) ((-1)^k - 1).
double mode_forcing_weight(const ChannelGeometry& geom, std::size_t k);

/// Decay rate nu (pi k/h)^2 of mode k.
double mode_decay_rate(const ChannelGeometry& geom, double nu, std::size_t k);

/// Lag after which the slowest mode's memory has decayed below tail_tol:
/// h^2/(nu pi^2) ln(1/tail_tol).
double history_lag(const ChannelGeometry& geom, double nu, double tail_tol);

/// Mean streamwise velocity at time t as the memory convolution of the
/// pressure-drop history with the kernel, computed mode by mode. The
/// spectrum's tail_bound() bounds the L2 norm of the dropped modes.
SineSpectrum duhamel_spectrum(const ChannelGeometry& geom, double nu,
                              const PressureHistory& pressure, double t, const KernelConfig& cfg,
                              std::size_t odd_modes = kDefaultOddModes);

MeanProfile duhamel_mean_velocity(const ChannelGeometry& geom, double nu,
                                  const PressureHistory& pressure, double t,
                                  std::span<const double> grid, const KernelConfig& cfg,
                                  std::size_t odd_modes = kDefaultOddModes);

/// Steady parabola mu x3 (h - x3) driven by a constant drop, with
/// mu = -p10/(2 pi1 nu).
struct PoiseuilleFlow {
  double mu;
  MeanProfile profile;
};

/// Throws ValidationError for p10 >= 0.
PoiseuilleFlow poiseuille_from_drop(const ChannelGeometry& geom, double nu, double p10,
                                    std::span<const double> grid);

/// Exact sine coefficients of mu x3 (h - x3) for k = 1..k_max.
SineSpectrum poiseuille_spectrum(const ChannelGeometry& geom, double mu, std::size_t k_max);

/// Advance a spectrum from t0 to t1 under the averaged streamwise equation.
/// Each step solves the scalar mode equation exactly with p1 linear between
/// the step endpoints, so piecewise-linear signals aligned to the steps incur
/// no time-discretization error. The last step is shortened to land on t1.
SineSpectrum spectral_evolve(const ChannelGeometry& geom, double nu,
                             const PressureHistory& pressure, const SineSpectrum& initial,
                             double t0, double t1, double dt);

/// Same, with zero forcing (the spanwise averaged component, since p2 = 0).
SineSpectrum spectral_evolve_unforced(const ChannelGeometry& geom, double nu,
                                      const SineSpectrum& initial, double t0, double t1,
                                      double dt);

/// Log-linear fit of the squared L2 distance between two evolutions.
struct DecayFit {
  /// -slope of ln ||A - B||^2 over the whole horizon.
  double fitted_rate = 0.0;
  /// -slope over the last quarter of the horizon.
  double asymptotic_rate = 0.0;
  /// 2 nu / h^2, the rate the Poincare inequality guarantees.
  double poincare_rate = 0.0;
  /// 2 nu (pi/h)^2, the rate of the slowest mode.
  double slowest_mode_rate = 0.0;
  std::vector<double> times;
  std::vector<double> squared_distance;
};

/// Evolves both initial spectra under the same forcing for `horizon` time
/// units, sampling `samples` + 1 instants. Throws DegenerateFitError when the
/// two initial states coincide.
DecayFit contraction_decay_check(const ChannelGeometry& geom, double nu,
                                 const PressureHistory& pressure, const SineSpectrum& init_a,
                                 const SineSpectrum& init_b, double horizon,
                                 std::size_t samples = 64);

/// Velocity field periodic in x1, x2 with no-slip walls, as truncated Fourier
/// data on E(x;k) = exp(2 pi i (k1 x1/pi1 + k2 x2/pi2)) sin(pi k3 x3/h),
/// k3 >= 1. Conjugate symmetry in (k1, k2) is maintained on insertion so the
/// physical field is real.
class PeriodicField {
 public:
  using Key = std::tuple<int, int, int>;
  using Amplitudes = std::array<std::complex<double>, 3>;

  explicit PeriodicField(const ChannelGeometry& geom) : geom_(geom) {}

  /// Sets mode (k1, k2, k3) and its conjugate partner (-k1, -k2, k3). Modes
  /// with k1 = k2 = 0 must have real amplitudes. Throws DomainError for k3 < 1.
  void set_mode(int k1, int k2, int k3, const Amplitudes& u);

  [[nodiscard]] const ChannelGeometry& geometry() const { return geom_; }
  [[nodiscard]] const std::map<Key, Amplitudes>& modes() const { return modes_; }

  /// Component j (0, 1, 2) at a point.
  [[nodiscard]] double velocity(std::size_t j, double x1, double x2, double x3) const;

  /// Divergence from termwise analytic derivatives of the reconstruction.
  [[nodiscard]] double divergence(double x1, double x2, double x3) const;

 private:
  ChannelGeometry geom_;
  std::map<Key, Amplitudes> modes_;
};

/// Scalar samples on a periodic (x1, x2) grid including the periodic copies
/// of the first row and column, times a wall-normal grid. data is indexed
/// [(i1 * n2 + i2) * n3 + i3].
struct PlaneSamples {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::vector<double> x3;
  std::vector<double> data;
};

/// Plane average over one periodic cell at each x3. For Fourier input this is
/// the (k1, k2) = (0, 0) slice of component j.
MeanProfile reynolds_average(const PeriodicField& field, std::size_t component,
                             std::span<const double> grid);

/// Trapezoid average over one periodic cell; throws ValidationError when the
/// periodic copies disagree with the first row/column.
MeanProfile reynolds_average(const ChannelGeometry& geom, const PlaneSamples& samples);

/// Violations of the two relations that incompressibility imposes on every
/// mode: u3(k) k3 pi/h = 0 and 2 pi (u1(k) k1/pi1 + u2(k) k2/pi2) = 0.
struct DivergenceReport {
  double vertical_violation = 0.0;
  double horizontal_violation = 0.0;
  double max_violation = 0.0;
  bool admissible = true;
};

DivergenceReport divergence_constraint_check(const PeriodicField& field, double tol = 0.0);

}  // namespace alpha_channel
