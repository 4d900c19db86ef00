#include "alpha_channel/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "alpha_channel/errors.hpp"
#include "alpha_channel/summation.hpp"

namespace alpha_channel {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t modes_to_k_max(std::size_t odd_modes) {
  if (odd_modes == 0) throw ValidationError("at least one odd mode is required");
  return 2 * odd_modes - 1;
}

// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

SineSpectrum evolve_impl(const ChannelGeometry& geom, double nu, const PressureHistory* pressure,
                         const SineSpectrum& initial, double t0, double t1, double dt) {
  require_positive_viscosity(nu);
  if (!(dt > 0.0)) throw ValidationError("spectral_evolve needs dt > 0");
  if (t1 < t0) throw DomainError("spectral_evolve needs t1 >= t0");
  if (initial.geometry().height() != geom.height()) {
    throw DomainError("initial spectrum lives on a channel of different height");
  }

  const std::size_t k_max = initial.k_max();
  std::vector<double> c(initial.coeffs().begin(), initial.coeffs().end());
  std::vector<double> weight(k_max), rate(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    weight[k - 1] = pressure ? mode_forcing_weight(geom, k) : 0.0;
    rate[k - 1] = mode_decay_rate(geom, nu, k);
  }
  std::vector<SegmentWeights> full(k_max);
  for (std::size_t i = 0; i < k_max; ++i) full[i] = exponential_segment_weights(rate[i], dt);

  const double span = t1 - t0;
  const auto steps = static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
  for (std::size_t n = 0; n < steps; ++n) {
    const double ta = t0 + static_cast<double>(n) * dt;
    const double tb = (n + 1 == steps) ? t1 : t0 + static_cast<double>(n + 1) * dt;
    const double len = tb - ta;
    if (len <= 0.0) continue;
    const bool partial = std::abs(len - dt) > 1e-12 * dt;
    const double pa = pressure ? (*pressure)(ta) : 0.0;
    const double pb = pressure ? (*pressure)(tb) : 0.0;
    for (std::size_t i = 0; i < k_max; ++i) {
      const SegmentWeights w = partial ? exponential_segment_weights(rate[i], len) : full[i];
      c[i] = c[i] * w.decay + weight[i] * (w.start_weight * pa + w.end_weight * pb);
    }
  }
  return SineSpectrum(geom, std::move(c), initial.tail_bound());
}

}  // namespace

double mode_forcing_weight(const ChannelGeometry& geom, std::size_t k) {
  if (k % 2 == 0) return 0.0;
  const double h = geom.height();
  return -2.0 * std::sqrt(2.0 / h) * h / (geom.pi1() * kPi * static_cast<double>(k));
}

double mode_decay_rate(const ChannelGeometry& geom, double nu, std::size_t k) {
  const double wave = kPi * static_cast<double>(k) / geom.height();
  return nu * wave * wave;
}

double history_lag(const ChannelGeometry& geom, double nu, double tail_tol) {
  require_positive_viscosity(nu);
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw ValidationError("history truncation needs 0 < tail_tol < 1");
  }
  const double h = geom.height();
  return h * h / (nu * kPi * kPi) * std::log(1.0 / tail_tol);
}

SineSpectrum duhamel_spectrum(const ChannelGeometry& geom, double nu,
                              const PressureHistory& pressure, double t, const KernelConfig& cfg,
                              std::size_t odd_modes) {
  cfg.validate();
  require_positive_viscosity(nu);
  const std::size_t k_max = modes_to_k_max(odd_modes);
  const double lag = history_lag(geom, nu, cfg.tail_tol);

  std::vector<double> c(k_max, 0.0);
  for (std::size_t k = 1; k <= k_max; k += 2) {
    c[k - 1] = mode_forcing_weight(geom, k) *
               pressure.memory_integral(mode_decay_rate(geom, nu, k), t, lag);
  }

  // |c_k| <= |w_k| p_bar / rate_k = 2 sqrt(2h) h^2 p_bar / (pi1 nu pi^3 k^3);
  // sum_{odd k >= m} k^-6 <= m^-6 + 1/(10 m^5).
  const double h = geom.height();
  const double amp =
      2.0 * std::sqrt(2.0 * h) * h * h * pressure.bound() / (geom.pi1() * nu * kPi * kPi * kPi);
  const double m = static_cast<double>(k_max + 2);
  const double tail = amp * std::sqrt(std::pow(m, -6.0) + 0.1 * std::pow(m, -5.0));
  return SineSpectrum(geom, std::move(c), tail);
}

MeanProfile duhamel_mean_velocity(const ChannelGeometry& geom, double nu,
                                  const PressureHistory& pressure, double t,
                                  std::span<const double> grid, const KernelConfig& cfg,
                                  std::size_t odd_modes) {
  return duhamel_spectrum(geom, nu, pressure, t, cfg, odd_modes).to_profile(grid, t);
}

PoiseuilleFlow poiseuille_from_drop(const ChannelGeometry& geom, double nu, double p10,
                                    std::span<const double> grid) {
  require_positive_viscosity(nu);
  if (!(p10 < 0.0)) {
    throw ValidationError("constant pressure drop p10 = " + std::to_string(p10) +
                          " violates p1 < 0");
  }
  const double mu = -p10 / (2.0 * geom.pi1() * nu);
  const double h = geom.height();
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!geom.contains(grid[i])) {
      throw DomainError("grid sample " + std::to_string(grid[i]) + " lies outside the channel");
    }
    const double x = grid[i] - geom.lower();
    values[i] = mu * x * (h - x);
  }
  if (!values.empty()) {
    values.front() = 0.0;
    values.back() = 0.0;
  }
  return {mu, MeanProfile(geom, std::vector<double>(grid.begin(), grid.end()), std::move(values),
                          0.0, StationaryShape{0.0, mu * h * h / 4.0, 0.0})};
}

SineSpectrum poiseuille_spectrum(const ChannelGeometry& geom, double mu, std::size_t k_max) {
  const double h = geom.height();
  std::vector<double> c(k_max, 0.0);
  for (std::size_t k = 1; k <= k_max; k += 2) {
    const double pk = kPi * static_cast<double>(k);
    // x(h-x) = sum 4h^2(1-(-1)^k)/(pi k)^3 sin(pi k x/h); divide by sqrt(2/h).
    c[k - 1] = mu * 8.0 * h * h / (pk * pk * pk) * std::sqrt(h / 2.0);
  }
  return SineSpectrum(geom, std::move(c));
}

SineSpectrum spectral_evolve(const ChannelGeometry& geom, double nu,
                             const PressureHistory& pressure, const SineSpectrum& initial,
                             double t0, double t1, double dt) {
  return evolve_impl(geom, nu, &pressure, initial, t0, t1, dt);
}

SineSpectrum spectral_evolve_unforced(const ChannelGeometry& geom, double nu,
                                      const SineSpectrum& initial, double t0, double t1,
                                      double dt) {
  return evolve_impl(geom, nu, nullptr, initial, t0, t1, dt);
}

DecayFit contraction_decay_check(const ChannelGeometry& geom, double nu,
                                 const PressureHistory& pressure, const SineSpectrum& init_a,
                                 const SineSpectrum& init_b, double horizon,
                                 std::size_t samples) {
  require_positive_viscosity(nu);
  if (!(horizon > 0.0) || samples < 4) {
    throw ValidationError("contraction check needs horizon > 0 and at least 4 samples");
  }
  if ((init_a - init_b).l2_norm() == 0.0) {
    throw DegenerateFitError("contraction check needs two distinct initial states");
  }

  const double h = geom.height();
  DecayFit fit;
  fit.poincare_rate = 2.0 * nu / (h * h);
  fit.slowest_mode_rate = 2.0 * mode_decay_rate(geom, nu, 1);

  SineSpectrum a = init_a;
  SineSpectrum b = init_b;
  const double step = horizon / static_cast<double>(samples);
  std::vector<double> log_d2;
  for (std::size_t n = 0; n <= samples; ++n) {
    const double t = static_cast<double>(n) * step;
    if (n > 0) {
      a = spectral_evolve(geom, nu, pressure, a, t - step, t, step);
      b = spectral_evolve(geom, nu, pressure, b, t - step, t, step);
    }
    const double d = (a - b).l2_norm();
    const double floor = 1e-13 * std::max(a.l2_norm(), b.l2_norm());
    if (d <= floor) break;
    fit.times.push_back(t);
    fit.squared_distance.push_back(d * d);
    log_d2.push_back(std::log(d * d));
  }
  if (fit.times.size() < 4) {
    throw DegenerateFitError("difference fell below round-off before a rate could be fitted");
  }
  fit.fitted_rate = -fit_slope(fit.times, log_d2);
  const std::size_t tail_start = fit.times.size() - std::max<std::size_t>(2, fit.times.size() / 4);
  fit.asymptotic_rate = -fit_slope(std::span(fit.times).subspan(tail_start),
                                   std::span(log_d2).subspan(tail_start));
  return fit;
}

void PeriodicField::set_mode(int k1, int k2, int k3, const Amplitudes& u) {
  if (k3 < 1) throw DomainError("wall-normal index k3 must be >= 1 (no-slip sine basis)");
  if (k1 == 0 && k2 == 0) {
    for (const auto& c : u) {
      if (c.imag() != 0.0) {
        throw ValidationError("the (0, 0) horizontal mode of a real field must be real");
      }
    }
    modes_[{0, 0, k3}] = u;
    return;
  }
  modes_[{k1, k2, k3}] = u;
  modes_[{-k1, -k2, k3}] = {std::conj(u[0]), std::conj(u[1]), std::conj(u[2])};
}

double PeriodicField::velocity(std::size_t j, double x1, double x2, double x3) const {
  if (j > 2) throw DomainError("velocity component index must be 0, 1 or 2");
  const double s = (x3 - geom_.lower()) / geom_.height();
  CompensatedSum acc;
  for (const auto& [key, u] : modes_) {
    const auto [k1, k2, k3] = key;
    const double theta = 2.0 * kPi * (k1 * x1 / geom_.pi1() + k2 * x2 / geom_.pi2());
    const std::complex<double> phase(std::cos(theta), std::sin(theta));
    acc += (u[j] * phase).real() * sin_pi(k3 * s);
  }
  return acc.value();
}

double PeriodicField::divergence(double x1, double x2, double x3) const {
  const double h = geom_.height();
  const double s = (x3 - geom_.lower()) / h;
  CompensatedSum d1, d2, d3;
  for (const auto& [key, u] : modes_) {
    const auto [k1, k2, k3] = key;
    const double theta = 2.0 * kPi * (k1 * x1 / geom_.pi1() + k2 * x2 / geom_.pi2());
    const std::complex<double> phase(std::cos(theta), std::sin(theta));
    const std::complex<double> i2pi(0.0, 2.0 * kPi);
    d1 += (u[0] * i2pi * (k1 / geom_.pi1()) * phase).real() * sin_pi(k3 * s);
    d2 += (u[1] * i2pi * (k2 / geom_.pi2()) * phase).real() * sin_pi(k3 * s);
    d3 += (u[2] * phase).real() * (kPi * k3 / h) * cos_pi(k3 * s);
  }
  return d1.value() + d2.value() + d3.value();
}

MeanProfile reynolds_average(const PeriodicField& field, std::size_t component,
                             std::span<const double> grid) {
  if (component > 2) throw DomainError("velocity component index must be 0, 1 or 2");
  const ChannelGeometry& geom = field.geometry();
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!geom.contains(grid[i])) {
      throw DomainError("grid sample " + std::to_string(grid[i]) + " lies outside the channel");
    }
    const double s = (grid[i] - geom.lower()) / geom.height();
    CompensatedSum acc;
    for (auto it = field.modes().lower_bound({0, 0, 1});
         it != field.modes().end() && std::get<0>(it->first) == 0 && std::get<1>(it->first) == 0;
         ++it) {
      acc += it->second[component].real() * sin_pi(std::get<2>(it->first) * s);
    }
    values[i] = acc.value();
  }
  return MeanProfile(geom, std::vector<double>(grid.begin(), grid.end()), std::move(values));
}

MeanProfile reynolds_average(const ChannelGeometry& geom, const PlaneSamples& samples) {
  const std::size_t n1 = samples.n1, n2 = samples.n2, n3 = samples.x3.size();
  if (n1 < 2 || n2 < 2 || n3 < 2) {
    throw ResolutionError("plane samples need at least 2 points per direction");
  }
  if (samples.data.size() != n1 * n2 * n3) {
    throw ValidationError("plane sample data size does not match n1 * n2 * n3");
  }
  const auto at = [&](std::size_t i1, std::size_t i2, std::size_t i3) {
    return samples.data[(i1 * n2 + i2) * n3 + i3];
  };
  double scale = 0.0;
  for (const double v : samples.data) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * std::max(scale, 1.0);
  for (std::size_t i3 = 0; i3 < n3; ++i3) {
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      if (std::abs(at(0, i2, i3) - at(n1 - 1, i2, i3)) > tol) {
        throw ValidationError("plane samples are not periodic in x1 (endpoint mismatch)");
      }
    }
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      if (std::abs(at(i1, 0, i3) - at(i1, n2 - 1, i3)) > tol) {
        throw ValidationError("plane samples are not periodic in x2 (endpoint mismatch)");
      }
    }
  }
  // On a periodic grid the trapezoid rule is the plain mean over one copy.
  std::vector<double> values(n3);
  const auto cells = static_cast<double>((n1 - 1) * (n2 - 1));
  for (std::size_t i3 = 0; i3 < n3; ++i3) {
    CompensatedSum acc;
    for (std::size_t i1 = 0; i1 + 1 < n1; ++i1) {
      for (std::size_t i2 = 0; i2 + 1 < n2; ++i2) acc += at(i1, i2, i3);
    }
    values[i3] = acc.value() / cells;
  }
  return MeanProfile(geom, samples.x3, std::move(values));
}

DivergenceReport divergence_constraint_check(const PeriodicField& field, double tol) {
  const ChannelGeometry& geom = field.geometry();
  DivergenceReport report;
  for (const auto& [key, u] : field.modes()) {
    const auto [k1, k2, k3] = key;
    report.vertical_violation =
        std::max(report.vertical_violation, std::abs(u[2]) * k3 * kPi / geom.height());
    const std::complex<double> horizontal =
        u[0] * (k1 / geom.pi1()) + u[1] * (k2 / geom.pi2());
    report.horizontal_violation =
        std::max(report.horizontal_violation, 2.0 * kPi * std::abs(horizontal));
  }
  report.max_violation = std::max(report.vertical_violation, report.horizontal_violation);
  report.admissible = report.max_violation <= tol;
  return report;
}

}  // namespace alpha_channel
