#include "alpha_channel/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "alpha_channel/errors.hpp"
#include "alpha_channel/profile.hpp"
#include "alpha_channel/summation.hpp"

namespace alpha_channel {

namespace {

constexpr double kPi = std::numbers::pi;

// Bound on sum_{odd j > k} j^p exp(-a j^2). Consecutive odd terms shrink by
// ((j+2)/j)^p exp(-4a(j+1)), which decreases with j, so the first ratio
// bounds a geometric majorant.
double gaussian_tail(double a, double p, double k) {
  const double next = k + 2.0;
  const double first = std::pow(next, p) * std::exp(-a * next * next);
  if (first == 0.0) return 0.0;
  const double ratio = std::pow((next + 2.0) / next, p) * std::exp(-4.0 * a * (next + 1.0));
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return first / (1.0 - ratio);
}

// Number of odd modes after which the tail of sum j^p exp(-a j^2) falls below
// tol times the leading term.
std::size_t modes_for(double a, double p, double tol, std::size_t k_max) {
  const double lead = std::exp(-a);
  std::size_t modes = 0;
  for (std::size_t k = 1; k <= k_max; k += 2) {
    ++modes;
    if (gaussian_tail(a, p, static_cast<double>(k)) <= tol * lead) break;
  }
  return modes;
}

void require_x_in_channel(const ChannelGeometry& geom, double x) {
  if (!(x >= 0.0 && x <= geom.height())) {
    throw DomainError("kernel position x = " + std::to_string(x) + " is outside [0, h]");
  }
}

void require_time(double t, const KernelConfig& cfg) {
  if (!(t >= cfg.t_floor)) {
    throw RegimeError("kernel time t = " + std::to_string(t) + " is below t_floor = " +
                      std::to_string(cfg.t_floor) +
                      "; pointwise evaluation is only permitted for t >= t_floor");
  }
}

double decay_rate(const ChannelGeometry& geom, double nu) {
  const double w = kPi / geom.height();
  return nu * w * w;
}

KernelDerivatives fixed_derivatives(const ChannelGeometry& geom, double nu, double x, double t,
                                    std::size_t modes) {
  const double h = geom.height();
  const double a = decay_rate(geom, nu) * t;
  const double s = x / h;
  CompensatedSum value, dx, dxx, dt;
  for (std::size_t i = 0; i < modes; ++i) {
    const std::size_t k = 2 * i + 1;
    const double kd = static_cast<double>(k);
    const double wave = kPi * kd / h;
    const double amp = kernel_mode_weight(k, geom.pi1()) * std::exp(-a * kd * kd);
    if (amp == 0.0) break;
    const double sn = sin_pi(kd * s);
    value += amp * sn;
    dx += amp * wave * cos_pi(kd * s);
    dxx += -amp * wave * wave * sn;
    dt += -nu * wave * wave * amp * sn;
  }
  return {value.value(), dx.value(), dxx.value(), dt.value(), modes};
}

double fixed_value(const ChannelGeometry& geom, double nu, double x, double t, std::size_t modes) {
  const double h = geom.height();
  const double a = decay_rate(geom, nu) * t;
  const double s = x / h;
  CompensatedSum value;
  for (std::size_t i = 0; i < modes; ++i) {
    const double kd = static_cast<double>(2 * i + 1);
    const double amp = kernel_mode_weight(2 * i + 1, geom.pi1()) * std::exp(-a * kd * kd);
    if (amp == 0.0) break;
    value += amp * sin_pi(kd * s);
  }
  return value.value();
}

std::size_t derivative_modes(const ChannelGeometry& geom, double nu, double t,
                             const KernelConfig& cfg) {
  const double a = decay_rate(geom, nu) * t;
  return std::max(modes_for(a, 1.0, cfg.tail_tol, cfg.k_max),
                  modes_for(a, -1.0, cfg.tail_tol, cfg.k_max));
}

}  // namespace

KernelConfig KernelConfig::for_channel(const ChannelGeometry& geom, double nu) {
  require_positive_viscosity(nu);
  KernelConfig cfg;
  cfg.t_floor = 1e-6 * geom.height() * geom.height() / nu;
  return cfg;
}

void KernelConfig::validate() const {
  if (k_max < 1) throw ValidationError("kernel.k_max must be >= 1");
  if (!(tail_tol > 0.0)) throw ValidationError("kernel.tail_tol must be positive");
  if (!(t_floor > 0.0)) throw ValidationError("kernel.t_floor must be positive");
}

double kernel_mode_weight(std::size_t k, double pi1) {
  if (k % 2 == 0) return 0.0;
  return -4.0 / (pi1 * static_cast<double>(k) * kPi);
}

double eval_kernel(const ChannelGeometry& geom, double nu, double x, double t,
                   const KernelConfig& cfg) {
  cfg.validate();
  require_positive_viscosity(nu);
  require_x_in_channel(geom, x);
  require_time(t, cfg);

  const double a = decay_rate(geom, nu) * t;
  const double s = x / geom.height();
  const double scale = 4.0 / (geom.pi1() * kPi);
  const double lead = scale * std::exp(-a);
  CompensatedSum sum;
  for (std::size_t k = 1; k <= cfg.k_max; k += 2) {
    const double kd = static_cast<double>(k);
    sum += kernel_mode_weight(k, geom.pi1()) * std::exp(-a * kd * kd) * sin_pi(kd * s);
    const double tail = scale * gaussian_tail(a, -1.0, kd);
    if (tail <= cfg.tail_tol * std::max(std::abs(sum.value()), lead)) break;
  }
  return sum.value();
}

KernelDerivatives kernel_derivatives(const ChannelGeometry& geom, double nu, double x, double t,
                                     const KernelConfig& cfg) {
  cfg.validate();
  require_positive_viscosity(nu);
  require_x_in_channel(geom, x);
  require_time(t, cfg);
  return fixed_derivatives(geom, nu, x, t, derivative_modes(geom, nu, t, cfg));
}

double kernel_time_integral(const ChannelGeometry& geom, double nu, double x,
                            const KernelConfig& cfg) {
  cfg.validate();
  require_positive_viscosity(nu);
  require_x_in_channel(geom, x);
  const double h = geom.height();
  const double s = x / h;
  const double scale = 4.0 * h * h / (geom.pi1() * nu * kPi * kPi * kPi);
  CompensatedSum sum;
  for (std::size_t k = 1; k <= cfg.k_max; k += 2) {
    const double kd = static_cast<double>(k);
    const double memory = h * h / (nu * kPi * kPi * kd * kd);
    sum += kernel_mode_weight(k, geom.pi1()) * memory * sin_pi(kd * s);
    // sum_{odd j >= m} j^-3 <= m^-3 + 1/(4 m^2)
    const double m = kd + 2.0;
    const double tail = scale * (1.0 / (m * m * m) + 1.0 / (4.0 * m * m));
    if (tail <= cfg.tail_tol * std::max(std::abs(sum.value()), scale)) break;
  }
  return sum.value();
}

double kernel_time_integral_closed(const ChannelGeometry& geom, double nu, double x) {
  require_positive_viscosity(nu);
  require_x_in_channel(geom, x);
  return -x * (geom.height() - x) / (2.0 * geom.pi1() * nu);
}

HeatResidual kernel_heat_residual(const ChannelGeometry& geom, double nu, double x, double t,
                                  const KernelConfig& cfg, double dx, double dt) {
  cfg.validate();
  require_positive_viscosity(nu);
  if (!(dx > 0.0 && dt > 0.0)) {
    throw DomainError("heat residual step sizes must be positive");
  }
  if (!(x - dx > 0.0 && x + dx < geom.height())) {
    throw DomainError("heat residual stencil [x - dx, x + dx] must stay inside (0, h)");
  }
  if (!(t - dt >= cfg.t_floor)) {
    throw DomainError("heat residual stencil t - dt falls below t_floor");
  }

  const auto d = fixed_derivatives(geom, nu, x, t, derivative_modes(geom, nu, t, cfg));
  HeatResidual out;
  out.analytic = std::abs(d.dt - nu * d.dxx);

  // One truncation for every stencil point so the difference quotients see
  // the same finite sum.
  const std::size_t modes = derivative_modes(geom, nu, t - dt, cfg);
  const double k0 = fixed_value(geom, nu, x, t, modes);
  const double kt = (fixed_value(geom, nu, x, t + dt, modes) -
                     fixed_value(geom, nu, x, t - dt, modes)) / (2.0 * dt);
  const double kxx = (fixed_value(geom, nu, x + dx, t, modes) - 2.0 * k0 +
                      fixed_value(geom, nu, x - dx, t, modes)) / (dx * dx);
  out.finite_difference = std::abs(kt - nu * kxx);
  return out;
}

double kernel_h_derivative_check(const ChannelGeometry& geom, double nu, double x, double t,
                                 const KernelConfig& cfg, double dh) {
  cfg.validate();
  require_positive_viscosity(nu);
  require_time(t, cfg);
  const double h = geom.height();
  if (!(dh > 0.0 && dh < h)) {
    throw DomainError("h-derivative step dh must lie in (0, h)");
  }
  if (!(x > 0.0 && x < h - dh)) {
    throw DomainError("h-derivative check needs 0 < x < h - dh");
  }
  const auto taller = geom.with_height(h + dh);
  const auto shorter = geom.with_height(h - dh);
  const std::size_t modes = derivative_modes(taller, nu, t, cfg);

  const double fd = (fixed_value(taller, nu, x, t, modes) - fixed_value(shorter, nu, x, t, modes)) /
                    (2.0 * dh);
  const auto d = fixed_derivatives(geom, nu, x, t, modes);
  const double rhs = -(x / h) * d.dx - (2.0 * t / h) * d.dt;
  return std::abs(fd - rhs);
}

double kernel_wall_slope_factor(std::size_t k_max) {
  // Per mode: weight * pi1 = 2((-1)^k - 1)/(k pi); d/dx sin = (k pi/h) cos;
  // (1/h) int_0^h (x/h) cos(k pi x/h) dx = ((-1)^k - 1)/(k pi)^2. Take h = 1.
  CompensatedSum sum;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double kd = static_cast<double>(k);
    const double parity = (k % 2 == 0) ? 0.0 : -2.0;
    const double weight = 2.0 * parity / (kd * kPi);
    const double slope = kd * kPi;
    const double mean_x_cos = parity / (kd * kPi * kd * kPi);
    sum += weight * slope * mean_x_cos;
  }
  return sum.value();
}

}  // namespace alpha_channel
