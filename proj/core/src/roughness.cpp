#include "alpha_channel/roughness.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "alpha_channel/channel_model.hpp"
#include "alpha_channel/errors.hpp"
#include "alpha_channel/summation.hpp"

namespace alpha_channel {

namespace {

constexpr double kPi = std::numbers::pi;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// eps_0 .. eps_n
std::vector<double> epsilon_table(const RoughnessSpec& spec, const ChannelGeometry& geom,
                                  std::size_t n) {
  std::vector<double> eps(n + 1, 0.0);
  const double ratio = spec.h1 / geom.height();
  CompensatedSum acc;
  for (std::size_t l = 1; l <= n; ++l) {
    const double dl = static_cast<double>(l);
    acc += 1.0 / (dl * dl);
    eps[l] = ratio * acc.value();
  }
  return eps;
}

int select_with(const std::vector<double>& eps, std::size_t n, std::size_t k) {
  if (n % 2 == 0) return 0;
  const double inv_k = 1.0 / static_cast<double>(k);
  const double lower = (1.0 - eps[n]) / static_cast<double>(n);
  const double upper = n == 1 ? std::numeric_limits<double>::infinity()
                              : (1.0 - eps[n - 1]) / static_cast<double>(n - 1);
  return (lower < inv_k && inv_k <= upper) ? 1 : 0;
}

void require_index(std::size_t n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + " must be >= 1");
}

double generation_height(const RoughnessSpec& spec, const ChannelGeometry& geom, std::size_t n,
                         PlaneAverage average) {
  const double dn = static_cast<double>(n);
  const double peak = spec.r1_0 * spec.r2_0 / (dn * dn * geom.height());
  return average == PlaneAverage::box_peak ? peak : peak * duty_cycle(spec, geom);
}

double cascade_with(const RoughnessSpec& spec, const ChannelGeometry& geom,
                    const std::vector<double>& eps, std::size_t k, PlaneAverage average) {
  CompensatedSum acc;
  for (std::size_t n = 1; n <= spec.n_max; ++n) {
    if (select_with(eps, n, k) == 0) continue;
    acc += generation(spec, geom, n).effect * generation_height(spec, geom, n, average);
  }
  return 1.0 + acc.value() / geom.height();
}

}  // namespace

void RoughnessSpec::validate(const ChannelGeometry& geom) const {
  if (!positive_finite(c1)) throw ValidationError("roughness c1 must be positive");
  if (!positive_finite(h1)) throw ValidationError("roughness h1 must be positive");
  if (!positive_finite(delta1) || !positive_finite(delta2)) {
    throw ValidationError("roughness delta1, delta2 must be positive");
  }
  if (!positive_finite(r1_0) || !positive_finite(r2_0)) {
    throw ValidationError("roughness r1(0), r2(0) must be positive");
  }
  if (n1 < 1 || n2 < 1) throw ValidationError("roughness N1, N2 must be >= 1");
  if (n_max < 1) throw ValidationError("roughness n_max must be >= 1");
  if (!(2.0 * delta1 < sub_period(*this, geom, 1))) {
    throw ValidationError("roughness box 2 delta1 must be shorter than Pi1/N1");
  }
  if (!(2.0 * delta2 < sub_period(*this, geom, 2))) {
    throw ValidationError("roughness box 2 delta2 must be shorter than Pi2/N2");
  }
  if (h1 / geom.height() > 1e-2) throw ValidationError("roughness h1/h must be <= 1e-2");
}

double sub_period(const RoughnessSpec& spec, const ChannelGeometry& geom, int direction) {
  if (direction == 1) return geom.pi1() / spec.n1;
  if (direction == 2) return geom.pi2() / spec.n2;
  throw DomainError("sub_period direction must be 1 or 2");
}

double box_function(double amplitude, double half_width, double period, double x) {
  const double r = x - period * std::round(x / period);
  return std::abs(r) < half_width ? amplitude : 0.0;
}

double rugosity_profile(const RoughnessSpec& spec, const ChannelGeometry& geom, std::size_t n,
                        double x1, double x2) {
  require_index(n, "rugosity generation n");
  const double dn = static_cast<double>(n);
  const double r1 = box_function(spec.r1_0, spec.delta1, sub_period(spec, geom, 1), dn * x1);
  const double r2 = box_function(spec.r2_0, spec.delta2, sub_period(spec, geom, 2), dn * x2);
  return r1 * r2 / (dn * dn * geom.height());
}

double base_volume(const RoughnessSpec& spec, const ChannelGeometry& geom) {
  return 4.0 * spec.delta1 * spec.delta2 * spec.r1_0 * spec.r2_0 / geom.height();
}

RugosityGeneration generation(const RoughnessSpec& spec, const ChannelGeometry& geom,
                              std::size_t n) {
  require_index(n, "rugosity generation n");
  const double vol1 = base_volume(spec, geom);
  const double n4 = std::pow(static_cast<double>(n), 4);
  return RugosityGeneration{n, vol1 / n4, spec.c1 * n4 / vol1};
}

double epsilon_n(const RoughnessSpec& spec, const ChannelGeometry& geom, std::size_t n) {
  return epsilon_table(spec, geom, n)[n];
}

int selector(const RoughnessSpec& spec, const ChannelGeometry& geom, std::size_t n,
             std::size_t k) {
  require_index(n, "selector n");
  require_index(k, "selector k");
  return select_with(epsilon_table(spec, geom, n), n, k);
}

std::vector<std::size_t> matching_check(const RoughnessSpec& spec, const ChannelGeometry& geom,
                                        std::size_t k, std::size_t n_max) {
  require_index(k, "matching mode k");
  if (k % 2 == 0) throw DomainError("matching is defined for odd k only");
  if (k > n_max) throw DomainError("matching needs k <= n_max");
  const auto eps = epsilon_table(spec, geom, n_max);
  std::vector<std::size_t> hits;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (select_with(eps, n, k) == 1) hits.push_back(n);
  }
  return hits;
}

bool matching_regime_holds(const RoughnessSpec& spec, const ChannelGeometry& geom,
                           std::size_t k) {
  require_index(k, "matching mode k");
  if (k == 1) return true;
  return static_cast<double>(k) * epsilon_n(spec, geom, k - 1) <= 1.0;
}

double update_pressure_drop(double p1, double roughness, const ChannelGeometry& geom) {
  return p1 * (1.0 + roughness / geom.height());
}

double duty_cycle(const RoughnessSpec& spec, const ChannelGeometry& geom) {
  return (2.0 * spec.delta1 / sub_period(spec, geom, 1)) *
         (2.0 * spec.delta2 / sub_period(spec, geom, 2));
}

double aggregate_roughness(const RoughnessSpec& spec, const ChannelGeometry& geom) {
  spec.validate(geom);
  CompensatedSum acc;
  for (std::size_t n = spec.n_max; n >= 1; --n) {
    acc += generation_height(spec, geom, n, PlaneAverage::cell_mean);
  }
  return acc.value();
}

double alpha_from_spec(const RoughnessSpec& spec, const ChannelGeometry& geom) {
  return std::sqrt(spec.c1 * geom.height() / (4.0 * kPi * kPi * spec.delta1 * spec.delta2));
}

double alpha_from_volume(const RoughnessSpec& spec, const ChannelGeometry& geom) {
  return std::sqrt(spec.c1 * spec.r1_0 * spec.r2_0 / (kPi * kPi * base_volume(spec, geom)));
}

double cascade_mode_multiplier(const RoughnessSpec& spec, const ChannelGeometry& geom,
                               std::size_t k, PlaneAverage average) {
  require_index(k, "cascade mode k");
  spec.validate(geom);
  return cascade_with(spec, geom, epsilon_table(spec, geom, spec.n_max), k, average);
}

AlphaUpdate apply_alpha_update_detailed(const SineSpectrum& profile, const RoughnessSpec& spec,
                                        const ChannelGeometry& geom) {
  spec.validate(geom);
  const std::size_t k_max = profile.k_max();
  if (k_max > spec.n_max) {
    throw DomainError("cascade n_max " + std::to_string(spec.n_max) +
                      " is below the spectrum's k_max " + std::to_string(k_max));
  }
  const auto eps = epsilon_table(spec, geom, spec.n_max);
  const double alpha = alpha_from_spec(spec, geom);
  const double h = geom.height();

  std::vector<double> mult(k_max), cell(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k % 2 == 0) {
      mult[k - 1] = helmholtz_multiplier(alpha, k, h);
      cell[k - 1] = 1.0 + duty_cycle(spec, geom) * (mult[k - 1] - 1.0);
      continue;
    }
    std::size_t hits = 0;
    bool own = false;
    for (std::size_t n = 1; n <= spec.n_max; ++n) {
      if (select_with(eps, n, k) == 1) {
        ++hits;
        own = own || n == k;
      }
    }
    if (hits != 1 || !own) {
      throw DomainError("mode k=" + std::to_string(k) +
                        " is not matched to its own rugosity generation; h1/h too large");
    }
    mult[k - 1] = cascade_with(spec, geom, eps, k, PlaneAverage::box_peak);
    cell[k - 1] = cascade_with(spec, geom, eps, k, PlaneAverage::cell_mean);
  }

  auto updated = profile.map_modes([&](std::size_t k) { return mult[k - 1]; });
  return AlphaUpdate{std::move(updated), alpha, duty_cycle(spec, geom), std::move(mult),
                     std::move(cell)};
}

SineSpectrum apply_alpha_update(const SineSpectrum& profile, const RoughnessSpec& spec,
                                const ChannelGeometry& geom) {
  return apply_alpha_update_detailed(profile, spec, geom).updated;
}

}  // namespace alpha_channel
