#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include "alpha_channel/averaging.hpp"
#include "alpha_channel/bounds.hpp"
#include "alpha_channel/channel_model.hpp"
#include "alpha_channel/errors.hpp"
#include "alpha_channel/kernel.hpp"
#include "alpha_channel/pressure.hpp"
#include "alpha_channel/profile.hpp"
#include "alpha_channel/roughness.hpp"

#ifndef ALPHA_CHANNEL_CLI
#error "ALPHA_CHANNEL_CLI must point at the alpha-channel executable"
#endif
#ifndef ALPHA_CHANNEL_DEFAULT_CONFIG
#error "ALPHA_CHANNEL_DEFAULT_CONFIG must point at the default config"
#endif

using namespace alpha_channel;

namespace {

constexpr double kPi = std::numbers::pi;

// Tolerances, one per criterion.
constexpr double kTolKernelIntegral = 1e-8;
constexpr double kTolHeatAnalytic = 1e-12;
constexpr double kMinOrder = 1.9;
constexpr double kTolPoiseuille = 1e-6;
constexpr double kTolDuhamelOracle = 1e-6;
constexpr double kContractionRelTol = 0.01;
constexpr int kReynoldsSamples = 500;
constexpr double kTolSeries = 5e-7;
constexpr double kTolAlphaMultiplier = 1e-12;
constexpr double kTolThirdDifference = 1e-8;
constexpr double kTolCurvature = 1e-8;
constexpr double kTolDivergence = 1e-10;
constexpr double kTolPoincareRatio = 1e-6;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double observed_order(double coarse, double fine, double ratio = 2.0) {
  return std::log(coarse / fine) / std::log(ratio);
}

const ChannelGeometry kUnit(1.0, 1.0, 1.0);

Outcome kernel_integral_identity() {
  KernelConfig cfg;
  cfg.tail_tol = 1e-10;
  double worst = 0.0;
  bool walls_ok = true;
  for (const double x : uniform_grid(kUnit, 101)) {
    const double series = kernel_time_integral(kUnit, 1.0, x, cfg);
    const double closed = kernel_time_integral_closed(kUnit, 1.0, x);
    if (closed == 0.0) {
      walls_ok = walls_ok && std::abs(series) < 1e-15;
      continue;
    }
    worst = std::max(worst, std::abs(series - closed) / std::abs(closed));
  }
  return {walls_ok && worst < kTolKernelIntegral, "max rel err " + fmt("%.3e", worst)};
}

Outcome heat_identity() {
  const KernelConfig cfg;
  const std::array<double, 3> steps{0.01, 0.005, 0.0025};
  std::array<double, 3> fd{};
  double analytic = 0.0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto r = kernel_heat_residual(kUnit, 1.0, 0.5, 0.1, cfg, steps[i], steps[i]);
    fd[i] = std::abs(r.finite_difference);
    analytic = std::max(analytic, std::abs(r.analytic));
  }
  const double o1 = observed_order(fd[0], fd[1]);
  const double o2 = observed_order(fd[1], fd[2]);
  return {analytic < kTolHeatAnalytic && o1 >= kMinOrder && o2 >= kMinOrder,
          "analytic " + fmt("%.3e", analytic) + ", orders " + fmt("%.3f", o1) + " " +
              fmt("%.3f", o2)};
}

Outcome h_derivative_identity() {
  const KernelConfig cfg;
  const double coarse = kernel_h_derivative_check(kUnit, 1.0, 0.5, 0.2, cfg, 1e-3);
  const double fine = kernel_h_derivative_check(kUnit, 1.0, 0.5, 0.2, cfg, 5e-4);
  const double order = observed_order(coarse, fine);
  return {order >= kMinOrder, "residuals " + fmt("%.3e", coarse) + " " + fmt("%.3e", fine) +
                                  ", order " + fmt("%.3f", order)};
}

Outcome poiseuille_recovery() {
  const auto grid = uniform_grid(kUnit, 101);
  KernelConfig cfg;
  cfg.tail_tol = 1e-10;
  const auto pressure = PressureHistory::constant(-2.0, 2.0);
  const auto u = duhamel_mean_velocity(kUnit, 1.0, pressure, 1.0, grid, cfg);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst = std::max(worst, std::abs(u.values()[i] - grid[i] * (1.0 - grid[i])));
  }
  const double mu = poiseuille_from_drop(kUnit, 1.0, -2.0, grid).mu;
  return {worst < kTolPoiseuille && mu == 1.0,
          "max abs err " + fmt("%.3e", worst) + ", mu " + fmt("%.17g", mu)};
}

Outcome duhamel_oracle() {
  KernelConfig cfg;
  cfg.tail_tol = 1e-10;
  const double nu = 1.0;
  const double h = kUnit.height();
  const auto pressure = PressureHistory::sinusoid(-1.0, 0.5, 2.0 * kPi, 0.0, 1.5);
  // From rest, the slowest transient after burn-in B is exp(-nu pi^2 B / h^2).
  const double burn_in =
      std::max(5.0 * h * h / (nu * kPi * kPi), h * h / (nu * kPi * kPi) * std::log(1.0 / 1e-10));
  const auto start = SineSpectrum::zeros(kUnit, 2 * kDefaultOddModes - 1);
  const auto oracle = spectral_evolve(kUnit, nu, pressure, start, 0.0, burn_in, 1e-4);
  const auto duhamel = duhamel_spectrum(kUnit, nu, pressure, burn_in, cfg);
  const double diff = (oracle - duhamel).l2_norm();
  return {diff < kTolDuhamelOracle,
          "L2 diff " + fmt("%.3e", diff) + " at t = " + fmt("%.4f", burn_in)};
}

SineSpectrum random_spectrum(std::mt19937_64& rng, std::size_t k_max, double decay = 1.0) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> c(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) c[k - 1] = g(rng) / std::pow(double(k), decay);
  return SineSpectrum(kUnit, std::move(c));
}

Outcome contraction() {
  std::mt19937_64 rng(6);
  const auto pressure = PressureHistory::sinusoid(-1.0, 0.5, 2.0 * kPi, 0.0, 1.5);
  const auto a = random_spectrum(rng, 32);
  const auto b = random_spectrum(rng, 32);
  const auto fit = contraction_decay_check(kUnit, 1.0, pressure, a, b, 1.0);
  const double rel = std::abs(fit.asymptotic_rate / fit.slowest_mode_rate - 1.0);
  return {fit.fitted_rate >= fit.poincare_rate && rel <= kContractionRelTol,
          "fitted " + fmt("%.4f", fit.fitted_rate) + " >= " + fmt("%.4f", fit.poincare_rate) +
              ", asymptotic " + fmt("%.4f", fit.asymptotic_rate) + " vs " +
              fmt("%.4f", fit.slowest_mode_rate)};
}

Outcome reynolds_bound_sweep() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> bound_draw(0.1, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> count(2, 40);
  KernelConfig cfg;
  cfg.tail_tol = 1e-10;
  int satisfied = 0;
  double worst_ratio = 0.0;
  for (int s = 0; s < kReynoldsSamples; ++s) {
    const double p_bar = bound_draw(rng);
    std::vector<double> values(static_cast<std::size_t>(count(rng)));
    for (auto& v : values) v = -p_bar * (0.001 + 0.999 * unit(rng));
    const double dt = 0.05 + unit(rng);
    const auto pressure = PressureHistory::sampled(0.0, dt, std::move(values), p_bar);
    const auto report = reynolds_bound_check(kUnit, 1.0, pressure, cfg);
    satisfied += report.satisfied ? 1 : 0;
    worst_ratio = std::max(worst_ratio, report.re / report.bound);
  }
  const auto spot =
      reynolds_bound_check(kUnit, 1.0, PressureHistory::constant(-2.0, 2.0), cfg, 1.0);
  const bool spot_ok = std::abs(spot.re - 1.0 / std::sqrt(30.0)) < 1e-9 &&
                       std::abs(spot.bound - 2.0 / (kPi * kPi)) < 1e-15 && spot.satisfied;
  return {satisfied == kReynoldsSamples && spot_ok,
          std::to_string(satisfied) + "/" + std::to_string(kReynoldsSamples) +
              " satisfied, worst Re/bound " + fmt("%.4f", worst_ratio) + ", spot Re " +
              fmt("%.12f", spot.re)};
}

Outcome series_identity() {
  const double err = std::abs(odd_series_sum(1'000'000) - kPi * kPi / 8.0);
  return {err < kTolSeries, "|S - pi^2/8| " + fmt("%.3e", err)};
}

Outcome matching_sweep() {
  std::string failures;
  int bad = 0;
  for (const double ratio : {1e-2, 1e-3, 1e-4}) {
    RoughnessSpec spec;
    spec.h1 = ratio;
    spec.n_max = 200;
    int bad_here = 0;
    std::size_t first = 0;
    for (std::size_t k = 1; k <= 99; k += 2) {
      const auto set = matching_check(spec, kUnit, k, 200);
      if (set.size() != 1 || set.front() != k) {
        if (bad_here == 0) first = k;
        ++bad_here;
      }
    }
    if (bad_here > 0) {
      failures += " h1/h=" + fmt("%.0e", ratio) + ": " + std::to_string(bad_here) +
                  " modes fail from k=" + std::to_string(first) + ";";
    }
    bad += bad_here;
  }
  return {bad == 0, bad == 0 ? "150/150 singletons" : "not singleton:" + failures};
}

Outcome alpha_emergence() {
  const double h = 1.0;
  RoughnessSpec spec;
  spec.n_max = RoughnessSpec::default_n_max(255);
  const double alpha = alpha_from_spec(spec, kUnit);

  std::vector<double> ones(255, 1.0);
  const auto update = apply_alpha_update_detailed(SineSpectrum(kUnit, ones), spec, kUnit);
  double worst = 0.0;
  for (std::size_t k = 1; k <= 255; ++k) {
    const double expected = 1.0 + alpha * alpha * std::pow(k * kPi / h, 2);
    worst = std::max(worst, std::abs(update.multipliers[k - 1] / expected - 1.0));
  }

  std::mt19937_64 rng(10);
  const FluidParams fluid(1.0, alpha);
  double bridge_worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    const auto u = random_spectrum(rng, 255, 2.0);
    const auto mine = apply_alpha_update(u, spec, kUnit);
    const auto theirs = ns_alpha_bridge(u, fluid, -1.0).velocity;
    for (std::size_t k = 1; k <= 255; ++k) {
      const double scale = std::max(std::abs(theirs.coeff(k)), 1e-300);
      bridge_worst = std::max(bridge_worst, std::abs(mine.coeff(k) - theirs.coeff(k)) / scale);
    }
  }

  RoughnessSpec unit_spec;
  unit_spec.c1 = kPi * kPi;
  unit_spec.delta1 = unit_spec.delta2 = 0.5;
  const ChannelGeometry wide(1.0, 4.0, 4.0);
  const double unit_alpha = alpha_from_spec(unit_spec, wide);

  return {worst < kTolAlphaMultiplier && bridge_worst < kTolAlphaMultiplier &&
              std::abs(unit_alpha - 1.0) < 1e-15,
          "multiplier rel err " + fmt("%.3e", worst) + ", bridge rel err " +
              fmt("%.3e", bridge_worst) + ", alpha(pi^2,1,1/2) " + fmt("%.17g", unit_alpha)};
}

Outcome stationary_profile() {
  const FluidParams fluid(1.0, 0.1);
  const auto profile = ns_alpha_profile(kUnit, fluid, 1.0, 1.0, uniform_grid(kUnit, 257));
  const auto report = stationary_residual(profile, fluid);
  return {report.max_third_difference < kTolThirdDifference &&
              report.curvature_deviation < kTolCurvature,
          "max third diff " + fmt("%.3e", report.max_third_difference) + ", nu v1'' = " +
              fmt("%.12f", report.nu_curvature) + " +- " + fmt("%.3e", report.curvature_deviation)};
}

Outcome incompressibility() {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> wave(-3, 3);
  std::uniform_int_distribution<int> vertical(1, 4);
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  const ChannelGeometry geom(1.0, 2.0, 1.5);

  double worst_div = 0.0;
  bool flags_ok = true;
  double worst_prediction = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    PeriodicField field(geom);
    for (int m = 0; m < 6; ++m) {
      const int k1 = wave(rng), k2 = wave(rng), k3 = vertical(rng);
      std::complex<double> a(g(rng), g(rng));
      if (k1 == 0 && k2 == 0) a = {g(rng), 0.0};
      // u perpendicular to (k1/pi1, k2/pi2); a mode with k1 = k2 = 0 is free.
      const double w1 = k1 / geom.pi1(), w2 = k2 / geom.pi2();
      PeriodicField::Amplitudes u{};
      if (k1 == 0 && k2 == 0) {
        u = {a, std::complex<double>(g(rng), 0.0), 0.0};
      } else {
        u = {a * w2, -a * w1, 0.0};
      }
      field.set_mode(k1, k2, k3, u);
    }
    const auto ok = divergence_constraint_check(field, 1e-12);
    flags_ok = flags_ok && ok.admissible;
    for (int p = 0; p < 20; ++p) {
      const double x1 = pos(rng) * geom.pi1(), x2 = pos(rng) * geom.pi2(), x3 = pos(rng);
      worst_div = std::max(worst_div, std::abs(field.divergence(x1, x2, x3)));
      flags_ok = flags_ok && field.velocity(2, x1, x2, x3) == 0.0;
    }

    const int k1 = 1 + trial % 3, k2 = trial % 2, k3 = 1 + trial % 4;
    const double u3 = 0.5 + pos(rng);
    PeriodicField vertical_bad(geom);
    vertical_bad.set_mode(k1, k2, k3, {0.0, 0.0, u3});
    const auto rv = divergence_constraint_check(vertical_bad, 1e-12);
    const double predicted_v = u3 * k3 * kPi / geom.height();
    worst_prediction =
        std::max(worst_prediction, std::abs(rv.vertical_violation - predicted_v) / predicted_v);
    flags_ok = flags_ok && !rv.admissible;

    const double u1 = 0.5 + pos(rng);
    PeriodicField horizontal_bad(geom);
    horizontal_bad.set_mode(k1, k2, k3, {u1, 0.0, 0.0});
    const auto rh = divergence_constraint_check(horizontal_bad, 1e-12);
    const double predicted_h = 2.0 * kPi * u1 * k1 / geom.pi1();
    worst_prediction =
        std::max(worst_prediction, std::abs(rh.horizontal_violation - predicted_h) / predicted_h);
    flags_ok = flags_ok && !rh.admissible;
  }
  return {worst_div < kTolDivergence && flags_ok && worst_prediction < 1e-12,
          "max |div u| " + fmt("%.3e", worst_div) + ", violation prediction rel err " +
              fmt("%.3e", worst_prediction)};
}

Outcome poincare() {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> knots(4, 20);
  const auto grid = uniform_grid(kUnit, 2049);
  int satisfied = 0;
  double worst = 1e300;
  for (int s = 0; s < 100; ++s) {
    const int n = knots(rng);
    std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
    for (auto& v : nodes) v = g(rng);
    nodes.front() = nodes.back() = 0.0;
    const double step = 1.0 / n;
    boost::math::interpolators::cardinal_cubic_b_spline<double> spline(nodes.begin(), nodes.end(),
                                                                        0.0, step);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = spline(grid[i]);
    values.front() = values.back() = 0.0;
    const auto r = poincare_check(grid, values);
    satisfied += r.satisfied ? 1 : 0;
    worst = std::min(worst, r.ratio);
  }
  std::vector<double> sine(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) sine[i] = sin_pi(grid[i]);
  const auto r = poincare_check(grid, sine);
  const double ratio_err = std::abs(r.ratio / (kPi * kPi) - 1.0);
  return {satisfied == 100 && ratio_err < kTolPoincareRatio,
          std::to_string(satisfied) + "/100 satisfied (min ratio " + fmt("%.3f", worst) +
              "), sine ratio / pi^2 - 1 = " + fmt("%.3e", ratio_err)};
}

struct Run {
  int status;
  std::string output;
};

Run run_cli(const std::string& command) {
  Run run{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) run.output.append(buf.data(), got);
  const int raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return run;
}

Outcome cli_determinism() {
  const std::string cmd = std::string("NO_COLOR=1 \"") + ALPHA_CHANNEL_CLI +
                          "\" verify --config \"" + ALPHA_CHANNEL_DEFAULT_CONFIG + "\" 2>&1";
  const auto first = run_cli(cmd);
  const auto second = run_cli(cmd);
  const bool same = first.output == second.output && !first.output.empty();
  return {same && first.status == 0 && second.status == 0,
          std::string(same ? "identical" : "different") + " reports, exit codes " +
              std::to_string(first.status) + " " + std::to_string(second.status)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"kernel integral identity", kernel_integral_identity},
      {"heat-equation identity", heat_identity},
      {"h-derivative identity", h_derivative_identity},
      {"Poiseuille recovery", poiseuille_recovery},
      {"Duhamel vs spectral oracle", duhamel_oracle},
      {"contraction", contraction},
      {"Reynolds bound", reynolds_bound_sweep},
      {"odd series identity", series_identity},
      {"matching", matching_sweep},
      {"alpha emergence", alpha_emergence},
      {"stationary NS-alpha profile", stationary_profile},
      {"incompressibility reduction", incompressibility},
      {"Poincare inequality", poincare},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome{false, {}};
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    failed += outcome.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
