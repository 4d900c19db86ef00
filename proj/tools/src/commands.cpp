#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "alpha_channel/averaging.hpp"
#include "alpha_channel/bounds.hpp"
#include "alpha_channel/channel_model.hpp"
#include "alpha_channel/errors.hpp"
#include "alpha_channel/kernel.hpp"
#include "alpha_channel/profile.hpp"
#include "alpha_channel/roughness.hpp"

namespace alpha_channel::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v) { return fmt::format("{:.6e}", v); }

double burn_in_time(const RunConfig& cfg) {
  const double h = cfg.geometry.height();
  const double slow = h * h / (cfg.fluid.nu() * kPi * kPi);
  return std::max(5.0 * slow, slow * std::log(1.0 / cfg.kernel.tail_tol));
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (const double x : v) m = std::max(m, std::abs(x));
  return m;
}

CsvTable build_kernel_table(const RunConfig& cfg, double& worst_integral, double& worst_residual) {
  const auto& g = cfg.geometry;
  const double nu = cfg.fluid.nu();
  for (const double t : cfg.run.t_list) {
    if (!(t >= cfg.kernel.t_floor)) {
      throw ValidationError(fmt::format(
          "t = {} is below kernel.t_floor = {}; pointwise kernel values are only defined for "
          "t >= t_floor",
          t, cfg.kernel.t_floor));
    }
  }
  const auto grid = uniform_grid(g, cfg.run.x_points);
  std::vector<double> series(grid.size()), closed(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i] - g.lower();
    series[i] = kernel_time_integral(g, nu, x, cfg.kernel);
    closed[i] = kernel_time_integral_closed(g, nu, x);
  }
  const double scale = max_abs(closed);
  worst_integral = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst_integral = std::max(worst_integral, std::abs(series[i] - closed[i]) / scale);
  }

  CsvTable csv(cfg, "kernel",
               {"x", "t", "K", "time_integral_series", "time_integral_closed", "heat_residual"});
  csv.comment(fmt::format("tail_tol={} t_floor={}", csv.number(cfg.kernel.tail_tol),
                          csv.number(cfg.kernel.t_floor)));
  worst_residual = 0.0;
  for (const double t : cfg.run.t_list) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto d = kernel_derivatives(g, nu, grid[i] - g.lower(), t, cfg.kernel);
      const double residual = d.dt - nu * d.dxx;
      const double size = std::max({1.0, std::abs(d.dt), std::abs(nu * d.dxx)});
      worst_residual = std::max(worst_residual, std::abs(residual) / size);
      csv.row(std::vector<double>{grid[i], t, d.value, series[i], closed[i], residual});
    }
  }
  return csv;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"kernel", "evolve",   "poiseuille", "bound",
                                              "roughness", "alpha", "profiles",   "verify"};
  return names;
}

int run_command(const std::string& name, const RunConfig& cfg, const Io& io) {
  if (name == "kernel") return cmd_kernel(cfg, io);
  if (name == "evolve") return cmd_evolve(cfg, io);
  if (name == "poiseuille") return cmd_poiseuille(cfg, io);
  if (name == "bound") return cmd_bound(cfg, io);
  if (name == "roughness") return cmd_roughness(cfg, io);
  if (name == "alpha") return cmd_alpha(cfg, io);
  if (name == "profiles") return cmd_profiles(cfg, io);
  if (name == "verify") return cmd_verify(cfg, io);
  throw ValidationError(fmt::format("unknown command '{}'", name));
}

std::string kernel_csv(const RunConfig& cfg, double* worst_integral, double* worst_residual) {
  double wi = 0.0, wr = 0.0;
  const auto csv = build_kernel_table(cfg, wi, wr);
  if (worst_integral != nullptr) *worst_integral = wi;
  if (worst_residual != nullptr) *worst_residual = wr;
  return csv.render();
}

int cmd_kernel(const RunConfig& cfg, const Io& io) {
  double worst_integral = 0.0, worst_residual = 0.0;
  const auto csv = build_kernel_table(cfg, worst_integral, worst_residual);
  emit(io, "kernel", csv, true);
  const double tol = cfg.run.tolerance;
  if (worst_integral > tol || worst_residual > tol) {
    io.err << fmt::format(
        "kernel self-check breached tolerance {}: time integral rel err {}, heat residual {}\n",
        tol, sci(worst_integral), sci(worst_residual));
    return kExitTolerance;
  }
  return kExitOk;
}

int cmd_evolve(const RunConfig& cfg, const Io& io) {
  const auto& g = cfg.geometry;
  const double nu = cfg.fluid.nu();
  const auto pressure = cfg.pressure_history();
  const std::size_t odd = cfg.run.odd_modes;
  const auto grid = uniform_grid(g, cfg.run.grid_points);
  const bool from_rest = cfg.run.initial == "rest";
  const double burn_in = from_rest ? burn_in_time(cfg) : 0.0;

  auto state = from_rest ? SineSpectrum::zeros(g, 2 * odd - 1)
                         : duhamel_spectrum(g, nu, pressure, 0.0, cfg.kernel, odd);

  CsvTable csv(cfg, "evolve", {"x3", "t", "u1_duhamel", "u1_spectral", "abs_diff"});
  csv.comment(fmt::format("initial={} burn_in={} dt={}", cfg.run.initial, csv.number(burn_in),
                          csv.number(cfg.run.dt)));

  const std::size_t steps = cfg.run.t_end > 0.0 ? cfg.run.snapshots : 0;
  double worst = 0.0, previous = 0.0;
  std::size_t checked = 0;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = steps == 0 ? 0.0 : cfg.run.t_end * static_cast<double>(i) / steps;
    if (i > 0) state = spectral_evolve(g, nu, pressure, state, previous, t, cfg.run.dt);
    previous = t;
    const auto duhamel = duhamel_spectrum(g, nu, pressure, t, cfg.kernel, odd);
    const bool check = t >= burn_in;
    checked += check ? 1 : 0;
    for (const double x : grid) {
      const double a = duhamel.value(x);
      const double b = state.value(x);
      if (check) worst = std::max(worst, std::abs(a - b));
      csv.row(std::vector<double>{x, t, a, b, std::abs(a - b)});
    }
  }
  csv.comment(fmt::format("checked_snapshots={} max_abs_diff={}", checked, csv.number(worst)));
  emit(io, "evolve", csv, true);
  if (worst > cfg.run.tolerance) {
    io.err << fmt::format("evolve: max abs_diff {} after burn-in exceeds tolerance {}\n", sci(worst),
                          cfg.run.tolerance);
    return kExitTolerance;
  }
  return kExitOk;
}

int cmd_poiseuille(const RunConfig& cfg, const Io& io) {
  const auto& g = cfg.geometry;
  const double nu = cfg.fluid.nu();
  const double p10 = cfg.pressure.p10;
  const auto grid = uniform_grid(g, cfg.run.grid_points);
  const auto exact = poiseuille_from_drop(g, nu, p10, grid);
  const auto pressure = PressureHistory::constant(p10, cfg.pressure.p_bar);
  const auto duhamel =
      duhamel_mean_velocity(g, nu, pressure, 0.0, grid, cfg.kernel, cfg.run.odd_modes);

  CsvTable csv(cfg, "poiseuille", {"x3", "u1_duhamel", "u1_exact", "abs_diff"});
  csv.comment(fmt::format("p10={} mu={}", csv.number(p10), csv.number(exact.mu)));
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = duhamel.values()[i];
    const double b = exact.profile.values()[i];
    worst = std::max(worst, std::abs(a - b));
    csv.row(std::vector<double>{grid[i], a, b, std::abs(a - b)});
  }
  emit(io, "poiseuille", csv, true);
  if (worst > cfg.run.tolerance) {
    io.err << fmt::format("poiseuille: max abs_diff {} exceeds tolerance {}\n", sci(worst),
                          cfg.run.tolerance);
    return kExitTolerance;
  }
  return kExitOk;
}

int cmd_bound(const RunConfig& cfg, const Io& io) {
  const auto pressure = cfg.pressure_history();
  const auto report = reynolds_bound_check(cfg.geometry, cfg.fluid.nu(), pressure, cfg.kernel,
                                           cfg.run.window, cfg.run.grid_points);
  print_table(io.out, {"quantity", "value"},
              {{"window", fmt::format("{:.17g}", report.window)},
               {"l2_norm", fmt::format("{:.17g}", report.l2_norm)},
               {"Re", fmt::format("{:.17g}", report.re)},
               {"bound", fmt::format("{:.17g}", report.bound)},
               {"satisfied", report.satisfied ? "true" : "false"}});

  CsvTable csv(cfg, "bound", {"x3", "u1_time_avg"});
  csv.comment(fmt::format("window={} Re={} bound={} satisfied={}", csv.number(report.window),
                          csv.number(report.re), csv.number(report.bound),
                          report.satisfied ? "true" : "false"));
  const auto& profile = report.u1_time_avg;
  for (std::size_t i = 0; i < profile.grid().size(); ++i) {
    csv.row(std::vector<double>{profile.grid()[i], profile.values()[i]});
  }
  emit(io, "bound", csv, false);
  return report.satisfied ? kExitOk : kExitTolerance;
}

int cmd_roughness(const RunConfig& cfg, const Io& io) {
  const auto& g = cfg.geometry;
  const auto& spec = cfg.roughness;
  std::vector<std::size_t> ks = cfg.run.k_list;
  if (ks.empty()) {
    for (std::size_t k = 1; k <= cfg.run.k_sweep_max; k += 2) ks.push_back(k);
  }
  for (const auto k : ks) {
    if (k % 2 == 0) {
      throw ValidationError(fmt::format(
          "k = {} is even; even modes have zero kernel coefficient and are not matched", k));
    }
    if (k > spec.n_max) {
      throw ValidationError(fmt::format("k = {} exceeds roughness.n_max = {}", k, spec.n_max));
    }
  }

  const double alpha = alpha_from_spec(spec, g);
  const double aggregate = aggregate_roughness(spec, g);
  print_table(io.out, {"quantity", "value"},
              {{"alpha", fmt::format("{:.17g}", alpha)},
               {"alpha_from_volume", fmt::format("{:.17g}", alpha_from_volume(spec, g))},
               {"duty_cycle", fmt::format("{:.17g}", duty_cycle(spec, g))},
               {"aggregate_roughness", fmt::format("{:.17g}", aggregate)},
               {"p10_updated", fmt::format("{:.17g}",
                                           update_pressure_drop(cfg.pressure.p10, aggregate, g))}});
  io.out << "\n";

  CsvTable csv(cfg, "roughness",
               {"k", "matching_set", "singleton", "multiplier_box_peak", "multiplier_cell_mean",
                "helmholtz"});
  csv.comment(fmt::format("alpha={} n_max={}", csv.number(alpha), spec.n_max));
  std::vector<std::vector<std::string>> rows;
  std::size_t failures = 0;
  for (const auto k : ks) {
    const auto set = matching_check(spec, g, k, spec.n_max);
    const bool singleton = set.size() == 1 && set.front() == k;
    failures += singleton ? 0 : 1;
    const std::string members = set.empty() ? "{}" : fmt::format("{{{}}}", fmt::join(set, " "));
    const double peak = cascade_mode_multiplier(spec, g, k, PlaneAverage::box_peak);
    const double mean = cascade_mode_multiplier(spec, g, k, PlaneAverage::cell_mean);
    const double helm = helmholtz_multiplier(alpha, k, g.height());
    rows.push_back({std::to_string(k), members, singleton ? "yes" : "no", fmt::format("{:.10g}", peak),
                    fmt::format("{:.10g}", mean), fmt::format("{:.10g}", helm)});
    csv.row(std::vector<std::string>{std::to_string(k), members, singleton ? "true" : "false",
                                     csv.number(peak), csv.number(mean), csv.number(helm)});
  }
  print_table(io.out, {"k", "matching", "singleton", "box_peak", "cell_mean", "helmholtz"}, rows);
  emit(io, "roughness", csv, false);
  if (failures > 0) {
    io.err << fmt::format("roughness: {} of {} modes are not matched to their own generation\n",
                          failures, ks.size());
    return kExitTolerance;
  }
  return kExitOk;
}

int cmd_alpha(const RunConfig& cfg, const Io& io) {
  const auto& g = cfg.geometry;
  const double nu = cfg.fluid.nu();
  const auto pressure = cfg.pressure_history();
  const auto u = duhamel_spectrum(g, nu, pressure, cfg.run.t_end, cfg.kernel, cfg.run.odd_modes);

  AlphaUpdate update{SineSpectrum::zeros(g, 1), 0.0, 0.0, {}, {}};
  try {
    update = apply_alpha_update_detailed(u, cfg.roughness, g);
  } catch (const DomainError& e) {
    io.err << "alpha: " << e.what() << "\n";
    return kExitTolerance;
  }
  const auto bridge =
      ns_alpha_bridge(u, FluidParams(nu, update.alpha), pressure(cfg.run.t_end)).velocity;

  const auto grid = uniform_grid(g, cfg.run.grid_points);
  CsvTable csv(cfg, "alpha", {"x3", "u1", "u1_new", "v_bridge", "abs_diff"});
  csv.comment(fmt::format("alpha={} t={} duty_cycle={}", csv.number(update.alpha),
                          csv.number(cfg.run.t_end), csv.number(update.duty_cycle)));
  double worst = 0.0, scale = 0.0;
  for (const double x : grid) {
    const double a = update.updated.value(x);
    const double b = bridge.value(x);
    worst = std::max(worst, std::abs(a - b));
    scale = std::max(scale, std::abs(b));
    csv.row(std::vector<double>{x, u.value(x), a, b, std::abs(a - b)});
  }
  emit(io, "alpha", csv, true);
  if (worst > cfg.run.tolerance * std::max(scale, 1e-300)) {
    io.err << fmt::format("alpha: update and bridge differ by {} (scale {})\n", sci(worst),
                          sci(scale));
    return kExitTolerance;
  }
  return kExitOk;
}

int cmd_profiles(const RunConfig& cfg, const Io& io) {
  const auto& g = cfg.geometry;
  const double alpha =
      cfg.fluid.alpha() > 0.0 ? cfg.fluid.alpha() : alpha_from_spec(cfg.roughness, g);
  const FluidParams fluid(cfg.fluid.nu(), alpha);
  const double a1 = cfg.profiles.a1, a2 = cfg.profiles.a2;
  const auto grid = uniform_grid(g, cfg.profiles.points);
  const auto parabola = poiseuille_profile(g, a2, grid);
  const auto cosh_profile = ns_alpha_profile(g, fluid, a1, a2, grid);
  const auto report = stationary_residual(cosh_profile, fluid);

  const double h = g.height();
  CsvTable csv(cfg, "profiles", {"x3", "u_poiseuille", "u_ns_alpha", "v1"});
  csv.comment(fmt::format("alpha={} a1={} a2={}", csv.number(alpha), csv.number(a1),
                          csv.number(a2)));
  csv.comment(fmt::format("nu_v1_curvature={} curvature_deviation={} max_third_difference={}",
                          csv.number(report.nu_curvature), csv.number(report.curvature_deviation),
                          csv.number(report.max_third_difference)));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double y = grid[i] - g.midplane();
    const double u2 = -a1 * cosh_ratio(y, h, alpha) / (alpha * alpha) - 8.0 * a2 / (h * h);
    const double v1 = cosh_profile.values()[i] - alpha * alpha * u2;
    csv.row(std::vector<double>{grid[i], parabola.values()[i], cosh_profile.values()[i], v1});
  }
  emit(io, "profiles", csv, true);
  const double curvature_scale = std::max(std::abs(report.nu_curvature), 1.0);
  if (report.max_third_difference > cfg.run.tolerance ||
      report.curvature_deviation > cfg.run.tolerance * curvature_scale) {
    io.err << fmt::format("profiles: stationary residual third difference {}, curvature spread {}\n",
                          sci(report.max_third_difference), sci(report.curvature_deviation));
    return kExitTolerance;
  }
  return kExitOk;
}

}  // namespace alpha_channel::cli
