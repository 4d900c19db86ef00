#include "config.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "alpha_channel/errors.hpp"

namespace alpha_channel::cli {

using nlohmann::json;

namespace {

const char* kind(const json& v) {
  if (v.is_object()) return "object";
  if (v.is_array()) return "array";
  if (v.is_string()) return "string";
  if (v.is_boolean()) return "boolean";
  if (v.is_number()) return "number";
  return "null";
}

bool same_kind(const json& a, const json& b) {
  return (a.is_number() && b.is_number()) || std::string(kind(a)) == kind(b);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

double number(const json& doc, const char* section, const char* key) {
  return doc.at(section).at(key).get<double>();
}

std::size_t count(const json& doc, const char* section, const char* key) {
  const double v = number(doc, section, key);
  if (!(v >= 0.0) || std::floor(v) != v) {
    throw ValidationError(fmt::format("{}.{} must be a non-negative integer", section, key));
  }
  return static_cast<std::size_t>(v);
}

ChannelGeometry geometry_from(const json& doc) {
  return ChannelGeometry(number(doc, "geometry", "h"), number(doc, "geometry", "pi1"),
                         number(doc, "geometry", "pi2"), number(doc, "geometry", "x3_lower"));
}

FluidParams fluid_from(const json& doc) {
  return FluidParams(number(doc, "fluid", "nu"), number(doc, "fluid", "alpha"));
}

}  // namespace

json default_document() {
  return json{
      {"geometry", {{"h", 1.0}, {"pi1", 1.0}, {"pi2", 1.0}, {"x3_lower", 0.0}}},
      {"fluid", {{"nu", 1.0}, {"alpha", 0.0}}},
      {"pressure",
       {{"type", "constant"},
        {"p10", -1.0},
        {"mean", -1.0},
        {"amplitude", 0.0},
        {"omega", 2.0 * std::numbers::pi},
        {"phase", 0.0},
        {"t0", 0.0},
        {"dt", 0.1},
        {"values", json::array()},
        {"p_bar", 1.0}}},
      {"kernel", {{"k_max", 1000000}, {"tail_tol", 1e-10}, {"t_floor", 1e-6}}},
      {"roughness",
       {{"c1", 1e-3},
        {"h1", 1e-3},
        {"delta1", 0.1},
        {"delta2", 0.1},
        {"r1_0", 0.05},
        {"r2_0", 0.05},
        {"n1", 2},
        {"n2", 2},
        {"n_max", 2037}}},
      {"run",
       {{"tolerance", 1e-6},
        {"t_end", 3.0},
        {"dt", 1e-3},
        {"snapshots", 6},
        {"initial", "rest"},
        {"grid_points", 101},
        {"x_points", 11},
        {"t_list", {0.01, 0.1, 1.0}},
        {"odd_modes", 255},
        {"k_sweep_max", 99},
        {"k_list", json::array()},
        {"window", 0.0}}},
      {"profiles", {{"a1", 1.0}, {"a2", 1.0}, {"points", 257}}},
      {"output", {{"directory", ""}, {"precision", 17}}},
  };
}

void merge_checked(json& base, const json& overlay, const std::string& path) {
  if (!overlay.is_object()) {
    throw ValidationError(fmt::format("config {} must be a JSON object",
                                      path.empty() ? "document" : "'" + path + "'"));
  }
  for (const auto& [key, value] : overlay.items()) {
    const std::string where = join(path, key);
    if (!base.contains(key)) throw ValidationError(fmt::format("unknown config key '{}'", where));
    json& slot = base[key];
    if (!same_kind(slot, value)) {
      throw ValidationError(
          fmt::format("config key '{}' expects {}, got {}", where, kind(slot), kind(value)));
    }
    if (slot.is_object()) {
      merge_checked(slot, value, where);
    } else {
      slot = value;
    }
  }
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ValidationError(fmt::format("--set expects key=value, got '{}'", assignment));
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;

  json overlay = value;
  std::vector<std::string> parts;
  std::stringstream ss(key);
  for (std::string part; std::getline(ss, part, '.');) {
    if (part.empty()) throw ValidationError(fmt::format("malformed --set key '{}'", key));
    parts.push_back(part);
  }
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) overlay = json{{*it, overlay}};
  merge_checked(doc, overlay);
}

RunConfig config_from_document(json doc) {
  const auto& p = doc.at("pressure");
  PressureSettings pressure{p.at("type").get<std::string>(),
                            p.at("p10").get<double>(),
                            p.at("mean").get<double>(),
                            p.at("amplitude").get<double>(),
                            p.at("omega").get<double>(),
                            p.at("phase").get<double>(),
                            p.at("t0").get<double>(),
                            p.at("dt").get<double>(),
                            {},
                            p.at("p_bar").get<double>()};
  for (const auto& v : p.at("values")) {
    if (!v.is_number()) throw ValidationError("pressure.values must hold numbers");
    pressure.values.push_back(v.get<double>());
  }

  KernelConfig kernel;
  kernel.k_max = count(doc, "kernel", "k_max");
  kernel.tail_tol = number(doc, "kernel", "tail_tol");
  kernel.t_floor = number(doc, "kernel", "t_floor");

  RoughnessSpec rough;
  rough.c1 = number(doc, "roughness", "c1");
  rough.h1 = number(doc, "roughness", "h1");
  rough.delta1 = number(doc, "roughness", "delta1");
  rough.delta2 = number(doc, "roughness", "delta2");
  rough.r1_0 = number(doc, "roughness", "r1_0");
  rough.r2_0 = number(doc, "roughness", "r2_0");
  rough.n1 = static_cast<int>(count(doc, "roughness", "n1"));
  rough.n2 = static_cast<int>(count(doc, "roughness", "n2"));
  rough.n_max = count(doc, "roughness", "n_max");

  const auto& r = doc.at("run");
  RunSettings run{number(doc, "run", "tolerance"),
                  number(doc, "run", "t_end"),
                  number(doc, "run", "dt"),
                  count(doc, "run", "snapshots"),
                  r.at("initial").get<std::string>(),
                  count(doc, "run", "grid_points"),
                  count(doc, "run", "x_points"),
                  {},
                  count(doc, "run", "odd_modes"),
                  count(doc, "run", "k_sweep_max"),
                  {},
                  number(doc, "run", "window")};
  for (const auto& v : r.at("t_list")) {
    if (!v.is_number()) throw ValidationError("run.t_list must hold numbers");
    run.t_list.push_back(v.get<double>());
  }
  for (const auto& v : r.at("k_list")) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
      throw ValidationError("run.k_list must hold positive integers");
    }
    run.k_list.push_back(v.get<std::size_t>());
  }

  ProfileSettings profiles{number(doc, "profiles", "a1"), number(doc, "profiles", "a2"),
                           count(doc, "profiles", "points")};
  OutputSettings output{doc.at("output").at("directory").get<std::string>(),
                        static_cast<int>(count(doc, "output", "precision"))};

  auto geometry = geometry_from(doc);
  auto fluid = fluid_from(doc);
  RunConfig cfg{std::move(doc), geometry, fluid,   std::move(pressure), kernel,
                rough,          run,      profiles, output};

  require_positive_viscosity(cfg.fluid.nu());
  cfg.kernel.validate();
  cfg.roughness.validate(cfg.geometry);
  (void)cfg.pressure_history();
  if (!(cfg.run.tolerance > 0.0)) throw ValidationError("run.tolerance must be positive");
  if (!(cfg.run.t_end >= 0.0)) throw ValidationError("run.t_end must be non-negative");
  if (!(cfg.run.dt > 0.0)) throw ValidationError("run.dt must be positive");
  if (cfg.run.snapshots == 0) throw ValidationError("run.snapshots must be >= 1");
  if (cfg.run.initial != "rest" && cfg.run.initial != "history") {
    throw ValidationError("run.initial must be 'rest' or 'history'");
  }
  if (cfg.run.grid_points < 3) throw ValidationError("run.grid_points must be >= 3");
  if (cfg.run.x_points < 2) throw ValidationError("run.x_points must be >= 2");
  if (cfg.run.odd_modes == 0) throw ValidationError("run.odd_modes must be >= 1");
  if (cfg.run.window < 0.0) throw ValidationError("run.window must be non-negative");
  if (cfg.profiles.points < 11 || cfg.profiles.points % 2 == 0) {
    throw ValidationError("profiles.points must be odd and >= 11");
  }
  if (cfg.output.precision < 1 || cfg.output.precision > 17) {
    throw ValidationError("output.precision must lie in [1, 17]");
  }
  return cfg;
}

PressureHistory RunConfig::pressure_history() const {
  const auto& p = pressure;
  if (p.type == "constant") return PressureHistory::constant(p.p10, p.p_bar);
  if (p.type == "sinusoid") {
    return PressureHistory::sinusoid(p.mean, p.amplitude, p.omega, p.phase, p.p_bar);
  }
  if (p.type == "sampled") return PressureHistory::sampled(p.t0, p.dt, p.values, p.p_bar);
  throw ValidationError(
      fmt::format("pressure.type '{}' is not one of constant, sinusoid, sampled", p.type));
}

std::string RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : document.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ValidationError(fmt::format("cannot open config file '{}'", path));
  const json user = json::parse(in, nullptr, false);
  if (user.is_discarded()) throw ValidationError(fmt::format("'{}' is not valid JSON", path));
  json doc = default_document();
  merge_checked(doc, user);
  for (const auto& assignment : overrides) apply_override(doc, assignment);
  return config_from_document(std::move(doc));
}

}  // namespace alpha_channel::cli
