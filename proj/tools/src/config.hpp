#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "alpha_channel/geometry.hpp"
#include "alpha_channel/kernel.hpp"
#include "alpha_channel/pressure.hpp"
#include "alpha_channel/roughness.hpp"

namespace alpha_channel::cli {

struct PressureSettings {
  std::string type;  // constant, sinusoid or sampled
  double p10;
  double mean;
  double amplitude;
  double omega;
  double phase;
  double t0;
  double dt;
  std::vector<double> values;
  double p_bar;
};

struct RunSettings {
  double tolerance;
  double t_end;
  double dt;
  std::size_t snapshots;
  std::string initial;  // rest or history
  std::size_t grid_points;
  std::size_t x_points;
  std::vector<double> t_list;
  std::size_t odd_modes;
  std::size_t k_sweep_max;
  std::vector<std::size_t> k_list;
  double window;
};

struct ProfileSettings {
  double a1;
  double a2;
  std::size_t points;
};

struct OutputSettings {
  std::string directory;
  int precision;
};

struct RunConfig {
  nlohmann::json document;
  ChannelGeometry geometry;
  FluidParams fluid;
  PressureSettings pressure;
  KernelConfig kernel;
  RoughnessSpec roughness;
  RunSettings run;
  ProfileSettings profiles;
  OutputSettings output;

  [[nodiscard]] PressureHistory pressure_history() const;
  /// FNV-1a of the canonical JSON dump, 16 hex digits.
  [[nodiscard]] std::string hash() const;
};

nlohmann::json default_document();

/// Merges `overlay` into `base`. Keys absent from `base` and type changes are
/// ValidationErrors naming the dotted path.
void merge_checked(nlohmann::json& base, const nlohmann::json& overlay, const std::string& path = "");

/// Applies one `dotted.key=value` override. The value is parsed as JSON when
/// possible and taken as a string otherwise.
void apply_override(nlohmann::json& doc, const std::string& assignment);

/// Builds and validates the typed view of a merged document.
RunConfig config_from_document(nlohmann::json doc);

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides);

}  // namespace alpha_channel::cli
