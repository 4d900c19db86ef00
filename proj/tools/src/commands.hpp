#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "output.hpp"

namespace alpha_channel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitTolerance = 3;

const std::vector<std::string>& command_names();

/// Runs one subcommand and returns its exit code. Validation problems are
/// thrown as alpha_channel::Error subclasses.
int run_command(const std::string& name, const RunConfig& cfg, const Io& io);

int cmd_kernel(const RunConfig& cfg, const Io& io);
int cmd_evolve(const RunConfig& cfg, const Io& io);
int cmd_poiseuille(const RunConfig& cfg, const Io& io);
int cmd_bound(const RunConfig& cfg, const Io& io);
int cmd_roughness(const RunConfig& cfg, const Io& io);
int cmd_alpha(const RunConfig& cfg, const Io& io);
int cmd_profiles(const RunConfig& cfg, const Io& io);
int cmd_verify(const RunConfig& cfg, const Io& io);

/// The kernel CSV as text, shared with the determinism check.
std::string kernel_csv(const RunConfig& cfg, double* worst_integral, double* worst_residual);

}  // namespace alpha_channel::cli
