#pragma once

#include <span>
#include <vector>

namespace alpha_channel {

/// Composite Simpson rule on a uniform grid. Requires an odd number of
/// samples (>= 3); throws ResolutionError otherwise.
double simpson(std::span<const double> values, double dx);

/// First derivative with fourth-order stencils everywhere: centered in the
/// interior, one-sided at the two points nearest each end. Needs >= 5 samples.
std::vector<double> derivative4(std::span<const double> values, double dx);

/// Fourth-order centered second derivative at interior points i = 2..n-3.
/// The returned vector has n - 4 entries.
std::vector<double> second_derivative4_interior(std::span<const double> values, double dx);

/// Largest |f[i+3] - 3 f[i+2] + 3 f[i+1] - f[i]|.
double max_third_difference(std::span<const double> values);

/// Spacing of a uniform grid, or throws ResolutionError.
double require_uniform_spacing(std::span<const double> grid, double rel_tol = 1e-9);

}  // namespace alpha_channel
