#pragma once

namespace alpha_channel {

/// Channel of height h between two flat walls, periodic in the two
/// horizontal directions with periods pi1 (streamwise) and pi2 (spanwise).
class ChannelGeometry {
 public:
  /// Throws ValidationError unless h, pi1, pi2 are positive and finite.
  ChannelGeometry(double h, double pi1, double pi2, double x3_lower = 0.0);

  [[nodiscard]] double height() const { return h_; }
  [[nodiscard]] double pi1() const { return pi1_; }
  [[nodiscard]] double pi2() const { return pi2_; }
  [[nodiscard]] double lower() const { return lower_; }
  [[nodiscard]] double upper() const { return lower_ + h_; }
  [[nodiscard]] double midplane() const { return lower_ + 0.5 * h_; }

  /// True when x3 lies between the walls, allowing a relative slack of
  /// `slack * h` for grid endpoints produced by floating-point arithmetic.
  [[nodiscard]] bool contains(double x3, double slack = 1e-12) const;

  /// Same periods and lower wall, different height.
  [[nodiscard]] ChannelGeometry with_height(double h) const;

  /// Same height and spanwise period, different streamwise period.
  [[nodiscard]] ChannelGeometry with_pi1(double pi1) const;

 private:
  double h_;
  double pi1_;
  double pi2_;
  double lower_;
};

/// Kinematic viscosity and the NS-alpha length scale (alpha = 0 is plain NSE).
class FluidParams {
 public:
  FluidParams(double nu, double alpha = 0.0);

  [[nodiscard]] double nu() const { return nu_; }
  [[nodiscard]] double alpha() const { return alpha_; }

 private:
  double nu_;
  double alpha_;
};

/// Throws ValidationError unless nu is positive and finite.
void require_positive_viscosity(double nu);

}  // namespace alpha_channel
