#include "alpha_channel/geometry.hpp"

#include <cmath>
#include <string>

#include "alpha_channel/errors.hpp"

namespace alpha_channel {

namespace {

void require_positive(double value, const char* name) {
  if (!(std::isfinite(value) && value > 0.0)) {
    throw ValidationError(std::string(name) + " must be positive and finite, got " +
                          std::to_string(value));
  }
}

}  // namespace

ChannelGeometry::ChannelGeometry(double h, double pi1, double pi2, double x3_lower)
    : h_(h), pi1_(pi1), pi2_(pi2), lower_(x3_lower) {
  require_positive(h, "channel height h");
  require_positive(pi1, "period pi1");
  require_positive(pi2, "period pi2");
  if (!std::isfinite(x3_lower)) {
    throw ValidationError("lower wall position must be finite");
  }
}

bool ChannelGeometry::contains(double x3, double slack) const {
  const double tol = slack * h_;
  return x3 >= lower_ - tol && x3 <= upper() + tol;
}

ChannelGeometry ChannelGeometry::with_height(double h) const {
  return ChannelGeometry(h, pi1_, pi2_, lower_);
}

ChannelGeometry ChannelGeometry::with_pi1(double pi1) const {
  return ChannelGeometry(h_, pi1, pi2_, lower_);
}

FluidParams::FluidParams(double nu, double alpha) : nu_(nu), alpha_(alpha) {
  require_positive(nu, "viscosity nu");
  if (!(std::isfinite(alpha) && alpha >= 0.0)) {
    throw ValidationError("alpha must be nonnegative and finite, got " + std::to_string(alpha));
  }
}

void require_positive_viscosity(double nu) { require_positive(nu, "viscosity nu"); }

}  // namespace alpha_channel
