#include "alpha_channel/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "alpha_channel/errors.hpp"
#include "alpha_channel/summation.hpp"

namespace alpha_channel {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_admissible_value(double p, double p_bar, const std::string& where) {
  if (!(p < 0.0 && -p <= p_bar)) {
    throw ValidationError("pressure drop " + where + " = " + std::to_string(p) +
                          " violates 0 < -p1(t) <= p_bar with p_bar = " + std::to_string(p_bar));
  }
}

double sampled_value(const PressureHistory::Sampled& s, double t) {
  const std::size_t n = s.values.size();
  if (n == 1 || t <= s.t0) return s.values.front();
  const double t_last = s.t0 + static_cast<double>(n - 1) * s.dt;
  if (t >= t_last) return s.values.back();
  const double pos = (t - s.t0) / s.dt;
  auto idx = static_cast<std::size_t>(std::floor(pos));
  idx = std::min(idx, n - 2);
  const double frac = pos - static_cast<double>(idx);
  return s.values[idx] + frac * (s.values[idx + 1] - s.values[idx]);
}

// int_{t0}^{t} p for the sampled signal.
double sampled_primitive(const PressureHistory::Sampled& s, double t) {
  const std::size_t n = s.values.size();
  if (t <= s.t0 || n == 1) return s.values.front() * (t - s.t0);
  const double t_last = s.t0 + static_cast<double>(n - 1) * s.dt;
  CompensatedSum acc;
  const double end = std::min(t, t_last);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = s.t0 + static_cast<double>(i) * s.dt;
    if (a >= end) break;
    const double b = std::min(s.t0 + static_cast<double>(i + 1) * s.dt, end);
    acc += 0.5 * (b - a) * (s.values[i] + sampled_value(s, b));
  }
  if (t > t_last) acc += s.values.back() * (t - t_last);
  return acc.value();
}

double psi(double z) {
  // (z - 1 + e^{-z}) / z^2 = sum_n (-z)^n / (n + 2)!
  if (z < 1e-2) {
    return 0.5 - z * (1.0 / 6.0 - z * (1.0 / 24.0 - z * (1.0 / 120.0 - z * (1.0 / 720.0 - z / 5040.0))));
  }
  return (z + std::expm1(-z)) / (z * z);
}

double phi1(double z) {
  if (z == 0.0) return 1.0;
  return -std::expm1(-z) / z;
}

}  // namespace

SegmentWeights exponential_segment_weights(double rate, double length) {
  const double z = rate * length;
  const double p1 = phi1(z);
  const double p2 = psi(z);
  return {std::exp(-z), length * (p1 - p2), length * p2};
}

double exponential_segment(double rate, double length, double p_start, double p_end) {
  const auto w = exponential_segment_weights(rate, length);
  return w.start_weight * p_start + w.end_weight * p_end;
}

PressureHistory::PressureHistory(std::variant<Constant, Sampled, Sinusoid> signal, double p_bar)
    : signal_(std::move(signal)), p_bar_(p_bar) {
  if (!(std::isfinite(p_bar_) && p_bar_ > 0.0)) {
    throw ValidationError("pressure bound p_bar must be positive and finite");
  }
}

PressureHistory PressureHistory::constant(double p10, double p_bar, Admissibility check) {
  PressureHistory p(Constant{p10}, p_bar);
  if (check == Admissibility::enforce) p.check_admissible();
  return p;
}

PressureHistory PressureHistory::sampled(double t0, double dt, std::vector<double> values,
                                         double p_bar, Admissibility check) {
  if (values.empty()) {
    throw ValidationError("sampled pressure history needs at least one sample");
  }
  if (!(dt > 0.0 && std::isfinite(dt) && std::isfinite(t0))) {
    throw ValidationError("sampled pressure history needs a finite t0 and dt > 0");
  }
  PressureHistory p(Sampled{t0, dt, std::move(values)}, p_bar);
  if (check == Admissibility::enforce) p.check_admissible();
  return p;
}

PressureHistory PressureHistory::sinusoid(double mean, double amplitude, double omega,
                                          double phase, double p_bar, Admissibility check) {
  if (!(std::isfinite(mean) && std::isfinite(amplitude) && std::isfinite(omega) &&
        std::isfinite(phase))) {
    throw ValidationError("sinusoidal pressure parameters must be finite");
  }
  PressureHistory p(Sinusoid{mean, amplitude, omega, phase}, p_bar);
  if (check == Admissibility::enforce) p.check_admissible();
  return p;
}

void PressureHistory::check_admissible() const {
  std::visit(overloaded{
                 [&](const Constant& c) { require_admissible_value(c.value, p_bar_, "p10"); },
                 [&](const Sampled& s) {
                   for (std::size_t i = 0; i < s.values.size(); ++i) {
                     require_admissible_value(s.values[i], p_bar_,
                                              "sample " + std::to_string(i));
                   }
                 },
                 [&](const Sinusoid& s) {
                   const double amp = std::abs(s.amplitude);
                   require_admissible_value(s.mean + amp, p_bar_, "maximum of sinusoid");
                   require_admissible_value(s.mean - amp, p_bar_, "minimum of sinusoid");
                 },
             },
             signal_);
}

double PressureHistory::operator()(double t) const {
  return std::visit(overloaded{
                        [](const Constant& c) { return c.value; },
                        [&](const Sampled& s) { return sampled_value(s, t); },
                        [&](const Sinusoid& s) {
                          return s.mean + s.amplitude * std::sin(s.omega * t + s.phase);
                        },
                    },
                    signal_);
}

double PressureHistory::integral(double a, double b) const {
  return std::visit(
      overloaded{
          [&](const Constant& c) { return c.value * (b - a); },
          [&](const Sampled& s) { return sampled_primitive(s, b) - sampled_primitive(s, a); },
          [&](const Sinusoid& s) {
            if (s.omega == 0.0) return (s.mean + s.amplitude * std::sin(s.phase)) * (b - a);
            return s.mean * (b - a) +
                   s.amplitude *
                       (std::cos(s.omega * a + s.phase) - std::cos(s.omega * b + s.phase)) /
                       s.omega;
          },
      },
      signal_);
}

double PressureHistory::memory_integral(double rate, double t, double history_lag) const {
  if (!(rate > 0.0)) {
    throw DomainError("memory integral needs a positive decay rate");
  }
  return std::visit(
      overloaded{
          [&](const Constant& c) { return c.value / rate; },
          [&](const Sinusoid& s) {
            const double theta = s.omega * t + s.phase;
            return s.mean / rate + s.amplitude *
                                       (rate * std::sin(theta) - s.omega * std::cos(theta)) /
                                       (rate * rate + s.omega * s.omega);
          },
          [&](const Sampled& s) {
            const std::size_t n = s.values.size();
            const double t_last = s.t0 + static_cast<double>(n - 1) * s.dt;
            const double lower = t - history_lag;

            double acc = 0.0;
            double cursor = lower;
            if (lower <= s.t0) {
              // constant pre-history, exact from -infinity
              cursor = std::min(t, s.t0);
              acc = s.values.front() / rate;
            }
            const double linear_end = std::min(t, t_last);
            if (cursor < linear_end && n > 1) {
              auto idx = static_cast<std::size_t>(std::max(0.0, std::floor((cursor - s.t0) / s.dt)));
              idx = std::min(idx, n - 2);
              for (; idx + 1 < n && cursor < linear_end; ++idx) {
                const double seg_end =
                    std::min(s.t0 + static_cast<double>(idx + 1) * s.dt, linear_end);
                if (seg_end <= cursor) continue;
                const double len = seg_end - cursor;
                const auto w = exponential_segment_weights(rate, len);
                acc = acc * w.decay + w.start_weight * sampled_value(s, cursor) +
                      w.end_weight * sampled_value(s, seg_end);
                cursor = seg_end;
              }
            }
            if (t > cursor) {
              // constant continuation after the last sample (or after the
              // lag cut when the whole window lies past t_last)
              const double len = t - cursor;
              acc = acc * std::exp(-rate * len) + sampled_value(s, t) * (-std::expm1(-rate * len)) / rate;
            }
            return acc;
          },
      },
      signal_);
}

double PressureHistory::default_window() const {
  return std::visit(overloaded{
                        [](const Constant&) { return 1.0; },
                        [](const Sampled& s) {
                          const double t_last =
                              s.t0 + static_cast<double>(s.values.size() - 1) * s.dt;
                          return t_last > 0.0 ? t_last : 1.0;
                        },
                        [](const Sinusoid& s) {
                          return s.omega != 0.0 ? 2.0 * std::numbers::pi / std::abs(s.omega) : 1.0;
                        },
                    },
                    signal_);
}

}  // namespace alpha_channel
