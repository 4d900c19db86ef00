#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace alpha_channel {

/// Whether the admissibility bound 0 < -p1(t) <= p_bar is enforced on
/// construction.
enum class Admissibility { enforce, relaxed };

/// Streamwise pressure drop p1(t) over one period pi1; the spanwise drop p2 is
/// identically zero. Three representations are supported: a constant, a
/// piecewise-linear signal sampled on a uniform time grid, and
/// mean + amplitude * sin(omega t + phase).
class PressureHistory {
 public:
  struct Constant {
    double value;
  };
  struct Sampled {
    double t0;
    double dt;
    std::vector<double> values;
  };
  struct Sinusoid {
    double mean;
    double amplitude;
    double omega;
    double phase;
  };

  static PressureHistory constant(double p10, double p_bar,
                                  Admissibility check = Admissibility::enforce);
  /// Samples at t0 + i dt. Before t0 the signal holds values.front(); after the
  /// last sample it holds values.back().
  static PressureHistory sampled(double t0, double dt, std::vector<double> values, double p_bar,
                                 Admissibility check = Admissibility::enforce);
  static PressureHistory sinusoid(double mean, double amplitude, double omega, double phase,
                                  double p_bar, Admissibility check = Admissibility::enforce);

  [[nodiscard]] double operator()(double t) const;
  [[nodiscard]] double p2(double /*t*/) const { return 0.0; }
  [[nodiscard]] double bound() const { return p_bar_; }

  /// int_a^b p1(t) dt, exact for every representation.
  [[nodiscard]] double integral(double a, double b) const;

  /// Memory integral int_{-inf}^{t} exp(-rate (t - tau)) p1(tau) dtau.
  /// Constant and sinusoidal signals use closed forms. Sampled signals are
  /// integrated exactly segment by segment; segments older than
  /// `history_lag` are dropped unless the constant pre-history covers them,
  /// which is integrated in closed form.
  [[nodiscard]] double memory_integral(double rate, double t, double history_lag) const;

  /// Averaging window [0, T] used when a caller does not supply one:
  /// one period for sinusoids, the last sample time for sampled signals
  /// (when positive), 1 otherwise.
  [[nodiscard]] double default_window() const;

  [[nodiscard]] const std::variant<Constant, Sampled, Sinusoid>& representation() const {
    return signal_;
  }

 private:
  PressureHistory(std::variant<Constant, Sampled, Sinusoid> signal, double p_bar);
  void check_admissible() const;

  std::variant<Constant, Sampled, Sinusoid> signal_;
  double p_bar_;
};

/// int_0^L exp(-rate (L - s)) p(s) ds for p linear from p_start to p_end.
/// Stable for any rate * L >= 0.
double exponential_segment(double rate, double length, double p_start, double p_end);

/// exp(-rate * length), separated so callers can cache it with the segment
/// weights below.
struct SegmentWeights {
  double decay;
  double start_weight;
  double end_weight;
};

/// Weights with exponential_segment(rate, L, a, b) = start_weight * a + end_weight * b.
SegmentWeights exponential_segment_weights(double rate, double length);

}  // namespace alpha_channel
