#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ce/code.hpp"
#include "ce/noise.hpp"

namespace ce {

// Exact correctable-pattern counts by weight for the lookup decoder at zero
// rotation angle (weight-1 composite immunity is a separate check; at zero
// angle the trajectory is deterministic and purely algebraic).
struct LowWeightAnalysis {
  int n = 0;
  int w_max = 0;
  std::vector<uint64_t> correctable;  // indexed by weight, size w_max + 1

  // sum_w A_w (p/3)^w (1-p)^(n-w): every pattern above w_max counts as
  // failure.
  double success_probability(double p) const;
  // c in 1 - S(p) = c p^2 + O(p^3). The linear term vanishes whenever all
  // weight-1 patterns are correctable.
  double quadratic_coefficient() const;
  double linear_coefficient() const;
};

LowWeightAnalysis exhaustive_low_weight_analysis(const StabilizerCode& code,
                                                 int w_max = 2);

// Smallest positive root of failure(p) = p, located by scanning a fine grid
// on (0, 0.5] for the first sign change and bisecting it to 1e-12 absolute.
// Empty when no crossing exists in range.
std::optional<double> pseudo_threshold(
    const std::function<double(double)>& failure);

// Root of the quadratic failure model c p^2 = p built from the exact
// coefficient (the same shape as the closed-form reference models).
std::optional<double> pseudo_threshold(const LowWeightAnalysis& analysis);

// Self-consistent root of the full truncated polynomial 1 - S(p) = p.
std::optional<double> pseudo_threshold_polynomial(
    const LowWeightAnalysis& analysis);

// 1 / (n (n-2)), the quadratic-model bound for an n-qubit weight-1 decoder.
double threshold_bound(int n);

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

// Exact rate (2^r - (r+1)) / 2^(r+1), reduced.
Rational code_rate(int r);

struct SweepPoint {
  double p = 0.0;
  uint64_t trials = 0;
  uint64_t failures = 0;
  uint64_t heralded = 0;

  double failure_rate() const {
    return trials == 0 ? 0.0
                       : static_cast<double>(failures) / trials;
  }
  double fidelity() const { return 1.0 - failure_rate(); }
  double std_error() const {
    if (trials == 0) return 0.0;
    const double f = failure_rate();
    return std::sqrt(f * (1.0 - f) / trials);
  }
};

struct SweepConfig {
  int r = 2;
  std::vector<double> p_grid;
  uint64_t trials = 1;
  DeltaTPolicy delta_t{};
  uint64_t seed = 0;
  ChannelOrdering ordering = ChannelOrdering::CCAfterPauli;
  LogicalInput input = LogicalInput::generic();
  int jobs = 0;  // 0 = hardware concurrency
};

struct ExperimentReport {
  std::string code_id;
  SweepConfig config;
  std::vector<SweepPoint> points;
  LowWeightAnalysis analysis;
  double quadratic_coeff = 0.0;
  std::optional<double> threshold_quadratic;
  std::optional<double> threshold_polynomial;
};

// Heralded-uncorrectable shots count as failures; the heralded tally is kept
// separately. Trials are distributed over a worker pool; per-trial RNG
// streams make the outcome independent of the thread count.
ExperimentReport monte_carlo_sweep(const SweepConfig& config);

}  // namespace ce
