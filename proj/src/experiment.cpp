#include "ce/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ce/symplectic.hpp"

namespace ce {

namespace {

double binom_d(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

// First-claimant weight-1 table without the inequivalent-collision error, so
// codes that cannot correct weight-1 errors still get analyzed (their
// residuals simply count as failures).
SyndromeTable lenient_lookup(const StabilizerCode& code) {
  SyndromeTable table;
  table.num_generators = static_cast<int>(code.generators.size());
  table.corrections.emplace(SyndromeBits{}, PauliOperator::identity(code.n));
  constexpr Pauli kinds[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int q = 0; q < code.n; ++q) {
    for (const Pauli kind : kinds) {
      const PauliOperator e = PauliOperator::single(code.n, q, kind);
      table.corrections.emplace(pauli_syndrome(e, code), e);
    }
  }
  return table;
}

}  // namespace

double LowWeightAnalysis::success_probability(double p) const {
  double total = 0.0;
  double p_third = p / 3.0;
  for (int w = 0; w <= w_max; ++w) {
    total += static_cast<double>(correctable[static_cast<size_t>(w)]) *
             std::pow(p_third, w) * std::pow(1.0 - p, n - w);
  }
  return total;
}

double LowWeightAnalysis::linear_coefficient() const {
  const double a0 = static_cast<double>(correctable[0]);
  const double a1 = w_max >= 1 ? static_cast<double>(correctable[1]) : 0.0;
  return n * a0 - a1 / 3.0;
}

double LowWeightAnalysis::quadratic_coefficient() const {
  const double a0 = static_cast<double>(correctable[0]);
  const double a1 = w_max >= 1 ? static_cast<double>(correctable[1]) : 0.0;
  const double a2 = w_max >= 2 ? static_cast<double>(correctable[2]) : 0.0;
  return a1 * (n - 1) / 3.0 - a0 * binom_d(n, 2) - a2 / 9.0;
}

LowWeightAnalysis exhaustive_low_weight_analysis(const StabilizerCode& code,
                                                 int w_max) {
  if (w_max < 0 || w_max > 2) {
    throw std::invalid_argument("exact analysis supports w_max <= 2");
  }
  if (code.n > 16) {
    throw std::invalid_argument("exact analysis supports n <= 16");
  }
  SyndromeTable table;
  try {
    table = build_lookup(code);
  } catch (const std::runtime_error&) {
    table = lenient_lookup(code);
  }
  const SymplecticBasis stab(code.generators);

  LowWeightAnalysis analysis;
  analysis.n = code.n;
  analysis.w_max = w_max;
  analysis.correctable.assign(static_cast<size_t>(w_max) + 1, 0);
  analysis.correctable[0] = 1;

  auto correctable = [&](const PauliOperator& e) {
    const PauliOperator* corr = table.find(pauli_syndrome(e, code));
    if (corr == nullptr) return false;  // heralded, identity applied
    return stab.contains(multiply(*corr, e), /*mod_phase=*/true);
  };

  constexpr Pauli kinds[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  if (w_max >= 1) {
    for (int q = 0; q < code.n; ++q) {
      for (const Pauli k1 : kinds) {
        if (correctable(PauliOperator::single(code.n, q, k1))) {
          ++analysis.correctable[1];
        }
      }
    }
  }
  if (w_max >= 2) {
    for (int qa = 0; qa < code.n; ++qa) {
      for (int qb = qa + 1; qb < code.n; ++qb) {
        for (const Pauli ka : kinds) {
          for (const Pauli kb : kinds) {
            PauliOperator e = PauliOperator::identity(code.n);
            e.set_kind(qa, ka);
            e.set_kind(qb, kb);
            if (correctable(e)) ++analysis.correctable[2];
          }
        }
      }
    }
  }
  return analysis;
}

std::optional<double> pseudo_threshold(
    const std::function<double(double)>& failure) {
  constexpr double kHi = 0.5;
  constexpr int kSteps = 1 << 16;
  double p_prev = 0.0;
  for (int i = 1; i <= kSteps; ++i) {
    const double p = kHi * i / kSteps;
    if (failure(p) - p >= 0.0) {
      // First sign change: bisect (p_prev, p].
      double a = p_prev;
      double b = p;
      while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        if (failure(mid) - mid >= 0.0) {
          b = mid;
        } else {
          a = mid;
        }
      }
      return 0.5 * (a + b);
    }
    p_prev = p;
  }
  return std::nullopt;
}

std::optional<double> pseudo_threshold(const LowWeightAnalysis& analysis) {
  const double c = analysis.quadratic_coefficient();
  return pseudo_threshold([c](double p) { return c * p * p; });
}

std::optional<double> pseudo_threshold_polynomial(
    const LowWeightAnalysis& analysis) {
  return pseudo_threshold(
      [&analysis](double p) { return 1.0 - analysis.success_probability(p); });
}

double threshold_bound(int n) {
  if (n < 3) {
    throw std::invalid_argument("threshold bound needs n >= 3");
  }
  return 1.0 / (static_cast<double>(n) * (n - 2));
}

Rational code_rate(int r) {
  if (r < 2) throw std::invalid_argument("family undefined for r < 2");
  if (r > 61) throw std::invalid_argument("r too large for exact arithmetic");
  Rational rate;
  rate.num = (1LL << r) - (r + 1);
  rate.den = 1LL << (r + 1);
  const long long g = std::gcd(rate.num, rate.den);
  rate.num /= g;
  rate.den /= g;
  return rate;
}

ExperimentReport monte_carlo_sweep(const SweepConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (const double p : config.p_grid) {
    if (p < 0.0 || p > 1.0) {
      throw std::invalid_argument("p grid values must be in [0,1]");
    }
  }
  const StabilizerCode code = build_ce_code(config.r);
  if (code.n > 16) {
    throw std::invalid_argument(
        "Monte Carlo trajectories support n <= 16 (r <= 3)");
  }
  const SyndromeTable table = build_lookup(code);
  const LogicalBasis basis(code);
  const ShotContext ctx = make_shot_context(code, table, basis, config.input);

  int jobs = config.jobs > 0
                 ? config.jobs
                 : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  ExperimentReport report;
  report.code_id = code.id();
  report.config = config;

  for (size_t pi = 0; pi < config.p_grid.size(); ++pi) {
    NoiseConfig noise;
    noise.p = config.p_grid[pi];
    noise.delta_t = config.delta_t;
    noise.ordering = config.ordering;

    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> failures{0};
    std::atomic<uint64_t> heralded{0};
    constexpr uint64_t kChunk = 1024;

    auto worker = [&] {
      uint64_t local_failures = 0;
      uint64_t local_heralded = 0;
      while (true) {
        const uint64_t begin = next.fetch_add(kChunk);
        if (begin >= config.trials) break;
        const uint64_t end = std::min(begin + kChunk, config.trials);
        for (uint64_t t = begin; t < end; ++t) {
          Xoshiro256pp rng = shot_rng(config.seed, pi, t);
          const ShotResult shot = run_shot(ctx, noise, rng);
          if (!shot.success) ++local_failures;
          if (shot.heralded_uncorrectable) ++local_heralded;
        }
      }
      failures.fetch_add(local_failures);
      heralded.fetch_add(local_heralded);
    };

    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    SweepPoint point;
    point.p = noise.p;
    point.trials = config.trials;
    point.failures = failures.load();
    point.heralded = heralded.load();
    report.points.push_back(point);
  }

  report.analysis = exhaustive_low_weight_analysis(code);
  report.quadratic_coeff = report.analysis.quadratic_coefficient();
  report.threshold_quadratic = pseudo_threshold(report.analysis);
  report.threshold_polynomial = pseudo_threshold_polynomial(report.analysis);
  return report;
}

}  // namespace ce
