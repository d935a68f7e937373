#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gathering/continuous.h"
#include "gathering/discrete.h"

namespace gathering {

struct SweepConfig {
  Model model = Model::discrete;
  std::vector<std::size_t> n_values;
  std::size_t reps = 1;
  std::uint64_t base_seed = 0;
  // Per-run templates; n, seed and the record policy are overwritten per run.
  DiscreteConfig discrete;
  ContinuousConfig continuous;
  // 0 uses the hardware concurrency. The output does not depend on it.
  unsigned threads = 1;

  void validate() const;
};

// One run per (n, rep) cell with seed derive_seed(base_seed, n, rep). Results
// are ordered by n_values order, then rep, whatever the thread schedule.
std::vector<RunSummary> run_sweep(const SweepConfig& config);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double pearson_r = 0.0;
};

// Ordinary least squares y = slope*x + intercept, plus the Pearson correlation
// of the points (0 when y is constant). Throws std::domain_error when the x
// values have no spread.
FitResult least_squares_fit(std::span<const std::pair<double, double>> points);

// Mean convergence step for one agent count, over the converged runs only.
struct NMean {
  std::size_t n = 0;
  std::size_t runs = 0;
  std::size_t converged = 0;
  std::optional<double> mean_step;
};

struct SweepFit {
  std::vector<NMean> n_means;
  std::optional<FitResult> fit;  // empty when fewer than two n have converged runs
  std::size_t not_converged = 0;
};

SweepFit fit_sweep(std::span<const RunSummary> summaries);

enum class Threshold {
  inclusive,  // radius <= r
  strict,     // radius < r
};

// First frame whose enclosing radius meets the threshold. Throws
// std::invalid_argument on an empty trace.
std::optional<std::int64_t> detect_convergence(const Trace& trace, double radius,
                                               Threshold threshold);

// Threshold matching the model's convergence rule.
std::optional<std::int64_t> detect_convergence(const Trace& trace, double radius);

}  // namespace gathering
