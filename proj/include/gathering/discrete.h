#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gathering/random.h"
#include "gathering/simulation.h"

namespace gathering {

// Synchronous jump process: every step each agent draws a fresh heading and
// jumps `step_size` forward iff its closed back half-plane holds no agent.
struct DiscreteConfig {
  std::size_t n = 1;
  double step_size = 1.0;
  double spread = 50.0;
  std::uint64_t seed = 0;
  std::int64_t max_steps = 100000;
  double convergence_radius = 1.0;
  RecordPolicy record;

  // Throws std::invalid_argument.
  void validate() const;
};

// Positions i.i.d. uniform on [0, spread]^2 (x then y per agent, in index
// order), then headings i.i.d. uniform on [0, 2*pi).
Constellation init_constellation(std::size_t n, double spread, Rng& rng);

struct StepOutcome {
  Constellation state;
  std::vector<std::uint8_t> moved;
};

// One synchronous step. All headings are drawn first, then every sensor reads
// the pre-move positions, then movers advance.
StepOutcome discrete_step(const Constellation& state, const DiscreteConfig& config,
                          HeadingSource& headings);

// Runs until the minimal enclosing disc radius is <= convergence_radius (checked
// at step 0 and after every step) or max_steps steps have been taken.
std::pair<Trace, RunSummary> run_discrete(const DiscreteConfig& config);

// Same, from a caller-supplied start and heading source.
std::pair<Trace, RunSummary> run_discrete(const DiscreteConfig& config, Constellation start,
                                          HeadingSource& headings);

}  // namespace gathering
