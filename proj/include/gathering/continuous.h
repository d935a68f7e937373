#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "gathering/random.h"
#include "gathering/simulation.h"

namespace gathering {

// Piecewise-continuous process with a blind zone of radius `delta`. Headings
// are redrawn once per unit interval; inside the interval each agent moves at
// unit speed while no agent farther than `delta` lies in its closed back
// half-plane. Integrated with `1/substep` synchronous sense-then-move substeps.
struct ContinuousConfig {
  std::size_t n = 1;
  double delta = 0.1;
  double substep = 1e-3;
  double spread = 5.0;
  std::uint64_t seed = 0;
  std::int64_t max_intervals = 1000000;
  RecordPolicy record;

  // Throws std::invalid_argument; 1/substep must be a positive integer.
  void validate() const;
  std::int64_t substeps_per_interval() const;
};

/// True iff some j != i has |p_j - p_i| > delta and heading . (p_j - p_i) <= 0.
bool blind_zone_sensor(std::size_t i, std::span<const Vec2> positions, Vec2 heading,
                       double delta);

struct LyapunovState {
  double value = 0.0;
  bool confined = false;
};

// c * sum over ordered pairs (i, j) of l_ij, where l_ij = d_ij if d_ij > delta
// and 0 otherwise, and c = 0 iff the minimal enclosing disc radius is < delta.
LyapunovState lyapunov_value(std::span<const Vec2> positions, double delta);

// Snapshot handed to a substep observer: positions before and after one
// substep, and the headings in force.
struct SubstepView {
  std::span<const Vec2> before;
  std::span<const Vec2> after;
  std::span<const double> headings;
};
using SubstepObserver = std::function<void(const SubstepView&)>;

struct IntervalOutcome {
  Constellation state;
  std::vector<std::uint8_t> moved;  // moved at any substep of the interval
};

// One unit interval. Headings are drawn once, then every substep senses all
// agents on the current snapshot and advances the unblocked ones.
//
// Agents blocked at the start of a substep stay put for that substep. When a
// pair that is within `delta` would leave the blind zone during a substep, the
// substep is cut at the crossing and the movers are re-sensed for the rest of
// it, so such a pair stays put at the blind-zone boundary instead of
// overshooting it.
IntervalOutcome continuous_interval(const Constellation& state, const ContinuousConfig& config,
                                    HeadingSource& headings,
                                    const SubstepObserver& observer = {});

// Runs intervals until confinement (checked at interval boundaries, including
// interval 0) or max_intervals.
std::pair<Trace, RunSummary> run_continuous(const ContinuousConfig& config);

std::pair<Trace, RunSummary> run_continuous(const ContinuousConfig& config, Constellation start,
                                            HeadingSource& headings);

}  // namespace gathering
