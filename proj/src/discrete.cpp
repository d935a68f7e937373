#include "gathering/discrete.h"

#include <stdexcept>

namespace gathering {

void DiscreteConfig::validate() const {
  if (n < 1) throw std::invalid_argument("discrete: n must be >= 1");
  if (!(step_size > 0.0)) throw std::invalid_argument("discrete: step size must be > 0");
  if (!(spread > 0.0)) throw std::invalid_argument("discrete: spread must be > 0");
  if (max_steps < 1) throw std::invalid_argument("discrete: max steps must be >= 1");
  if (!(convergence_radius > 0.0)) {
    throw std::invalid_argument("discrete: convergence radius must be > 0");
  }
  if (record.every < 0) throw std::invalid_argument("discrete: record cadence must be >= 0");
}

Constellation init_constellation(std::size_t n, double spread, Rng& rng) {
  Constellation c;
  c.positions.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, spread);
    const double y = rng.uniform(0.0, spread);
    c.positions.push_back({x, y});
  }
  c.headings.resize(n);
  for (double& h : c.headings) h = rng.angle();
  return c;
}

StepOutcome discrete_step(const Constellation& state, const DiscreteConfig& config,
                          HeadingSource& headings) {
  const std::size_t n = state.size();
  StepOutcome out;
  out.state.headings.resize(n);
  headings.draw(out.state.headings);

  out.moved.assign(n, 0);
  out.state.positions = state.positions;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 dir = unit_heading(out.state.headings[i]);
    if (!back_halfplane_occupied(i, state.positions, dir)) {
      out.state.positions[i] += config.step_size * dir;
      out.moved[i] = 1;
    }
  }
  out.state.step_index = state.step_index + 1;
  return out;
}

std::pair<Trace, RunSummary> run_discrete(const DiscreteConfig& config) {
  config.validate();
  Rng rng(config.seed);
  Constellation start = init_constellation(config.n, config.spread, rng);
  UniformHeadings headings(rng);
  return run_discrete(config, std::move(start), headings);
}

std::pair<Trace, RunSummary> run_discrete(const DiscreteConfig& config, Constellation start,
                                          HeadingSource& headings) {
  config.validate();
  if (start.size() != config.n) throw std::invalid_argument("discrete: start size != n");

  Trace trace;
  trace.model = Model::discrete;
  RunSummary summary;
  summary.seed = config.seed;
  summary.n = config.n;
  summary.spread = config.spread;

  Constellation state = std::move(start);
  std::vector<std::uint8_t> moved(config.n, 0);
  double radius = min_enclosing_disc(state.positions).radius;

  auto record = [&] {
    trace.frames.push_back(
        {state.step_index, state.positions, state.headings, moved, radius, {}, {}});
  };
  record();

  while (radius > config.convergence_radius && state.step_index < config.max_steps) {
    StepOutcome step = discrete_step(state, config, headings);
    state = std::move(step.state);
    moved = std::move(step.moved);
    radius = min_enclosing_disc(state.positions).radius;
    const bool last = radius <= config.convergence_radius || state.step_index >= config.max_steps;
    if (last || config.record.keeps(state.step_index)) record();
  }

  if (radius <= config.convergence_radius) summary.converged_step = state.step_index;
  summary.final_radius = radius;
  summary.steps_run = state.step_index;
  return {std::move(trace), summary};
}

}  // namespace gathering
