#include "gathering/continuous.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gathering/discrete.h"

namespace gathering {

namespace {

// Pairs closer than delta*(1 - kBoundaryBand) are invisible to the integrator's
// sensor; blind-zone exits are cut at delta*(1 - kBoundaryBand/2). The band
// keeps a pair that was stopped at the boundary visible despite rounding.
constexpr double kBoundaryBand = 1e-9;

bool integrator_sensed(std::size_t i, std::span<const Vec2> pos, Vec2 heading,
                       double visible_sq) {
  const Vec2 self = pos[i];
  for (std::size_t j = 0; j < pos.size(); ++j) {
    if (j == i) continue;
    const Vec2 r = pos[j] - self;
    if (dot(heading, r) <= 0.0 && dot(r, r) > visible_sq) return true;
  }
  return false;
}

// Largest g in [0, limit] such that |r0 + g*w| stays <= max(|r0|, target).
double crossing_fraction(Vec2 r0, Vec2 w, double target, double limit) {
  const double a = dot(w, w);
  if (a == 0.0) return limit;
  const double b = 2.0 * dot(r0, w);
  const double r2 = dot(r0, r0);
  double g;
  if (r2 > target * target) {
    if (b >= 0.0) return 0.0;
    g = -b / a;
  } else {
    const double c = r2 - target * target;
    const double disc = std::max(0.0, b * b - 4.0 * a * c);
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    g = q == 0.0 ? 0.0 : std::max(q / a, c / q);
  }
  return std::clamp(g, 0.0, limit);
}

struct Observables {
  double radius = 0.0;
  LyapunovState lyapunov;
};

Observables observe(std::span<const Vec2> positions, double delta) {
  Observables o;
  o.radius = min_enclosing_disc(positions).radius;
  o.lyapunov.confined = o.radius < delta;
  if (!o.lyapunov.confined) {
    double sum = 0.0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      for (std::size_t j = i + 1; j < positions.size(); ++j) {
        const double d = distance(positions[i], positions[j]);
        if (d > delta) sum += d;
      }
    }
    o.lyapunov.value = 2.0 * sum;
  }
  return o;
}

}  // namespace

void ContinuousConfig::validate() const {
  if (n < 1) throw std::invalid_argument("continuous: n must be >= 1");
  if (!(delta > 0.0)) throw std::invalid_argument("continuous: delta must be > 0");
  if (!(substep > 0.0 && substep <= 1.0)) {
    throw std::invalid_argument("continuous: substep must lie in (0, 1]");
  }
  const double count = 1.0 / substep;
  if (std::abs(count - std::round(count)) > 1e-9 * count) {
    throw std::invalid_argument("continuous: substep must divide the unit interval");
  }
  if (!(spread > 0.0)) throw std::invalid_argument("continuous: spread must be > 0");
  if (max_intervals < 1) throw std::invalid_argument("continuous: max intervals must be >= 1");
  if (record.every < 0) throw std::invalid_argument("continuous: record cadence must be >= 0");
}

std::int64_t ContinuousConfig::substeps_per_interval() const {
  return std::llround(1.0 / substep);
}

bool blind_zone_sensor(std::size_t i, std::span<const Vec2> positions, Vec2 heading,
                       double delta) {
  const Vec2 self = positions[i];
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (j == i) continue;
    const Vec2 r = positions[j] - self;
    if (norm(r) > delta && dot(heading, r) <= 0.0) return true;
  }
  return false;
}

LyapunovState lyapunov_value(std::span<const Vec2> positions, double delta) {
  if (positions.empty()) throw std::domain_error("lyapunov_value: no agents");
  return observe(positions, delta).lyapunov;
}

IntervalOutcome continuous_interval(const Constellation& state, const ContinuousConfig& config,
                                    HeadingSource& headings, const SubstepObserver& observer) {
  const std::size_t n = state.size();
  IntervalOutcome out;
  out.state.headings.resize(n);
  headings.draw(out.state.headings);
  out.state.positions = state.positions;
  out.state.step_index = state.step_index + 1;
  out.moved.assign(n, 0);

  std::vector<Vec2> dir(n);
  for (std::size_t i = 0; i < n; ++i) dir[i] = unit_heading(out.state.headings[i]);

  const std::int64_t substeps = config.substeps_per_interval();
  const double dt = 1.0 / static_cast<double>(substeps);
  const double visible = config.delta * (1.0 - kBoundaryBand);
  const double visible_sq = visible * visible;
  const double exit_target = config.delta * (1.0 - 0.5 * kBoundaryBand);
  const double blind_sq = config.delta * config.delta;
  const std::size_t max_events = 4 * n + 16;

  std::vector<Vec2>& pos = out.state.positions;
  std::vector<Vec2> before;
  std::vector<std::uint8_t> active(n);

  for (std::int64_t s = 0; s < substeps; ++s) {
    if (observer) before = pos;

    bool any_active = false;
    for (std::size_t i = 0; i < n; ++i) {
      active[i] = integrator_sensed(i, pos, dir[i], visible_sq) ? 0 : 1;
      any_active = any_active || active[i];
    }

    double remaining = 1.0;
    std::size_t events = 0;
    while (any_active) {
      double f = remaining;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!active[i] && !active[j]) continue;
          const Vec2 r0 = pos[j] - pos[i];
          if (dot(r0, r0) > blind_sq) continue;
          Vec2 w{0.0, 0.0};
          if (active[j]) w += dt * dir[j];
          if (active[i]) w += -dt * dir[i];
          f = crossing_fraction(r0, w, exit_target, f);
        }
      }

      const double step = f * dt;
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        pos[i] += step * dir[i];
        if (step > 0.0) out.moved[i] = 1;
      }
      if (f >= remaining) break;
      remaining -= f;
      if (++events > max_events) break;

      any_active = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (active[i] && integrator_sensed(i, pos, dir[i], visible_sq)) active[i] = 0;
        any_active = any_active || active[i];
      }
    }

    if (observer) observer(SubstepView{before, pos, out.state.headings});
  }
  return out;
}

std::pair<Trace, RunSummary> run_continuous(const ContinuousConfig& config) {
  config.validate();
  Rng rng(config.seed);
  Constellation start = init_constellation(config.n, config.spread, rng);
  UniformHeadings headings(rng);
  return run_continuous(config, std::move(start), headings);
}

std::pair<Trace, RunSummary> run_continuous(const ContinuousConfig& config, Constellation start,
                                            HeadingSource& headings) {
  config.validate();
  if (start.size() != config.n) throw std::invalid_argument("continuous: start size != n");

  Trace trace;
  trace.model = Model::continuous;
  RunSummary summary;
  summary.seed = config.seed;
  summary.n = config.n;
  summary.spread = config.spread;

  Constellation state = std::move(start);
  std::vector<std::uint8_t> moved(config.n, 0);
  Observables obs = observe(state.positions, config.delta);

  auto record = [&] {
    trace.frames.push_back({state.step_index, state.positions, state.headings, moved, obs.radius,
                            obs.lyapunov.value, obs.lyapunov.confined});
  };
  record();

  while (!obs.lyapunov.confined && state.step_index < config.max_intervals) {
    IntervalOutcome step = continuous_interval(state, config, headings);
    state = std::move(step.state);
    moved = std::move(step.moved);
    obs = observe(state.positions, config.delta);
    const bool last = obs.lyapunov.confined || state.step_index >= config.max_intervals;
    if (last || config.record.keeps(state.step_index)) record();
  }

  if (obs.lyapunov.confined) summary.converged_step = state.step_index;
  summary.final_radius = obs.radius;
  summary.steps_run = state.step_index;
  return {std::move(trace), summary};
}

}  // namespace gathering
