#include "gathering/continuous.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gathering/discrete.h"
#include "gathering/theory.h"
#include "oracles.h"

namespace gathering {
namespace {

constexpr double kPi = std::numbers::pi;

Constellation make_state(std::vector<Vec2> positions) {
  Constellation c;
  c.headings.assign(positions.size(), 0.0);
  c.positions = std::move(positions);
  return c;
}

ContinuousConfig config_for(std::size_t n, double delta = 0.1, double substep = 1e-3) {
  ContinuousConfig c;
  c.n = n;
  c.delta = delta;
  c.substep = substep;
  return c;
}

TEST(BlindZoneSensor, SensingCases) {
  const double delta = 0.1;
  const Vec2 east{1, 0};
  std::vector<Vec2> close_behind{{0, 0}, {-delta / 2, 0}};
  EXPECT_FALSE(blind_zone_sensor(0, close_behind, east, delta));
  std::vector<Vec2> far_behind{{0, 0}, {-2 * delta, 0}};
  EXPECT_TRUE(blind_zone_sensor(0, far_behind, east, delta));
  std::vector<Vec2> far_ahead{{0, 0}, {2 * delta, 0}};
  EXPECT_FALSE(blind_zone_sensor(0, far_ahead, east, delta));
  std::vector<Vec2> far_abeam{{0, 0}, {0, 2 * delta}};
  EXPECT_TRUE(blind_zone_sensor(0, far_abeam, east, delta));
}

TEST(ContinuousInterval, LoneAgentTravelsUnitDistance) {
  const auto cfg = config_for(1);
  Rng rng(4);
  UniformHeadings headings(rng);
  Constellation state = make_state({{1, 2}});
  for (int k = 0; k < 20; ++k) {
    const IntervalOutcome out = continuous_interval(state, cfg, headings);
    EXPECT_NEAR(distance(out.state.positions[0], state.positions[0]), 1.0, 1e-12);
    EXPECT_EQ(out.moved[0], 1);
    state = out.state;
  }
}

TEST(ContinuousInterval, MutuallyInvisibleParallelPairKeepsDistance) {
  const auto cfg = config_for(2);
  ScriptedHeadings headings({{kPi / 2, kPi / 2}});
  const auto out = continuous_interval(make_state({{0, 0}, {0.05, 0}}), cfg, headings);
  EXPECT_EQ(out.moved, (std::vector<std::uint8_t>{1, 1}));
  EXPECT_NEAR(distance(out.state.positions[0], out.state.positions[1]), 0.05, 1e-12);
  EXPECT_NEAR(out.state.positions[0].y, 1.0, 1e-12);
}

TEST(ContinuousInterval, InvisiblePairFollowsFreeMotion) {
  // Both agents unblocked for the whole interval, so d(t) integrates to the
  // straight-line relative motion |r0 + t (v1 - v0)|.
  const auto cfg = config_for(2);
  const double h0 = 0.02;
  const double h1 = 0.0;
  ScriptedHeadings headings({{h0, h1}});
  const Vec2 r0{0.08, 0.0};
  const Vec2 w = unit_heading(h1) - unit_heading(h0);
  for (double t = 0.0; t <= 1.0; t += 1e-3) ASSERT_LT(norm(r0 + t * w), cfg.delta);

  const auto out = continuous_interval(make_state({{0, 0}, r0}), cfg, headings);
  EXPECT_EQ(out.moved, (std::vector<std::uint8_t>{1, 1}));
  EXPECT_NEAR(distance(out.state.positions[0], out.state.positions[1]), norm(r0 + w), 1e-12);
}

TEST(ContinuousInterval, SeparatingPairStopsAtBlindZoneEdge) {
  const auto cfg = config_for(2);
  ScriptedHeadings headings({{kPi, 0.0}});
  const auto out = continuous_interval(make_state({{0, 0}, {0.05, 0}}), cfg, headings);
  const double d = distance(out.state.positions[0], out.state.positions[1]);
  EXPECT_LE(d, cfg.delta);
  EXPECT_GE(d, cfg.delta * (1 - 1e-8));
  EXPECT_NEAR(out.state.positions[0].x, -0.025, 1e-9);
}

TEST(ContinuousInterval, HeadOnPairClosesAtRateTwo) {
  const auto cfg = config_for(2);
  ScriptedHeadings headings({{0.0, kPi}});
  Constellation state = make_state({{0, 0}, {10, 0}});
  for (double expected : {8.0, 6.0, 4.0, 2.0}) {
    state = continuous_interval(state, cfg, headings).state;
    EXPECT_NEAR(distance(state.positions[0], state.positions[1]), expected, 1e-9);
  }
  state = continuous_interval(state, cfg, headings).state;
  EXPECT_LT(distance(state.positions[0], state.positions[1]), cfg.delta);
  EXPECT_TRUE(lyapunov_value(state.positions, cfg.delta).confined);
}

TEST(ContinuousInterval, SubstepDistanceBoundAndMovementGating) {
  const auto cfg = config_for(10);
  const double dt = cfg.substep;
  std::size_t violations = 0;
  std::size_t gated_checks = 0;
  auto observer = [&](const SubstepView& v) {
    const std::size_t n = v.before.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (blind_zone_sensor(i, v.before, unit_heading(v.headings[i]), cfg.delta)) {
        ++gated_checks;
        if (!(v.after[i] == v.before[i])) ++violations;
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d0 = distance(v.before[i], v.before[j]);
        const double d1 = distance(v.after[i], v.after[j]);
        if (d0 > cfg.delta && d1 - d0 > 2 * dt) ++violations;
      }
    }
  };
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Rng rng(seed);
    Constellation state = init_constellation(cfg.n, 5.0, rng);
    UniformHeadings headings(rng);
    for (int k = 0; k < 40; ++k) state = continuous_interval(state, cfg, headings, observer).state;
  }
  EXPECT_EQ(violations, 0u);
  EXPECT_GT(gated_checks, 0u);
}

TEST(Lyapunov, Examples) {
  const std::vector<Vec2> same{{1, 1}, {1, 1}, {1, 1}};
  auto s = lyapunov_value(same, 0.1);
  EXPECT_TRUE(s.confined);
  EXPECT_EQ(s.value, 0.0);

  const std::vector<Vec2> pair{{0, 0}, {5, 0}};
  s = lyapunov_value(pair, 0.1);
  EXPECT_FALSE(s.confined);
  EXPECT_NEAR(s.value, 10.0, 1e-12);

  std::vector<Vec2> cluster;
  for (int k = 0; k < 3; ++k) cluster.push_back(0.05 * unit_heading(2 * kPi * k / 3));
  s = lyapunov_value(cluster, 0.1);
  EXPECT_TRUE(s.confined);
  EXPECT_EQ(s.value, 0.0);
}

TEST(Lyapunov, ZeroExactlyWhenConfined) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto pts = oracle::random_points(gen, 2 + trial % 6, 0.0, 0.25);
    const auto s = lyapunov_value(pts, 0.1);
    EXPECT_EQ(s.confined, s.value == 0.0);
  }
}

TEST(RunContinuous, LoneAgentConfinedAtStart) {
  auto cfg = config_for(1);
  cfg.seed = 2;
  const auto [trace, summary] = run_continuous(cfg);
  ASSERT_TRUE(summary.converged_step);
  EXPECT_EQ(*summary.converged_step, 0);
  ASSERT_EQ(trace.frames.size(), 1u);
  EXPECT_TRUE(*trace.frames[0].confined);
}

TEST(RunContinuous, PairAtDistanceThreeConfinesWellInsideBound) {
  auto cfg = config_for(2);
  const double bound = theory::expected_time_bound(2, 0.1, 3.0);
  EXPECT_NEAR(bound, 21376.0191355044, 1e-6);  // mpmath
  cfg.max_intervals = static_cast<std::int64_t>(bound);
  cfg.record.every = 0;
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    UniformHeadings headings(rng);
    const auto summary = run_continuous(cfg, make_state({{0, 0}, {3, 0}}), headings).second;
    ASSERT_TRUE(summary.converged_step) << "seed " << seed;
    total += static_cast<double>(*summary.converged_step);
  }
  EXPECT_LT(total / 100.0, 0.05 * bound);
}

TEST(RunContinuous, LyapunovNonIncreasingAndPairsStayClose) {
  auto cfg = config_for(10);
  cfg.spread = 5.0;
  const double tol = 2.0 * 100 * cfg.substep;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    cfg.seed = seed;
    const auto [trace, summary] = run_continuous(cfg);
    ASSERT_TRUE(summary.converged_step);
    for (std::size_t f = 1; f < trace.frames.size(); ++f) {
      EXPECT_LE(*trace.frames[f].lyapunov - *trace.frames[f - 1].lyapunov, tol)
          << "seed " << seed << " interval " << trace.frames[f].step;
    }
    // Pairs within delta stay within delta + 4 dt.
    for (std::size_t f = 0; f < trace.frames.size(); ++f) {
      const auto& p = trace.frames[f].positions;
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
          if (distance(p[i], p[j]) >= cfg.delta) continue;
          for (std::size_t g = f + 1; g < trace.frames.size(); ++g) {
            const auto& q = trace.frames[g].positions;
            ASSERT_LT(distance(q[i], q[j]), cfg.delta + 4 * cfg.substep);
          }
        }
      }
    }
  }
}

TEST(RunContinuous, HalvingSubstepIsFirstOrder) {
  // Same start and headings; compare one interval against a fine reference.
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 6;
    const auto pts = oracle::random_points(gen, n, 0.0, 2.0);
    std::vector<double> hs(n);
    for (double& h : hs) h = ang(gen);
    auto run_one = [&](double substep) {
      ScriptedHeadings headings({hs});
      return continuous_interval(make_state(pts), config_for(n, 0.1, substep), headings)
          .state.positions;
    };
    const auto reference = run_one(1.0 / 16000.0);
    for (double substep : {1e-3, 5e-4, 2.5e-4}) {
      const auto got = run_one(substep);
      double err = 0.0;
      for (std::size_t i = 0; i < n; ++i) err = std::max(err, distance(got[i], reference[i]));
      worst_ratio = std::max(worst_ratio, err / substep);
    }
  }
  EXPECT_LE(worst_ratio, 2.0);
}

TEST(RunContinuous, SharpestCornerTravelsAtLeastStepMin) {
  // When the sharpest hull corner draws a heading in the central half of its
  // free sector and nobody else moves, it travels at least step_min - 4 dt.
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 400 && checked < 50; ++seed) {
    const std::size_t n = 3 + seed % 3;
    auto cfg = config_for(n);
    cfg.seed = seed;
    cfg.spread = 3.0;
    const auto [trace, summary] = run_continuous(cfg);
    const double floor = theory::step_min(n, cfg.delta) - 4 * cfg.substep;
    for (std::size_t f = 0; f + 1 < trace.frames.size(); ++f) {
      const Frame& now = trace.frames[f];
      const Frame& next = trace.frames[f + 1];
      const Hull hull = convex_hull(now.positions);
      if (hull.size() < 3) continue;
      const auto angles = corner_angles(hull);
      const std::size_t k = static_cast<std::size_t>(
          std::min_element(angles.begin(), angles.end()) - angles.begin());
      const std::size_t s = hull.indices[k];
      const std::size_t m = hull.size();
      const Vec2 to_prev = hull.vertices[(k + m - 1) % m] - hull.vertices[k];
      const Vec2 to_next = hull.vertices[(k + 1) % m] - hull.vertices[k];
      const Vec2 bisector = (1 / norm(to_prev)) * to_prev + (1 / norm(to_next)) * to_next;
      const double beta = kPi - angles[k];
      const double off = std::remainder(next.headings[s] - std::atan2(bisector.y, bisector.x),
                                        2 * kPi);
      if (std::abs(off) > beta / 4) continue;
      bool others_still = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != s && next.moved[i]) others_still = false;
      }
      if (!others_still) continue;
      ++checked;
      EXPECT_GE(distance(next.positions[s], now.positions[s]), floor)
          << "seed " << seed << " interval " << next.step;
    }
  }
  EXPECT_GE(checked, 50u);
}

TEST(ContinuousConfig, Validation) {
  auto cfg = config_for(3);
  EXPECT_NO_THROW(cfg.validate());
  cfg.substep = 0.3;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.substep = 0.25;
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_EQ(cfg.substeps_per_interval(), 4);
  cfg.delta = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = config_for(0);
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace gathering
