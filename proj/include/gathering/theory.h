#pragma once

#include <cstddef>

// Closed-form quantities from the convergence analysis of the blind-zone
// process. Angles are in radians throughout. Every function throws
// std::domain_error outside its stated domain.
namespace gathering::theory {

/// Upper bound on the sharpest convex-hull corner for n agents: pi*(1 - 2/n).
/// Requires n >= 3.
double sharpest_angle_bound(std::size_t n);

/// Lower bound on the probability that the sharpest-corner agent draws a
/// heading in the central half of its free sector: 1/(2n). Requires n >= 2.
double move_probability_bound(std::size_t n);

/// Guaranteed travel of the sharpest-corner agent in a successful interval:
/// min(delta * tan(pi/(4n)), 1).
double step_min(std::size_t n, double delta);

/// Decrease of the distance d between a stationary agent and one that travels
/// `step` at angle `theta` off the line joining them:
/// d - sqrt(d^2 + step^2 - 2*d*step*cos(theta)).
double shrink(double d, double step, double theta);

struct ShrinkPartials {
  double d_dd;
  double d_dstep;
  double d_dtheta;
};

// Analytic gradient of shrink(). The step derivative is
// -(step - d*cos(theta)) / sqrt(...), positive for step < d*cos(theta).
// Requires d > 0, step > 0, theta in [0, pi/2), and a nonzero end distance.
ShrinkPartials shrink_partials(double d, double step, double theta);

/// Lower bound on the per-event pairwise shrink: delta*(1 - sqrt(1 - tan^2(pi/(4n)))).
double shrink_min(std::size_t n, double delta);

/// Upper bound on the expected number of unit intervals until confinement:
/// 8 n^3 / (1 - sqrt(1 - tan^2(pi/(4n)))) * d_max0 / delta.
double expected_time_bound(std::size_t n, double delta, double d_max0);

struct ThetaGamma {
  double theta_s_max;
  double gamma_s_min;
};

/// ((pi/2)(1 - 1/n), pi/(2n)); the two always sum to pi/2. Requires n >= 2.
ThetaGamma theta_gamma(std::size_t n);

struct BoundsReport {
  std::size_t n = 0;
  double delta = 0.0;
  double d_max0 = 0.0;
  double alpha_max = 0.0;
  double move_prob_lb = 0.0;
  double theta_s_max = 0.0;
  double gamma_s_min = 0.0;
  double step_min = 0.0;
  double shrink_min = 0.0;
  double expected_intervals_ub = 0.0;
};

// Every bound at once. For n = 2 the hull degenerates to a segment and
// alpha_max is reported as the formula value pi*(1 - 2/n) = 0.
BoundsReport bounds_report(std::size_t n, double delta, double d_max0);

}  // namespace gathering::theory
