#include "gathering/theory.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gathering::theory {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

void require_positive_finite(double v, const char* what) {
  require(std::isfinite(v) && v > 0.0, what);
}

double tan_quarter(std::size_t n) { return std::tan(kPi / (4.0 * static_cast<double>(n))); }

// 1 - sqrt(1 - tan^2(pi/4n)), written as t^2 / (1 + sqrt(1 - t^2)) to avoid
// cancellation for large n.
double shrink_factor(std::size_t n) {
  const double t2 = tan_quarter(n) * tan_quarter(n);
  require(t2 < 1.0, "shrink factor: tan^2(pi/4n) must be < 1 (n >= 2)");
  return t2 / (1.0 + std::sqrt(1.0 - t2));
}

}  // namespace

double sharpest_angle_bound(std::size_t n) {
  require(n >= 3, "sharpest_angle_bound: n must be >= 3");
  return kPi * (1.0 - 2.0 / static_cast<double>(n));
}

double move_probability_bound(std::size_t n) {
  require(n >= 2, "move_probability_bound: n must be >= 2");
  return 1.0 / (2.0 * static_cast<double>(n));
}

double step_min(std::size_t n, double delta) {
  require(n >= 2, "step_min: n must be >= 2");
  require_positive_finite(delta, "step_min: delta must be > 0");
  return std::min(delta * tan_quarter(n), 1.0);
}

double shrink(double d, double step, double theta) {
  require(std::isfinite(d) && d > 0.0, "shrink: d must be > 0");
  require(std::isfinite(step) && step >= 0.0, "shrink: step must be >= 0");
  require(std::isfinite(theta) && theta >= 0.0 && theta < kPi / 2.0,
          "shrink: theta must lie in [0, pi/2)");
  return d - std::sqrt(d * d + step * step - 2.0 * d * step * std::cos(theta));
}

ShrinkPartials shrink_partials(double d, double step, double theta) {
  require(std::isfinite(d) && d > 0.0, "shrink_partials: d must be > 0");
  require(std::isfinite(step) && step > 0.0, "shrink_partials: step must be > 0");
  require(std::isfinite(theta) && theta >= 0.0 && theta < kPi / 2.0,
          "shrink_partials: theta must lie in [0, pi/2)");
  const double c = std::cos(theta);
  const double end = std::sqrt(d * d + step * step - 2.0 * d * step * c);
  require(end > 0.0, "shrink_partials: end distance is zero (gradient undefined)");
  return {
      1.0 - (d - step * c) / end,
      -(step - d * c) / end,
      -(d * step * std::sin(theta)) / end,
  };
}

double shrink_min(std::size_t n, double delta) {
  require(n >= 2, "shrink_min: n must be >= 2");
  require_positive_finite(delta, "shrink_min: delta must be > 0");
  return delta * shrink_factor(n);
}

double expected_time_bound(std::size_t n, double delta, double d_max0) {
  require(n >= 2, "expected_time_bound: n must be >= 2");
  require_positive_finite(delta, "expected_time_bound: delta must be > 0");
  require_positive_finite(d_max0, "expected_time_bound: d_max0 must be > 0");
  const double nn = static_cast<double>(n);
  return 8.0 * nn * nn * nn / shrink_factor(n) * (d_max0 / delta);
}

ThetaGamma theta_gamma(std::size_t n) {
  require(n >= 2, "theta_gamma: n must be >= 2");
  const double gamma = kPi / (2.0 * static_cast<double>(n));
  return {kPi / 2.0 - gamma, gamma};
}

BoundsReport bounds_report(std::size_t n, double delta, double d_max0) {
  BoundsReport r;
  r.n = n;
  r.delta = delta;
  r.d_max0 = d_max0;
  r.expected_intervals_ub = expected_time_bound(n, delta, d_max0);
  r.alpha_max = n >= 3 ? sharpest_angle_bound(n) : 0.0;
  r.move_prob_lb = move_probability_bound(n);
  const ThetaGamma tg = theta_gamma(n);
  r.theta_s_max = tg.theta_s_max;
  r.gamma_s_min = tg.gamma_s_min;
  r.step_min = step_min(n, delta);
  r.shrink_min = shrink_min(n, delta);
  return r;
}

}  // namespace gathering::theory
