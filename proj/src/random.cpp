#include "gathering/random.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gathering {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a >= kTwoPi ? 0.0 : a;
}

double Rng::angle() {
  const double a = kTwoPi * uniform01();
  return a >= kTwoPi ? 0.0 : a;
}

void UniformHeadings::draw(std::span<double> headings) {
  for (double& h : headings) h = rng_->angle();
}

ScriptedHeadings::ScriptedHeadings(std::vector<std::vector<double>> script)
    : script_(std::move(script)) {
  if (script_.empty()) throw std::invalid_argument("ScriptedHeadings: empty script");
}

void ScriptedHeadings::draw(std::span<double> headings) {
  const auto& row = script_[std::min(next_, script_.size() - 1)];
  if (row.size() != headings.size()) {
    throw std::invalid_argument("ScriptedHeadings: row size does not match agent count");
  }
  for (std::size_t i = 0; i < row.size(); ++i) headings[i] = wrap_angle(row[i]);
  ++next_;
}

}  // namespace gathering
