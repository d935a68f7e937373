#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gathering/geometry.h"

namespace gathering {

enum class Model { discrete, continuous };

const char* to_string(Model model);

// World state at an instant. `step_index` counts discrete steps or unit
// intervals, depending on the model.
struct Constellation {
  std::vector<Vec2> positions;
  std::vector<double> headings;  // radians, [0, 2*pi)
  std::int64_t step_index = 0;

  std::size_t size() const { return positions.size(); }
};

struct Frame {
  std::int64_t step = 0;
  std::vector<Vec2> positions;
  std::vector<double> headings;
  std::vector<std::uint8_t> moved;  // 1 if the agent moved during the step ending here
  double enclosing_radius = 0.0;
  // Continuous model only.
  std::optional<double> lyapunov;
  std::optional<bool> confined;
};

struct Trace {
  Model model = Model::discrete;
  std::vector<Frame> frames;
};

struct RunSummary {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double spread = 0.0;
  std::optional<std::int64_t> converged_step;
  double final_radius = 0.0;
  std::int64_t steps_run = 0;
};

// Which frames a run keeps. Frame 0 and the final frame are always kept;
// in between every `every`-th step is kept (0 keeps none).
struct RecordPolicy {
  std::int64_t every = 1;

  bool keeps(std::int64_t step) const { return step == 0 || (every > 0 && step % every == 0); }
};

}  // namespace gathering
