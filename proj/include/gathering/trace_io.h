#pragma once

#include <filesystem>
#include <fstream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include "gathering/harness.h"
#include "gathering/simulation.h"
#include "gathering/theory.h"

namespace gathering {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output formats. Reals are written with 17 significant digits so files
// round-trip exactly; all writers are deterministic.

// `step,agent,x,y,heading,moved`, one row per agent per recorded frame.
void write_trace_csv(std::ostream& out, const Trace& trace);

// `interval,sec_radius,lyapunov,confined`, one row per recorded frame of a
// continuous trace.
void write_series_csv(std::ostream& out, const Trace& trace);

// `run_id,seed,n,spread,converged_step,final_radius`; converged_step is empty
// for runs that did not converge. run_id is the row position.
void write_summaries_csv(std::ostream& out, std::span<const RunSummary> summaries);

// {"slope", "intercept", "pearson_r", "n_means": [...], "not_converged"}; the
// fit fields are null when there are fewer than two converged agent counts.
std::string fit_json(const SweepFit& fit);

std::string bounds_json(const theory::BoundsReport& report);

// Writes `write(stream)` to `path`, throwing IoError when the file cannot be
// opened or written.
template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& write) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write(static_cast<std::ostream&>(out));
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace gathering
