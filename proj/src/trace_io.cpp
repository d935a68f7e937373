#include "gathering/trace_io.h"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <json.hpp>

namespace gathering {

const char* to_string(Model model) {
  return model == Model::discrete ? "discrete" : "continuous";
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
  out << "step,agent,x,y,heading,moved\n";
  for (const Frame& f : trace.frames) {
    for (std::size_t i = 0; i < f.positions.size(); ++i) {
      fmt::print(out, "{},{},{:.17g},{:.17g},{:.17g},{}\n", f.step, i, f.positions[i].x,
                 f.positions[i].y, f.headings[i], static_cast<int>(f.moved[i]));
    }
  }
}

void write_series_csv(std::ostream& out, const Trace& trace) {
  out << "interval,sec_radius,lyapunov,confined\n";
  for (const Frame& f : trace.frames) {
    fmt::print(out, "{},{:.17g},{:.17g},{}\n", f.step, f.enclosing_radius, f.lyapunov.value_or(0.0),
               f.confined.value_or(false) ? 1 : 0);
  }
}

void write_summaries_csv(std::ostream& out, std::span<const RunSummary> summaries) {
  out << "run_id,seed,n,spread,converged_step,final_radius\n";
  for (std::size_t id = 0; id < summaries.size(); ++id) {
    const RunSummary& s = summaries[id];
    const std::string step = s.converged_step ? fmt::format("{}", *s.converged_step) : "";
    fmt::print(out, "{},{},{},{:.17g},{},{:.17g}\n", id, s.seed, s.n, s.spread, step,
               s.final_radius);
  }
}

std::string fit_json(const SweepFit& fit) {
  nlohmann::ordered_json j;
  if (fit.fit) {
    j["slope"] = fit.fit->slope;
    j["intercept"] = fit.fit->intercept;
    j["pearson_r"] = fit.fit->pearson_r;
  } else {
    j["slope"] = nullptr;
    j["intercept"] = nullptr;
    j["pearson_r"] = nullptr;
  }
  j["n_means"] = nlohmann::ordered_json::array();
  for (const NMean& m : fit.n_means) {
    nlohmann::ordered_json e;
    e["n"] = m.n;
    e["runs"] = m.runs;
    e["converged"] = m.converged;
    if (m.mean_step) {
      e["mean_step"] = *m.mean_step;
    } else {
      e["mean_step"] = nullptr;
    }
    j["n_means"].push_back(std::move(e));
  }
  j["not_converged"] = fit.not_converged;
  return j.dump(2) + "\n";
}

std::string bounds_json(const theory::BoundsReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["d_max0"] = r.d_max0;
  j["alpha_max"] = r.alpha_max;
  j["move_prob_lb"] = r.move_prob_lb;
  j["theta_s_max"] = r.theta_s_max;
  j["gamma_s_min"] = r.gamma_s_min;
  j["step_min"] = r.step_min;
  j["shrink_min"] = r.shrink_min;
  j["expected_intervals_ub"] = r.expected_intervals_ub;
  return j.dump(2) + "\n";
}

}  // namespace gathering
