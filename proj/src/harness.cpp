#include "gathering/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace gathering {

void SweepConfig::validate() const {
  if (n_values.empty()) throw std::invalid_argument("sweep: n list is empty");
  for (std::size_t n : n_values) {
    if (n < 1) throw std::invalid_argument("sweep: every n must be >= 1");
  }
  if (reps < 1) throw std::invalid_argument("sweep: reps must be >= 1");
  if (model == Model::discrete) {
    discrete.validate();
  } else {
    continuous.validate();
  }
}

std::vector<RunSummary> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::size_t cells = config.n_values.size() * config.reps;
  std::vector<RunSummary> results(cells);

  auto run_cell = [&](std::size_t cell) {
    const std::size_t n = config.n_values[cell / config.reps];
    const std::size_t rep = cell % config.reps;
    const std::uint64_t seed = derive_seed(config.base_seed, n, rep);
    if (config.model == Model::discrete) {
      DiscreteConfig c = config.discrete;
      c.n = n;
      c.seed = seed;
      c.record.every = 0;
      results[cell] = run_discrete(c).second;
    } else {
      ContinuousConfig c = config.continuous;
      c.n = n;
      c.seed = seed;
      c.record.every = 0;
      results[cell] = run_continuous(c).second;
    }
  };

  unsigned threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(cells));
  if (threads == 1) {
    for (std::size_t cell = 0; cell < cells; ++cell) run_cell(cell);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t cell = next++; cell < cells; cell = next++) {
          try {
            run_cell(cell);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

FitResult least_squares_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw std::domain_error("least_squares_fit: need at least two points");
  const double count = static_cast<double>(points.size());
  double mx = 0.0;
  double my = 0.0;
  for (auto [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= count;
  my /= count;

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (auto [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
    sxy += (x - mx) * (y - my);
  }
  if (!(sxx > 0.0)) throw std::domain_error("least_squares_fit: x values have no spread");

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.pearson_r = syy > 0.0 ? std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0) : 0.0;
  return fit;
}

SweepFit fit_sweep(std::span<const RunSummary> summaries) {
  std::map<std::size_t, NMean> by_n;
  std::map<std::size_t, double> totals;
  SweepFit out;
  for (const RunSummary& s : summaries) {
    NMean& m = by_n[s.n];
    m.n = s.n;
    ++m.runs;
    if (s.converged_step) {
      ++m.converged;
      totals[s.n] += static_cast<double>(*s.converged_step);
    } else {
      ++out.not_converged;
    }
  }

  std::vector<std::pair<double, double>> points;
  for (auto& [n, m] : by_n) {
    if (m.converged > 0) {
      m.mean_step = totals[n] / static_cast<double>(m.converged);
      points.emplace_back(static_cast<double>(n), *m.mean_step);
    }
    out.n_means.push_back(m);
  }
  if (points.size() >= 2) out.fit = least_squares_fit(points);
  return out;
}

std::optional<std::int64_t> detect_convergence(const Trace& trace, double radius,
                                               Threshold threshold) {
  if (trace.frames.empty()) throw std::invalid_argument("detect_convergence: empty trace");
  for (const Frame& f : trace.frames) {
    const bool hit = threshold == Threshold::inclusive ? f.enclosing_radius <= radius
                                                       : f.enclosing_radius < radius;
    if (hit) return f.step;
  }
  return std::nullopt;
}

std::optional<std::int64_t> detect_convergence(const Trace& trace, double radius) {
  return detect_convergence(
      trace, radius, trace.model == Model::discrete ? Threshold::inclusive : Threshold::strict);
}

}  // namespace gathering
