#include "gathering/cli.h"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <optional>

#include "gathering/continuous.h"
#include "gathering/discrete.h"
#include "gathering/harness.h"
#include "gathering/theory.h"
#include "gathering/trace_io.h"

namespace gathering::cli {

namespace {

// Flags shared by `sim` and `sweep`. Unset optionals fall back to the model's
// defaults.
struct ModelFlags {
  Model model = Model::discrete;
  std::optional<double> spread;
  double delta = ContinuousConfig{}.delta;
  double substep = ContinuousConfig{}.substep;
  double step_size = DiscreteConfig{}.step_size;
  double radius = DiscreteConfig{}.convergence_radius;
  std::optional<std::int64_t> steps;

  void add_to(CLI::App& app) {
    app.add_option_function<std::string>(
           "--model",
           [this](std::string name) {
             for (char& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
             model = name == "continuous" ? Model::continuous : Model::discrete;
           },
           "discrete | continuous")
        ->required()
        ->type_name("MODEL")
        ->check(CLI::IsMember({"discrete", "continuous"}, CLI::ignore_case));
    app.add_option("--spread", spread, "side of the initial square (default 50 discrete, 5 continuous)");
    app.add_option("--delta", delta, "blind-zone radius (continuous)")->capture_default_str();
    app.add_option("--substep", substep, "integration substep; 1/substep must be an integer")
        ->capture_default_str();
    app.add_option("--step-size", step_size, "jump length (discrete)")->capture_default_str();
    app.add_option("--radius", radius, "convergence radius (discrete)")->capture_default_str();
    app.add_option("--steps", steps, "max steps (discrete) or intervals (continuous)");
  }

  DiscreteConfig discrete() const {
    DiscreteConfig c;
    c.step_size = step_size;
    c.convergence_radius = radius;
    if (spread) c.spread = *spread;
    if (steps) c.max_steps = *steps;
    return c;
  }

  ContinuousConfig continuous() const {
    ContinuousConfig c;
    c.delta = delta;
    c.substep = substep;
    if (spread) c.spread = *spread;
    if (steps) c.max_intervals = *steps;
    return c;
  }
};

std::string format_step(const std::optional<std::int64_t>& step) {
  return step ? fmt::format("{}", *step) : std::string("none");
}

}  // namespace

std::filesystem::path fit_path_for(const std::filesystem::path& summaries_path) {
  std::filesystem::path p = summaries_path;
  p.replace_extension(".fit.json");
  return p;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomized gathering simulator with back-sensing agents"};
  app.require_subcommand(1);

  // sim
  CLI::App* sim = app.add_subcommand("sim", "run one seeded simulation");
  ModelFlags sim_flags;
  sim_flags.add_to(*sim);
  std::size_t sim_n = 0;
  std::uint64_t sim_seed = 0;
  std::int64_t record_every = 1;
  std::string trace_path;
  std::string summary_path;
  std::string series_path;
  sim->add_option("--n", sim_n, "agent count")->required();
  sim->add_option("--seed", sim_seed, "random seed")->capture_default_str();
  sim->add_option("--record-every", record_every, "keep every R-th frame (0: first and last only)")
      ->capture_default_str();
  sim->add_option("--trace", trace_path, "trace CSV output")->required();
  sim->add_option("--summary", summary_path, "run summary CSV output")->required();
  sim->add_option("--series", series_path, "per-interval series CSV output (continuous)");

  // sweep
  CLI::App* sweep = app.add_subcommand("sweep", "seeded Monte-Carlo sweep over agent counts");
  ModelFlags sweep_flags;
  sweep_flags.add_to(*sweep);
  std::vector<std::size_t> n_list;
  std::size_t reps = 1;
  std::uint64_t base_seed = 0;
  unsigned threads = 1;
  std::string out_path;
  sweep->add_option("--n-list", n_list, "comma-separated agent counts")->required()->delimiter(',');
  sweep->add_option("--reps", reps, "runs per agent count")->required();
  sweep->add_option("--base-seed", base_seed, "base seed")->capture_default_str();
  sweep->add_option("--threads", threads, "worker threads (0: all cores)")->capture_default_str();
  sweep->add_option("--out", out_path, "summaries CSV output; the fit goes next to it")->required();

  // bounds
  CLI::App* bounds = app.add_subcommand("bounds", "closed-form convergence bounds as JSON");
  std::size_t bounds_n = 0;
  double bounds_delta = 0.0;
  double bounds_dmax = 0.0;
  bounds->add_option("--n", bounds_n, "agent count (>= 2)")->required();
  bounds->add_option("--delta", bounds_delta, "blind-zone radius")->required();
  bounds->add_option("--dmax", bounds_dmax, "initial max pairwise distance")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidArguments;
  }

  try {
    if (*sim) {
      Trace trace;
      RunSummary summary;
      if (sim_flags.model == Model::discrete) {
        DiscreteConfig c = sim_flags.discrete();
        c.n = sim_n;
        c.seed = sim_seed;
        c.record.every = record_every;
        std::tie(trace, summary) = run_discrete(c);
      } else {
        ContinuousConfig c = sim_flags.continuous();
        c.n = sim_n;
        c.seed = sim_seed;
        c.record.every = record_every;
        std::tie(trace, summary) = run_continuous(c);
      }
      write_file(trace_path, [&](std::ostream& s) { write_trace_csv(s, trace); });
      write_file(summary_path, [&](std::ostream& s) {
        write_summaries_csv(s, std::span<const RunSummary>(&summary, 1));
      });
      if (!series_path.empty()) {
        write_file(series_path, [&](std::ostream& s) { write_series_csv(s, trace); });
      }
      fmt::print(out, "{} n={} seed={}: converged at {}, final radius {:.6g}\n",
                 to_string(sim_flags.model), summary.n, summary.seed,
                 format_step(summary.converged_step), summary.final_radius);
    } else if (*sweep) {
      SweepConfig c;
      c.model = sweep_flags.model;
      c.n_values = n_list;
      c.reps = reps;
      c.base_seed = base_seed;
      c.discrete = sweep_flags.discrete();
      c.continuous = sweep_flags.continuous();
      c.threads = threads;
      const std::vector<RunSummary> summaries = run_sweep(c);
      const SweepFit fit = fit_sweep(summaries);
      write_file(out_path, [&](std::ostream& s) { write_summaries_csv(s, summaries); });
      write_file(fit_path_for(out_path), [&](std::ostream& s) { s << fit_json(fit); });
      if (fit.not_converged > 0) {
        fmt::print(err, "warning: {} of {} runs did not converge and are excluded from the fit\n",
                   fit.not_converged, summaries.size());
      }
      if (fit.fit) {
        fmt::print(out, "slope {:.6g}, intercept {:.6g}, pearson r {:.6f}\n", fit.fit->slope,
                   fit.fit->intercept, fit.fit->pearson_r);
      } else {
        fmt::print(out, "fit unavailable: fewer than two agent counts with converged runs\n");
      }
    } else if (*bounds) {
      out << bounds_json(theory::bounds_report(bounds_n, bounds_delta, bounds_dmax));
    }
  } catch (const IoError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kIoFailure;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kInvalidArguments;
  } catch (const std::domain_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kInvalidArguments;
  }
  return kSuccess;
}

}  // namespace gathering::cli
