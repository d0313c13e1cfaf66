#include "mwsn/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

#include "mwsn/analysis.hpp"
#include "mwsn/errors.hpp"

namespace mwsn {
namespace {

constexpr std::uint64_t kCellSeedSpacing = 1'000'000;

double tracked_fraction(const RunResult& r) {
  return r.event_ticks > 0
             ? static_cast<double>(r.tracked_ticks) /
                   static_cast<double>(r.event_ticks)
             : 0.0;
}

int model_ordinal(Model model) { return static_cast<int>(model); }

}  // namespace

std::vector<RunResult> run_many_serial(const SimConfig& config,
                                       std::uint64_t base_seed, long runs) {
  validate_config(config);
  if (runs < 0) throw ConfigError("runs must be non-negative");
  std::vector<RunResult> results(static_cast<std::size_t>(runs));
  for (long i = 0; i < runs; ++i) {
    results[static_cast<std::size_t>(i)] =
        run_single(config, base_seed + static_cast<std::uint64_t>(i));
  }
  return results;
}

std::vector<RunResult> run_many(const SimConfig& config,
                                std::uint64_t base_seed, long runs) {
  validate_config(config);
  if (runs < 0) throw ConfigError("runs must be non-negative");
  std::vector<RunResult> results(static_cast<std::size_t>(runs));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < runs; ++i) {
    try {
      results[static_cast<std::size_t>(i)] =
          run_single(config, base_seed + static_cast<std::uint64_t>(i));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

MonteCarloResult aggregate_runs(std::span<const RunResult> results) {
  MonteCarloResult out;
  const long n = static_cast<long>(results.size());
  out.detection.metric = Metric::DetectionProbability;
  out.tracking.metric = Metric::TrackingPercentage;
  out.detection.runs = n;
  out.tracking.runs = n;
  if (n == 0) return out;

  long detected = 0;
  double tracked_sum = 0.0;
  for (const RunResult& r : results) {
    detected += r.detected ? 1 : 0;
    tracked_sum += tracked_fraction(r);
  }
  const double dn = static_cast<double>(n);
  out.detection.mean = static_cast<double>(detected) / dn;
  out.detection.std_error =
      std::sqrt(out.detection.mean * (1.0 - out.detection.mean) / dn);
  out.tracking.mean = tracked_sum / dn;
  if (n > 1) {
    double ss = 0.0;
    for (const RunResult& r : results) {
      const double d = tracked_fraction(r) - out.tracking.mean;
      ss += d * d;
    }
    out.tracking.std_error = std::sqrt(ss / (dn - 1.0)) / std::sqrt(dn);
  }
  return out;
}

MonteCarloResult monte_carlo(const Experiment& exp, bool parallel) {
  if (exp.runs < 1) throw ConfigError("runs must be at least 1");
  const std::vector<RunResult> results =
      parallel ? run_many(exp.base_config, exp.base_seed, exp.runs)
               : run_many_serial(exp.base_config, exp.base_seed, exp.runs);
  return aggregate_runs(results);
}

std::uint64_t cell_seed(std::uint64_t base_seed, Model model, long n_nodes,
                        double target_duration) {
  const auto td_ms =
      static_cast<std::uint64_t>(std::llround(target_duration * 1000.0));
  const std::uint64_t key = static_cast<std::uint64_t>(model_ordinal(model)) +
                            8ULL * (static_cast<std::uint64_t>(n_nodes) +
                                    4096ULL * td_ms);
  return base_seed + kCellSeedSpacing * key;
}

std::vector<SweepRow> sweep(const SweepGrid& grid, const Experiment& tmpl,
                            bool parallel) {
  if (grid.n_values.empty() || grid.td_values.empty() || grid.models.empty()) {
    throw ConfigError("sweep grid axes must be non-empty");
  }
  SweepGrid g = grid;
  std::sort(g.models.begin(), g.models.end(),
            [](Model a, Model b) { return model_ordinal(a) < model_ordinal(b); });
  std::sort(g.n_values.begin(), g.n_values.end());
  std::sort(g.td_values.begin(), g.td_values.end());

  std::vector<SweepRow> rows;
  rows.reserve(g.models.size() * g.n_values.size() * g.td_values.size());
  for (Model model : g.models) {
    for (long n : g.n_values) {
      for (double td : g.td_values) {
        Experiment cell = tmpl;
        cell.base_config.mobility.model = model;
        cell.base_config.n_nodes = n;
        cell.base_config.target.duration = td;
        cell.base_seed = cell_seed(tmpl.base_seed, model, n, td);
        const MonteCarloResult mc = monte_carlo(cell, parallel);
        rows.push_back({model, n, td, mc.detection, mc.tracking});
      }
    }
  }
  return rows;
}

std::optional<long> find_min_nodes_empirical(double pd_target,
                                             const Experiment& tmpl,
                                             long n_max, bool parallel) {
  if (!(pd_target > 0.0 && pd_target < 1.0)) {
    throw ConfigError("pd must lie in (0, 1)");
  }
  CoverageParams params;
  params.area = tmpl.base_config.arena.area();
  params.range = tmpl.base_config.mobility.range;
  params.mean_speed = tmpl.base_config.mobility.speed;
  params.horizon = tmpl.base_config.target.duration;
  // No mobility model sweeps more than non-overlapping capsules, so the
  // analytic bound is a valid scan start.
  const long start = std::max<long>(1, min_nodes_mobile(pd_target, params));
  for (long n = start; n <= n_max; ++n) {
    Experiment e = tmpl;
    e.base_config.n_nodes = n;
    e.base_seed =
        tmpl.base_seed + kCellSeedSpacing * static_cast<std::uint64_t>(n);
    if (monte_carlo(e, parallel).detection.mean >= pd_target) return n;
  }
  return std::nullopt;
}

SnapshotExport export_snapshots(const Experiment& exp,
                                std::vector<double> times, bool parallel) {
  SnapshotExport out;
  out.nn_histogram.bin_width = 50.0;
  if (times.empty()) return out;
  for (double t : times) {
    if (t < 0.0) throw ConfigError("snapshot times must be non-negative");
  }
  std::sort(times.begin(), times.end());

  // Node motion does not depend on the target, so a stationary probe target
  // lasting one tick past the final snapshot sets the run horizon.
  SimConfig probe = exp.base_config;
  probe.snapshot_times = times;
  probe.target = TargetSpec{TargetKind::Stationary, times.back() + probe.dt,
                            0.0, probe.target.step_length};
  const std::vector<RunResult> results =
      parallel ? run_many(probe, exp.base_seed, exp.runs)
               : run_many_serial(probe, exp.base_seed, exp.runs);
  if (results.empty()) return out;

  out.run0 = results.front().snapshots;
  const std::size_t bins = static_cast<std::size_t>(
      std::ceil(probe.arena.diagonal() / out.nn_histogram.bin_width));
  out.nn_histogram.counts.assign(std::max<std::size_t>(bins, 1), 0);
  out.nn_by_run.reserve(results.size());
  for (const RunResult& r : results) {
    std::vector<double> nn;
    if (!r.snapshots.empty()) {
      const std::vector<Point2>& pos = r.snapshots.back().positions;
      if (pos.size() >= 2) {
        nn.reserve(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) {
          double best = std::numeric_limits<double>::infinity();
          for (std::size_t j = 0; j < pos.size(); ++j) {
            if (j == i) continue;
            best = std::min(best, distance(pos[i], pos[j]));
          }
          nn.push_back(best);
          const auto bin = std::min(
              out.nn_histogram.counts.size() - 1,
              static_cast<std::size_t>(best / out.nn_histogram.bin_width));
          ++out.nn_histogram.counts[bin];
        }
      }
    }
    out.nn_by_run.push_back(std::move(nn));
  }
  return out;
}

}  // namespace mwsn
