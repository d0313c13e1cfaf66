#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mwsn/engine.hpp"

namespace mwsn {

/// A Monte Carlo batch: `runs` repetitions of base_config where run i is
/// seeded with base_seed + i.
struct Experiment {
  SimConfig base_config;
  long runs = 2000;
  std::uint64_t base_seed = 1;
};

enum class Metric { DetectionProbability, TrackingPercentage };

struct Aggregate {
  double mean = 0.0;
  double std_error = 0.0;
  long runs = 0;
  Metric metric = Metric::DetectionProbability;
};

struct MonteCarloResult {
  Aggregate detection;
  Aggregate tracking;
};

struct SweepGrid {
  std::vector<long> n_values;
  std::vector<double> td_values;
  std::vector<Model> models;
};

struct SweepRow {
  Model model = Model::Static;
  long n_nodes = 0;
  double target_duration = 0.0;
  Aggregate detection;
  Aggregate tracking;
};

struct Histogram {
  double bin_width = 50.0;
  std::vector<long> counts;  // counts[i] covers [i*bin_width, (i+1)*bin_width)
};

struct SnapshotExport {
  std::vector<Snapshot> run0;                  // run 0, one per requested time
  std::vector<std::vector<double>> nn_by_run;  // per run, per node, at last time
  Histogram nn_histogram;                      // pooled over runs
};

/// The seeded runs of an experiment, indexed by run. The OpenMP version and
/// the serial reference produce identical vectors; both validate the config
/// before any run starts.
std::vector<RunResult> run_many(const SimConfig& config,
                                std::uint64_t base_seed, long runs);
std::vector<RunResult> run_many_serial(const SimConfig& config,
                                       std::uint64_t base_seed, long runs);

/// Detection and tracking aggregates of a run batch, reduced in run order so
/// the result does not depend on how the runs were produced.
MonteCarloResult aggregate_runs(std::span<const RunResult> results);

MonteCarloResult monte_carlo(const Experiment& exp, bool parallel = true);

/// Seed block for one sweep cell. Depends only on the cell's own coordinates
/// and spaces blocks 10^6 apart, so cells never share run seeds and adding or
/// reordering other cells never changes a cell's result.
std::uint64_t cell_seed(std::uint64_t base_seed, Model model, long n_nodes,
                        double target_duration);

/// Evaluates every (model, n_nodes, target_duration) cell; rows come back
/// sorted by model, then n_nodes, then target_duration.
std::vector<SweepRow> sweep(const SweepGrid& grid, const Experiment& tmpl,
                            bool parallel = true);

/// Smallest node count in [analytic bound, n_max] whose Monte Carlo detection
/// mean reaches pd_target, scanning upward one node at a time; nullopt when
/// n_max is not enough.
std::optional<long> find_min_nodes_empirical(double pd_target,
                                             const Experiment& tmpl,
                                             long n_max, bool parallel = true);

/// Node positions of run 0 at each requested time, plus nearest-neighbor
/// distances at the last time for every run, pooled into a 50 m histogram.
/// The node dynamics are run long enough to reach the last time regardless
/// of the experiment's target. Empty times produce an empty export.
SnapshotExport export_snapshots(const Experiment& exp,
                                std::vector<double> times,
                                bool parallel = true);

}  // namespace mwsn
