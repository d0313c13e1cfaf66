#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mwsn/geometry.hpp"
#include "mwsn/mobility.hpp"
#include "mwsn/target.hpp"

namespace mwsn {

/// One complete scenario: arena, node population and behavior, target, and
/// the tick size. snapshot_times asks run_single to record node positions the
/// first time the clock reaches each entry.
struct SimConfig {
  Arena arena;
  long n_nodes = 10;
  MobilityParams mobility;
  TargetSpec target;
  double dt = 1.0;
  std::vector<double> snapshot_times;
};

struct Snapshot {
  double time = 0.0;
  std::vector<Point2> positions;
};

struct RunResult {
  bool detected = false;
  std::optional<double> detection_time;
  long tracked_ticks = 0;
  long event_ticks = 0;
  std::vector<Snapshot> snapshots;
};

/// Rejects invalid scenarios: non-positive sizes, speeds out of range, or a
/// tick so large that motion per tick exceeds a tenth of the sensing radius.
void validate_config(const SimConfig& config);

/// True iff some node is within range of target_pos (closed disc).
bool covered_now(std::span<const NodeState> nodes, Point2 target_pos,
                 double range);

/// One seeded scenario, tick by tick: evaluate coverage, advance the target,
/// then advance the nodes, until the target's lifetime ends. Identical
/// (config, seed) pairs produce identical results. When node_segments is
/// non-null every node path piece is appended (used for swept-area checks).
RunResult run_single(const SimConfig& config, std::uint64_t seed,
                     std::vector<TravelSegment>* node_segments = nullptr);

/// Fraction of grid points (cell centers at the given resolution) within
/// range of at least one travel segment, i.e. inside the union of swept
/// capsules. OpenMP version and the serial reference it is tested against.
double covered_fraction(std::span<const TravelSegment> segments,
                        const Arena& arena, double range,
                        double grid_resolution);
double covered_fraction_serial(std::span<const TravelSegment> segments,
                               const Arena& arena, double range,
                               double grid_resolution);

/// Runs the node dynamics alone (no target) for the horizon and returns the
/// swept-coverage fraction on a point grid. grid_resolution must be at most
/// range/5.
double estimate_area_coverage(const SimConfig& config, double horizon,
                              double grid_resolution, std::uint64_t seed,
                              bool parallel = true);

}  // namespace mwsn
