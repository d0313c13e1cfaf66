#include "mwsn/engine.hpp"

#include <algorithm>
#include <cmath>

#include "mwsn/errors.hpp"
#include "mwsn/random.hpp"

namespace mwsn {
namespace {

double effective_target_speed(const TargetSpec& target) {
  return target.kind == TargetKind::Stationary ? 0.0 : target.speed;
}

long grid_cells(double side, double resolution) {
  return std::max<long>(1, std::llround(side / resolution));
}

bool point_in_swept_union(Point2 p, std::span<const TravelSegment> segments,
                          double range) {
  for (const TravelSegment& s : segments) {
    if (seg_point_distance(s.from, s.to, p) <= range) return true;
  }
  return false;
}

}  // namespace

void validate_config(const SimConfig& config) {
  if (!(config.arena.side > 2.0 * kBoundaryEps)) {
    throw ConfigError("arena_side must be positive");
  }
  if (config.n_nodes < 0) {
    throw ConfigError("n_nodes must be non-negative");
  }
  if (!(config.dt > 0.0)) {
    throw ConfigError("dt must be positive");
  }
  const MobilityParams& m = config.mobility;
  if (m.speed < 0.0 || m.speed > m.max_speed) {
    throw ConfigError("node_speed must lie in [0, max_speed]");
  }
  if (!(m.range > 0.0)) {
    throw ConfigError("range must be positive");
  }
  if (!(m.step_length > 0.0)) {
    throw ConfigError("step_length must be positive");
  }
  const TargetSpec& t = config.target;
  if (!(t.duration > 0.0)) {
    throw ConfigError("target_duration must be positive");
  }
  if (t.kind != TargetKind::Stationary && !(t.speed > 0.0)) {
    throw ConfigError("target_speed must be positive for mobile targets");
  }
  if (t.kind == TargetKind::RandomWalk && !(t.step_length > 0.0)) {
    throw ConfigError("step_length must be positive for random-walk targets");
  }
  const double per_tick = (m.speed + effective_target_speed(t)) * config.dt;
  if (per_tick > m.range / 10.0 + 1e-9) {
    throw ConfigError("dt too large: motion per tick exceeds range/10");
  }
  for (double s : config.snapshot_times) {
    if (s < 0.0) throw ConfigError("snapshot times must be non-negative");
  }
}

bool covered_now(std::span<const NodeState> nodes, Point2 target_pos,
                 double range) {
  for (const NodeState& node : nodes) {
    if (distance(node.pos, target_pos) <= range) return true;
  }
  return false;
}

RunResult run_single(const SimConfig& config, std::uint64_t seed,
                     std::vector<TravelSegment>* node_segments) {
  validate_config(config);
  RandomStream rng(seed);
  std::vector<NodeState> nodes = init_nodes(
      static_cast<std::size_t>(config.n_nodes), config.mobility, config.arena,
      rng);
  TargetState target = spawn_target(config.target, config.arena, rng);

  std::vector<double> snap_times = config.snapshot_times;
  std::sort(snap_times.begin(), snap_times.end());
  std::size_t next_snap = 0;

  RunResult result;
  long tick = 0;
  for (;;) {
    const double t = static_cast<double>(tick) * config.dt;
    ++result.event_ticks;
    if (covered_now(nodes, target.pos, config.mobility.range)) {
      ++result.tracked_ticks;
      if (!result.detected) {
        result.detected = true;
        result.detection_time = t;
      }
    }
    while (next_snap < snap_times.size() &&
           t >= snap_times[next_snap] - 1e-9) {
      Snapshot snap;
      snap.time = t;
      snap.positions.reserve(nodes.size());
      for (const NodeState& node : nodes) snap.positions.push_back(node.pos);
      result.snapshots.push_back(std::move(snap));
      ++next_snap;
    }
    advance_target(target, config.target, config.arena, config.dt, rng);
    if (target.finished) break;
    advance(nodes, config.mobility, config.arena, config.dt, rng,
            node_segments);
    ++tick;
  }
  return result;
}

double covered_fraction_serial(std::span<const TravelSegment> segments,
                               const Arena& arena, double range,
                               double grid_resolution) {
  const long nx = grid_cells(arena.side, grid_resolution);
  const double cell = arena.side / static_cast<double>(nx);
  long covered = 0;
  for (long j = 0; j < nx; ++j) {
    for (long i = 0; i < nx; ++i) {
      const Point2 p{(static_cast<double>(i) + 0.5) * cell,
                     (static_cast<double>(j) + 0.5) * cell};
      if (point_in_swept_union(p, segments, range)) ++covered;
    }
  }
  return static_cast<double>(covered) / static_cast<double>(nx * nx);
}

double covered_fraction(std::span<const TravelSegment> segments,
                        const Arena& arena, double range,
                        double grid_resolution) {
  const long nx = grid_cells(arena.side, grid_resolution);
  const double cell = arena.side / static_cast<double>(nx);
  const long total = nx * nx;
  long covered = 0;
#pragma omp parallel for reduction(+ : covered) schedule(dynamic, 64)
  for (long idx = 0; idx < total; ++idx) {
    const Point2 p{(static_cast<double>(idx % nx) + 0.5) * cell,
                   (static_cast<double>(idx / nx) + 0.5) * cell};
    if (point_in_swept_union(p, segments, range)) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(total);
}

double estimate_area_coverage(const SimConfig& config, double horizon,
                              double grid_resolution, std::uint64_t seed,
                              bool parallel) {
  SimConfig probe = config;
  probe.target = TargetSpec{};  // stationary placeholder, not simulated here
  validate_config(probe);
  if (horizon < 0.0) {
    throw ConfigError("horizon must be non-negative");
  }
  if (!(grid_resolution > 0.0) ||
      grid_resolution > config.mobility.range / 5.0 + 1e-9) {
    throw ConfigError("grid_resolution must lie in (0, range/5]");
  }
  RandomStream rng(seed);
  std::vector<NodeState> nodes = init_nodes(
      static_cast<std::size_t>(config.n_nodes), config.mobility, config.arena,
      rng);
  std::vector<TravelSegment> segments;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    segments.push_back({i, nodes[i].pos, nodes[i].pos});
  }
  const long ticks = static_cast<long>(horizon / config.dt + 1e-9);
  for (long k = 0; k < ticks; ++k) {
    advance(nodes, config.mobility, config.arena, config.dt, rng, &segments);
  }
  return parallel
             ? covered_fraction(segments, config.arena,
                                config.mobility.range, grid_resolution)
             : covered_fraction_serial(segments, config.arena,
                                       config.mobility.range, grid_resolution);
}

}  // namespace mwsn
