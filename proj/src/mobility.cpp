#include "mwsn/mobility.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace mwsn {
namespace {

constexpr double kMinForceDistance = 1.0;  // m, repulsion cap distance
constexpr double kZeroResultantNorm = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool uses_step_cadence(Model model) {
  return model == Model::RandomWalk || model == Model::CoverageBased;
}

// Unit direction vector. Parallel-path nodes only ever head along +x or -x;
// using exact axis vectors keeps their lane coordinate drift-free.
std::pair<double, double> unit_vector(const NodeState& node, Model model) {
  if (model == Model::ParallelPath) {
    const double a = node.heading.radians();
    const bool plus_x = a < kTwoPi / 4.0 || a > 3.0 * kTwoPi / 4.0;
    return {plus_x ? 1.0 : -1.0, 0.0};
  }
  return {node.heading.dx(), node.heading.dy()};
}

// Distance to the arena boundary along (ux, uy) from a position inside the
// closed square. Zero when already on the boundary and moving outward.
double exit_distance(Point2 pos, double ux, double uy, const Arena& arena) {
  double t = kInf;
  if (ux > 0.0) {
    t = std::min(t, (arena.side - pos.x) / ux);
  } else if (ux < 0.0) {
    t = std::min(t, pos.x / -ux);
  }
  if (uy > 0.0) {
    t = std::min(t, (arena.side - pos.y) / uy);
  } else if (uy < 0.0) {
    t = std::min(t, pos.y / -uy);
  }
  return std::max(t, 0.0);
}

void snap_to_boundary(Point2& pos, const Arena& arena) {
  if (pos.x <= kBoundaryEps) pos.x = 0.0;
  if (pos.x >= arena.side - kBoundaryEps) pos.x = arena.side;
  if (pos.y <= kBoundaryEps) pos.y = 0.0;
  if (pos.y >= arena.side - kBoundaryEps) pos.y = arena.side;
}

}  // namespace

const char* model_name(Model model) {
  switch (model) {
    case Model::Static: return "static";
    case Model::RandomWalk: return "random_walk";
    case Model::RandomDirection: return "random_direction";
    case Model::ParallelPath: return "parallel_path";
    case Model::CoverageBased: return "coverage_based";
  }
  return "unknown";
}

std::optional<Model> model_from_name(std::string_view name) {
  if (name == "static") return Model::Static;
  if (name == "random_walk") return Model::RandomWalk;
  if (name == "random_direction") return Model::RandomDirection;
  if (name == "parallel_path") return Model::ParallelPath;
  if (name == "coverage_based") return Model::CoverageBased;
  return std::nullopt;
}

std::vector<NodeState> init_nodes(std::size_t n, const MobilityParams& params,
                                  const Arena& arena, RandomStream& rng) {
  std::vector<NodeState> nodes;
  nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    NodeState node;
    node.pos = sample_uniform_point(arena, rng);
    if (params.model == Model::ParallelPath) {
      node.heading = Heading(rng.uniform01() < 0.5 ? 0.0 : kTwoPi / 2.0);
      node.sweep_axis_coord = node.pos.y;
    } else {
      node.heading = Heading(rng.angle());
    }
    nodes.push_back(node);
  }
  return nodes;
}

Heading resultant_direction(const NodeState& self,
                            std::span<const Point2> neighbors, double range,
                            RandomStream& rng) {
  if (neighbors.empty()) return self.heading;
  double rx = self.heading.dx() / range;
  double ry = self.heading.dy() / range;
  for (const Point2& q : neighbors) {
    const double dx = self.pos.x - q.x;
    const double dy = self.pos.y - q.y;
    const double d = std::hypot(dx, dy);
    if (d == 0.0) {
      const double a = rng.angle();
      rx += std::cos(a) / kMinForceDistance;
      ry += std::sin(a) / kMinForceDistance;
    } else {
      const double magnitude = 1.0 / std::max(d, kMinForceDistance);
      rx += magnitude * dx / d;
      ry += magnitude * dy / d;
    }
  }
  if (std::hypot(rx, ry) < kZeroResultantNorm) return self.heading;
  return Heading::from_vector(rx, ry);
}

Heading decide_direction(const NodeState& node, std::size_t node_index,
                         std::span<const NodeState> snapshot,
                         const MobilityParams& params, RandomStream& rng) {
  switch (params.model) {
    case Model::RandomWalk:
      return Heading(rng.angle());
    case Model::CoverageBased: {
      std::vector<Point2> neighbors;
      for (std::size_t j = 0; j < snapshot.size(); ++j) {
        if (j == node_index) continue;
        if (distance(snapshot[j].pos, node.pos) <= params.range) {
          neighbors.push_back(snapshot[j].pos);
        }
      }
      return resultant_direction(node, neighbors, params.range, rng);
    }
    case Model::RandomDirection:
    case Model::ParallelPath:
      return node.heading;
    case Model::Static:
      break;
  }
  throw std::logic_error("decide_direction: static nodes never decide");
}

Heading boundary_heading(const NodeState& node, Model model,
                         const Arena& arena, RandomStream& rng) {
  switch (model) {
    case Model::ParallelPath:
      return node.heading.reversed();
    case Model::RandomWalk:
    case Model::RandomDirection:
    case Model::CoverageBased:
      return redirect_into_interior(node.pos, arena, rng);
    case Model::Static:
      break;
  }
  throw std::logic_error("boundary_heading: static nodes never move");
}

void advance(std::vector<NodeState>& nodes, const MobilityParams& params,
             const Arena& arena, double dt, RandomStream& rng,
             std::vector<TravelSegment>* segments) {
  if (params.model == Model::Static || nodes.empty() || params.speed == 0.0) {
    return;
  }
  const bool cadence = uses_step_cadence(params.model);
  // All decisions within this tick read the state captured here, so the
  // outcome does not depend on the order nodes are processed in.
  const std::vector<NodeState> snapshot = nodes;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    NodeState& node = nodes[i];
    double remaining = params.speed * dt;
    int guard = 0;
    while (remaining > 0.0) {
      if (++guard > 100000) {
        throw std::logic_error("advance: node failed to consume its tick");
      }
      const auto [ux, uy] = unit_vector(node, params.model);
      const double to_decision =
          cadence ? params.step_length - node.dist_since_decision : kInf;
      const double to_exit = exit_distance(node.pos, ux, uy, arena);
      const double step = std::min({remaining, to_decision, to_exit});
      const Point2 from = node.pos;
      node.pos.x += ux * step;
      node.pos.y += uy * step;
      const bool hit_boundary = to_exit <= step;
      if (hit_boundary) snap_to_boundary(node.pos, arena);
      if (params.model == Model::ParallelPath) {
        node.pos.y = node.sweep_axis_coord;
      }
      if (segments) segments->push_back({i, from, node.pos});
      remaining -= step;
      if (cadence) {
        node.dist_since_decision += step;
        if (to_decision <= step) {
          node.heading = decide_direction(node, i, snapshot, params, rng);
          node.dist_since_decision = 0.0;
        }
      }
      // Boundary redirection happens after a simultaneous step decision and
      // deliberately does not reset the decision counter.
      if (hit_boundary) {
        node.heading = boundary_heading(node, params.model, arena, rng);
      }
    }
  }
}

}  // namespace mwsn
