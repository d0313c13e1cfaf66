#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mwsn/geometry.hpp"
#include "mwsn/random.hpp"

namespace mwsn {

enum class Model {
  Static,
  RandomWalk,
  RandomDirection,
  ParallelPath,
  CoverageBased,
};

const char* model_name(Model model);
std::optional<Model> model_from_name(std::string_view name);

struct MobilityParams {
  Model model = Model::CoverageBased;
  double speed = 5.0;         // m/s, fixed for the whole run
  double max_speed = 5.0;     // m/s, upper bound of the speed law
  double range = 500.0;       // m, transmission/sensing radius
  double step_length = 50.0;  // m traveled between direction decisions
};

struct NodeState {
  Point2 pos;
  Heading heading;
  double dist_since_decision = 0.0;
  double sweep_axis_coord = 0.0;  // parallel-path lane y; unused otherwise
};

/// One straight piece of a node's (or target's) path within a tick. Direction
/// changes at boundaries or decision points split a tick into several pieces.
struct TravelSegment {
  std::size_t node = 0;
  Point2 from;
  Point2 to;
};

/// Nodes dropped uniformly over the arena with uniform headings
/// (parallel-path nodes instead pick one of the two sweep directions
/// along the x axis and remember their lane).
std::vector<NodeState> init_nodes(std::size_t n, const MobilityParams& params,
                                  const Arena& arena, RandomStream& rng);

/// Direction of the resultant of the inverse-distance repulsive forces from
/// the given neighbors plus the 1/range momentum force along the current
/// heading. With no neighbors the heading is returned unchanged, as is the
/// heading when the forces cancel exactly. Repulsion magnitudes are capped at
/// distance 1 m; a neighbor at distance zero contributes a random unit force.
Heading resultant_direction(const NodeState& self,
                            std::span<const Point2> neighbors, double range,
                            RandomStream& rng);

/// Step-length decision for the node at node_index. Coverage-based nodes read
/// neighbor positions from the tick-start snapshot; random-walk nodes draw a
/// fresh uniform heading; the remaining models keep their heading here and
/// only react to boundaries.
Heading decide_direction(const NodeState& node, std::size_t node_index,
                         std::span<const NodeState> snapshot,
                         const MobilityParams& params, RandomStream& rng);

/// Heading applied when a node reaches the arena boundary: parallel-path
/// nodes reverse, every other mobile model redirects uniformly into the
/// interior (random direction with zero pause).
Heading boundary_heading(const NodeState& node, Model model,
                         const Arena& arena, RandomStream& rng);

/// Advances every node by speed*dt along its heading, firing step-length
/// decisions and boundary rules as the traveled distance crosses them.
/// Decisions within the tick read the node states captured at tick start.
/// When segments is non-null every straight sub-move is appended to it.
void advance(std::vector<NodeState>& nodes, const MobilityParams& params,
             const Arena& arena, double dt, RandomStream& rng,
             std::vector<TravelSegment>* segments = nullptr);

}  // namespace mwsn
