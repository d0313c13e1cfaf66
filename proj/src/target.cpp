#include "mwsn/target.hpp"

#include <cmath>
#include <stdexcept>

namespace mwsn {
namespace {

// Random-walk targets reuse the node kinematics with a one-element state
// vector so both walks stay equal by construction.
void random_walk_tick(TargetState& state, const TargetSpec& spec,
                      const Arena& arena, double dt, RandomStream& rng,
                      std::vector<TravelSegment>* path) {
  MobilityParams params;
  params.model = Model::RandomWalk;
  params.speed = spec.speed;
  params.max_speed = spec.speed;
  params.step_length = spec.step_length;
  std::vector<NodeState> walker(1);
  walker[0].pos = state.pos;
  walker[0].heading = state.heading;
  walker[0].dist_since_decision = state.dist_since_decision;
  advance(walker, params, arena, dt, rng, path);
  state.pos = walker[0].pos;
  state.heading = walker[0].heading;
  state.dist_since_decision = walker[0].dist_since_decision;
}

}  // namespace

const char* target_kind_name(TargetKind kind) {
  switch (kind) {
    case TargetKind::Stationary: return "stationary";
    case TargetKind::LinearCrossing: return "linear";
    case TargetKind::RandomWalk: return "random_walk";
  }
  return "unknown";
}

std::optional<TargetKind> target_kind_from_name(std::string_view name) {
  if (name == "stationary") return TargetKind::Stationary;
  if (name == "linear") return TargetKind::LinearCrossing;
  if (name == "random_walk") return TargetKind::RandomWalk;
  return std::nullopt;
}

TargetState spawn_target(const TargetSpec& spec, const Arena& arena,
                         RandomStream& rng) {
  TargetState state;
  switch (spec.kind) {
    case TargetKind::Stationary:
      state.pos = sample_uniform_point(arena, rng);
      break;
    case TargetKind::RandomWalk:
      state.pos = sample_uniform_point(arena, rng);
      state.heading = Heading(rng.angle());
      break;
    case TargetKind::LinearCrossing: {
      const int edge = static_cast<int>(rng.uniform01() * 4.0);
      const double u = rng.uniform(0.0, arena.side);
      const double v = rng.uniform(0.0, arena.side);
      switch (edge) {
        case 0: state.start = {0.0, u}; state.end = {arena.side, v}; break;
        case 1: state.start = {arena.side, u}; state.end = {0.0, v}; break;
        case 2: state.start = {u, 0.0}; state.end = {v, arena.side}; break;
        default: state.start = {u, arena.side}; state.end = {v, 0.0}; break;
      }
      state.pos = state.start;
      state.heading = Heading::from_vector(state.end.x - state.start.x,
                                           state.end.y - state.start.y);
      break;
    }
  }
  return state;
}

void advance_target(TargetState& state, const TargetSpec& spec,
                    const Arena& arena, double dt, RandomStream& rng,
                    std::vector<TravelSegment>* path) {
  if (state.finished) {
    throw std::logic_error("advance_target: target already finished");
  }
  switch (spec.kind) {
    case TargetKind::Stationary:
      break;
    case TargetKind::RandomWalk:
      random_walk_tick(state, spec, arena, dt, rng, path);
      break;
    case TargetKind::LinearCrossing: {
      const double to_end = distance(state.pos, state.end);
      const double step = spec.speed * dt;
      const Point2 from = state.pos;
      if (step >= to_end) {
        state.pos = state.end;
        state.finished = true;
      } else {
        state.pos.x += (state.end.x - state.pos.x) / to_end * step;
        state.pos.y += (state.end.y - state.pos.y) / to_end * step;
      }
      if (path) path->push_back({0, from, state.pos});
      break;
    }
  }
  state.elapsed = std::min(state.elapsed + dt, spec.duration);
  if (state.elapsed >= spec.duration) state.finished = true;
}

}  // namespace mwsn
