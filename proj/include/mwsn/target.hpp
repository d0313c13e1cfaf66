#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mwsn/geometry.hpp"
#include "mwsn/mobility.hpp"
#include "mwsn/random.hpp"

namespace mwsn {

enum class TargetKind { Stationary, LinearCrossing, RandomWalk };

const char* target_kind_name(TargetKind kind);
std::optional<TargetKind> target_kind_from_name(std::string_view name);

struct TargetSpec {
  TargetKind kind = TargetKind::Stationary;
  double duration = 500.0;    // s of event lifetime
  double speed = 5.0;         // m/s, mobile kinds only
  double step_length = 50.0;  // m between direction draws, random-walk kind
};

struct TargetState {
  Point2 pos;
  Heading heading;
  double dist_since_decision = 0.0;
  Point2 start;  // linear crossing endpoints
  Point2 end;
  double elapsed = 0.0;
  bool finished = false;
};

/// Stationary and random-walk targets appear uniformly in the arena; a
/// linear-crossing target starts uniformly on a uniformly chosen edge and
/// heads for a uniform point on the opposite edge.
TargetState spawn_target(const TargetSpec& spec, const Arena& arena,
                         RandomStream& rng);

/// One tick of target motion. Sets state.finished once the event duration is
/// exhausted (or, for a linear crossing, the far edge is reached). Advancing
/// a finished target throws std::logic_error. The actual path pieces are
/// appended to path when non-null.
void advance_target(TargetState& state, const TargetSpec& spec,
                    const Arena& arena, double dt, RandomStream& rng,
                    std::vector<TravelSegment>* path = nullptr);

}  // namespace mwsn
