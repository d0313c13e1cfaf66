#include "mwsn/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwsn {

double distance(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

double seg_point_distance(Point2 a, Point2 b, Point2 p) {
  const double abx = b.x - a.x;
  const double aby = b.y - a.y;
  const double len2 = abx * abx + aby * aby;
  if (len2 == 0.0) return distance(a, p);
  double t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance({a.x + t * abx, a.y + t * aby}, p);
}

Point2 sample_uniform_point(const Arena& arena, RandomStream& rng) {
  return {rng.uniform(0.0, arena.side), rng.uniform(0.0, arena.side)};
}

Heading redirect_into_interior(Point2 pos, const Arena& arena,
                               RandomStream& rng) {
  const bool left = pos.x <= kBoundaryEps;
  const bool right = pos.x >= arena.side - kBoundaryEps;
  const bool bottom = pos.y <= kBoundaryEps;
  const bool top = pos.y >= arena.side - kBoundaryEps;
  if (!(left || right || bottom || top)) {
    throw std::logic_error("redirect_into_interior: position is interior");
  }
  // Rejection sample; the admissible sector is at least a quarter plane, so
  // this terminates after a handful of draws.
  for (int i = 0; i < 1000; ++i) {
    const Heading h(rng.angle());
    const double cx = h.dx();
    const double cy = h.dy();
    if (left && cx <= 0.0) continue;
    if (right && cx >= 0.0) continue;
    if (bottom && cy <= 0.0) continue;
    if (top && cy >= 0.0) continue;
    return h;
  }
  throw std::logic_error("redirect_into_interior: no inward direction exists");
}

}  // namespace mwsn
