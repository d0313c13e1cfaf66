// Randomized property suites shared by the unit tests and the acceptance
// runner. Each check runs `cases` randomized instances and reports the first
// violation it finds.
#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "mwsn/analysis.hpp"
#include "mwsn/geometry.hpp"
#include "mwsn/mobility.hpp"
#include "mwsn/random.hpp"

namespace checks {

using namespace mwsn;

struct Outcome {
  bool ok = true;
  std::string detail;
};

inline Outcome failure(const std::string& what) { return {false, what}; }

inline double angular_gap(double a, double b) {
  double d = std::fabs(Heading::normalize(a) - Heading::normalize(b));
  return std::min(d, kTwoPi - d);
}

inline Outcome triangle_inequality(int cases) {
  RandomStream rng(101);
  for (int i = 0; i < cases; ++i) {
    const Point2 p{rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4)};
    const Point2 q{rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4)};
    const Point2 r{rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4)};
    if (distance(p, r) > distance(p, q) + distance(q, r) + 1e-8) {
      return failure("triangle inequality violated");
    }
    if (std::fabs(distance(p, q) - distance(q, p)) > 0.0) {
      return failure("distance not symmetric");
    }
  }
  return {};
}

inline Outcome segment_distance_bounds(int cases) {
  RandomStream rng(102);
  for (int i = 0; i < cases; ++i) {
    const Point2 a{rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4)};
    const Point2 b{rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4)};
    const Point2 p{rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4)};
    const double d = seg_point_distance(a, b, p);
    if (d < 0.0) return failure("negative segment distance");
    if (d > std::min(distance(a, p), distance(b, p)) + 1e-8) {
      return failure("segment distance exceeds endpoint distance");
    }
  }
  return {};
}

inline Outcome segment_rigid_motion(int cases) {
  RandomStream rng(103);
  for (int i = 0; i < cases; ++i) {
    const Point2 a{rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3)};
    const Point2 b{rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3)};
    const Point2 p{rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3)};
    const double phi = rng.angle();
    const double tx = rng.uniform(-1e3, 1e3);
    const double ty = rng.uniform(-1e3, 1e3);
    const auto move = [&](Point2 v) {
      return Point2{std::cos(phi) * v.x - std::sin(phi) * v.y + tx,
                    std::sin(phi) * v.x + std::cos(phi) * v.y + ty};
    };
    const double before = seg_point_distance(a, b, p);
    const double after = seg_point_distance(move(a), move(b), move(p));
    if (std::fabs(before - after) > 1e-6 * (1.0 + before)) {
      std::ostringstream os;
      os << "segment distance not rigid-motion invariant: " << before
         << " vs " << after;
      return failure(os.str());
    }
  }
  return {};
}

// A redirected heading moves the boundary-contact coordinates strictly into
// (0, side) for any step below the side length.
inline Outcome redirect_inward(int cases) {
  RandomStream rng(104);
  for (int i = 0; i < cases; ++i) {
    const Arena arena{rng.uniform(100.0, 10000.0)};
    Point2 pos;
    const int edge = static_cast<int>(rng.uniform01() * 4.0);
    const double u =
        rng.uniform01() < 0.25 ? 0.0 : rng.uniform(0.0, arena.side);
    switch (edge) {
      case 0: pos = {0.0, u}; break;
      case 1: pos = {arena.side, u}; break;
      case 2: pos = {u, 0.0}; break;
      default: pos = {u, arena.side}; break;
    }
    const Heading h = redirect_into_interior(pos, arena, rng);
    const double step = rng.uniform(1e-9, arena.side * 0.999999);
    const Point2 moved{pos.x + step * h.dx(), pos.y + step * h.dy()};
    const bool left = pos.x <= kBoundaryEps;
    const bool right = pos.x >= arena.side - kBoundaryEps;
    const bool bottom = pos.y <= kBoundaryEps;
    const bool top = pos.y >= arena.side - kBoundaryEps;
    if ((left && !(moved.x > 0.0 && moved.x < arena.side)) ||
        (right && !(moved.x < arena.side && moved.x > 0.0)) ||
        (bottom && !(moved.y > 0.0 && moved.y < arena.side)) ||
        (top && !(moved.y < arena.side && moved.y > 0.0))) {
      return failure("redirected heading leaves the contact coordinate");
    }
  }
  return {};
}

inline Outcome force_no_neighbor(int cases) {
  RandomStream rng(105);
  for (int i = 0; i < cases; ++i) {
    NodeState self;
    self.pos = {rng.uniform(0.0, 4000.0), rng.uniform(0.0, 4000.0)};
    self.heading = Heading(rng.angle());
    const Heading out = resultant_direction(self, {}, 500.0, rng);
    if (out.radians() != self.heading.radians()) {
      return failure("no-neighbor heading changed");
    }
  }
  return {};
}

// Heading pointing straight at a closer-than-range neighbor must come back
// pointing away from it (within a quarter turn).
inline Outcome force_repulsion(int cases) {
  RandomStream rng(106);
  for (int i = 0; i < cases; ++i) {
    const double range = rng.uniform(2.0, 1000.0);
    const double d = rng.uniform(0.05, range * 0.999);
    const double psi = rng.angle();
    NodeState self;
    self.pos = {rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
    self.heading = Heading(psi);
    const std::vector<Point2> neighbors{
        {self.pos.x + d * std::cos(psi), self.pos.y + d * std::sin(psi)}};
    const Heading out = resultant_direction(self, neighbors, range, rng);
    if (angular_gap(out.radians(), psi + kTwoPi / 2.0) >= kTwoPi / 4.0) {
      return failure("resultant does not point away from close neighbor");
    }
  }
  return {};
}

inline Outcome force_mirror_symmetry(int cases) {
  RandomStream rng(107);
  for (int i = 0; i < cases; ++i) {
    const double theta = rng.angle();
    const double range = 500.0;
    NodeState self;
    self.pos = {rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
    self.heading = Heading(theta);
    const double along = rng.uniform(-400.0, 400.0);
    const double across = rng.uniform(1.0, 300.0);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const auto place = [&](double b, double off) {
      return Point2{self.pos.x + b * c - off * s,
                    self.pos.y + b * s + off * c};
    };
    const std::vector<Point2> neighbors{place(along, across),
                                        place(along, -across)};
    const Heading out = resultant_direction(self, neighbors, range, rng);
    const double gap = angular_gap(out.radians(), theta);
    if (std::min(gap, kTwoPi / 2.0 - gap) > 1e-7) {
      return failure("mirror-symmetric neighbors left the heading axis");
    }
  }
  return {};
}

// Scaling all distances and the range by a common factor leaves the
// resultant direction unchanged (distances kept above the 1 m cap).
inline Outcome force_scale_invariance(int cases) {
  RandomStream rng(108);
  for (int i = 0; i < cases; ++i) {
    const double range = rng.uniform(10.0, 1000.0);
    const double factor = rng.uniform(0.6, 50.0);
    NodeState self;
    self.pos = {rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
    self.heading = Heading(rng.angle());
    const int k = 1 + static_cast<int>(rng.uniform01() * 5.0);
    std::vector<Point2> base(static_cast<std::size_t>(k));
    std::vector<Point2> scaled(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) {
      const double d = rng.uniform(2.0, range);
      const double a = rng.angle();
      base[j] = {self.pos.x + d * std::cos(a), self.pos.y + d * std::sin(a)};
      scaled[j] = {self.pos.x + factor * d * std::cos(a),
                   self.pos.y + factor * d * std::sin(a)};
    }
    const Heading h1 = resultant_direction(self, base, range, rng);
    const Heading h2 = resultant_direction(self, scaled, factor * range, rng);
    if (angular_gap(h1.radians(), h2.radians()) > 1e-7) {
      return failure("resultant direction not scale invariant");
    }
  }
  return {};
}

inline Outcome min_nodes_round_trip(int cases) {
  RandomStream rng(109);
  for (int i = 0; i < cases; ++i) {
    CoverageParams p;
    p.area = rng.uniform(1e4, 1e8);
    p.range = rng.uniform(1.0, 1000.0);
    p.mean_speed = rng.uniform(0.0, 20.0);
    p.horizon = rng.uniform(0.0, 5000.0);
    const double pd = rng.uniform(1e-6, 1.0 - 1e-6);
    const long ns = min_nodes_static(pd, p);
    if (detect_prob_static(ns, p) < pd ||
        (ns > 0 && detect_prob_static(ns - 1, p) >= pd)) {
      return failure("static min-node round trip failed");
    }
    const long nm = min_nodes_mobile(pd, p);
    if (detect_prob_mobile(nm, p) < pd ||
        (nm > 0 && detect_prob_mobile(nm - 1, p) >= pd)) {
      return failure("mobile min-node round trip failed");
    }
    if (nm > ns) return failure("mobility increased the required node count");
  }
  return {};
}

inline Outcome poisson_normalization(int cases) {
  RandomStream rng(110);
  for (int i = 0; i < cases; ++i) {
    CoverageParams p;
    p.range = rng.uniform(1.0, 500.0);
    p.area = rng.uniform(1.0, 50.0) * (kTwoPi / 2.0) * p.range * p.range;
    const long n = static_cast<long>(rng.uniform(1.0, 50.0));
    const double lambda =
        static_cast<double>(n) * (kTwoPi / 2.0) * p.range * p.range / p.area;
    const long kmax =
        static_cast<long>(lambda + 20.0 * std::sqrt(lambda) + 30.0);
    double sum = 0.0;
    for (long k = 0; k <= kmax; ++k) sum += prob_k_coverage(n, p, k);
    if (std::fabs(sum - 1.0) > 1e-10) {
      return failure("Poisson masses do not sum to 1");
    }
    if (detect_prob_static(n, p) != 1.0 - prob_k_coverage(n, p, 0)) {
      return failure("static detection != 1 - P(k=0)");
    }
  }
  return {};
}

inline Outcome detect_prob_monotone(int cases) {
  RandomStream rng(111);
  for (int i = 0; i < cases; ++i) {
    CoverageParams p;
    p.area = rng.uniform(1e5, 1e8);
    p.range = rng.uniform(1.0, 1000.0);
    p.mean_speed = rng.uniform(0.1, 20.0);
    p.horizon = rng.uniform(1.0, 5000.0);
    const long n = static_cast<long>(rng.uniform(0.0, 100.0));
    // strictly increasing until the probability plateaus at double
    // resolution just below 1
    const auto increased = [](double lo, double hi) {
      return hi > lo || (hi == lo && lo >= 1.0 - 1e-9);
    };
    if (!increased(detect_prob_static(n, p), detect_prob_static(n + 1, p))) {
      return failure("static detection not increasing in n");
    }
    if (!increased(detect_prob_mobile(n, p), detect_prob_mobile(n + 1, p))) {
      return failure("mobile detection not increasing in n");
    }
    CoverageParams wider = p;
    wider.range = p.range * 1.1;
    if (!increased(detect_prob_static(n + 1, p),
                   detect_prob_static(n + 1, wider))) {
      return failure("detection not increasing in range");
    }
    CoverageParams longer = p;
    longer.horizon = p.horizon + 10.0;
    if (!increased(detect_prob_mobile(n + 1, p),
                   detect_prob_mobile(n + 1, longer))) {
      return failure("mobile detection not increasing in horizon");
    }
  }
  return {};
}

}  // namespace checks
