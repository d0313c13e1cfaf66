#pragma once

#include <cmath>

#include "mwsn/random.hpp"

namespace mwsn {

/// Tolerance for deciding that a position sits on an arena boundary.
inline constexpr double kBoundaryEps = 1e-6;

/// Planar position in meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Direction of motion stored as an angle normalized into [0, 2*pi).
class Heading {
 public:
  Heading() = default;
  explicit Heading(double radians) : radians_(normalize(radians)) {}

  static Heading from_vector(double x, double y) {
    return Heading(std::atan2(y, x));
  }

  double radians() const { return radians_; }
  double dx() const { return std::cos(radians_); }
  double dy() const { return std::sin(radians_); }
  Heading reversed() const { return Heading(radians_ + kTwoPi / 2.0); }

  static double normalize(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
  }

 private:
  double radians_ = 0.0;
};

/// Axis-aligned square simulation area [0, side] x [0, side].
struct Arena {
  double side = 4000.0;

  bool contains(Point2 p) const {
    return p.x >= 0.0 && p.x <= side && p.y >= 0.0 && p.y <= side;
  }
  double area() const { return side * side; }
  double diagonal() const { return side * std::sqrt(2.0); }
};

/// Euclidean distance between two points.
double distance(Point2 p, Point2 q);

/// Minimum distance from p to the closed segment ab (a == b allowed).
double seg_point_distance(Point2 a, Point2 b, Point2 p);

/// Point drawn uniformly over the arena square.
Point2 sample_uniform_point(const Arena& arena, RandomStream& rng);

/// Heading drawn uniformly over the directions that point strictly into the
/// interior from a boundary position (half-plane on an edge, quarter-plane in
/// a corner). Throws std::logic_error when pos is not on the boundary; that
/// always indicates a caller bug.
Heading redirect_into_interior(Point2 pos, const Arena& arena,
                               RandomStream& rng);

}  // namespace mwsn
