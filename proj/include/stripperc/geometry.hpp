#pragma once

#include <cmath>
#include <vector>

namespace stripperc {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

inline double squared_distance(const Point2D& p, const Point2D& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

// sqrt is correctly rounded, so max/min over distance() and over
// squared_distance() followed by one sqrt agree bit for bit.
inline double distance(const Point2D& p, const Point2D& q) {
  return std::sqrt(squared_distance(p, q));
}

/// Ordered vertex sequence of a path. Units: the domain diameter is 2.
using Polyline = std::vector<Point2D>;

}  // namespace stripperc
