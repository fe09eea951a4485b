#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "doorsim/geometry.hpp"

namespace doorsim::sim {

// Distance along a unit ray to a segment, or +inf when it misses.
inline double ray_segment_hit(const Vec2& origin, const Vec2& dir,
                              const Vec2& a, const Vec2& b) {
  const Vec2 seg = b - a;
  const double denom = dir.x() * seg.y() - dir.y() * seg.x();
  if (std::abs(denom) < 1e-12) {
    return std::numeric_limits<double>::infinity();
  }
  const Vec2 rel = a - origin;
  const double t = (rel.x() * seg.y() - rel.y() * seg.x()) / denom;
  const double u = (rel.x() * dir.y() - rel.y() * dir.x()) / denom;
  if (t >= 0.0 && u >= 0.0 && u <= 1.0) {
    return t;
  }
  return std::numeric_limits<double>::infinity();
}

inline double point_segment_distance(const Vec2& p, const Vec2& a,
                                     const Vec2& b) {
  const Vec2 seg = b - a;
  const double len2 = seg.squaredNorm();
  if (len2 < 1e-18) {
    return (p - a).norm();
  }
  const double t = std::clamp((p - a).dot(seg) / len2, 0.0, 1.0);
  return (p - (a + t * seg)).norm();
}

inline double segment_segment_distance(const Vec2& a1, const Vec2& b1,
                                       const Vec2& a2, const Vec2& b2) {
  const Vec2 d1 = b1 - a1;
  const Vec2 d2 = b2 - a2;
  const double cross = d1.x() * d2.y() - d1.y() * d2.x();
  if (std::abs(cross) > 1e-12) {
    const Vec2 rel = a2 - a1;
    const double t = (rel.x() * d2.y() - rel.y() * d2.x()) / cross;
    const double u = (rel.x() * d1.y() - rel.y() * d1.x()) / cross;
    if (t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0) {
      return 0.0;
    }
  }
  return std::min(std::min(point_segment_distance(a1, a2, b2),
                           point_segment_distance(b1, a2, b2)),
                  std::min(point_segment_distance(a2, a1, b1),
                           point_segment_distance(b2, a1, b1)));
}

// Closest distance between 3D segments, for arm self-collision capsules.
inline double segment_segment_distance3(const Vec3& p1, const Vec3& q1,
                                        const Vec3& p2, const Vec3& q2) {
  const Vec3 d1 = q1 - p1;
  const Vec3 d2 = q2 - p2;
  const Vec3 r = p1 - p2;
  const double a = d1.squaredNorm();
  const double e = d2.squaredNorm();
  const double f = d2.dot(r);
  double s = 0.0;
  double t = 0.0;
  if (a < 1e-18 && e < 1e-18) {
    return r.norm();
  }
  if (a < 1e-18) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (e < 1e-18) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      if (denom > 1e-18) {
        s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
      }
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return ((p1 + s * d1) - (p2 + t * d2)).norm();
}

}  // namespace doorsim::sim
