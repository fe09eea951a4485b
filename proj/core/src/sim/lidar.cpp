#include "doorsim/sim/lidar.hpp"

#include <algorithm>
#include <cmath>

#include "doorsim/sim/planar.hpp"

namespace doorsim::sim {

namespace {

double cast_ray(const Scene& scene, const DoorState& door, const Vec2& origin,
                double angle) {
  const Vec2 dir(std::cos(angle), std::sin(angle));
  double best = scene.params.lidar_max_range;
  for (const WallSegment& wall : scene.walls) {
    best = std::min(best, ray_segment_hit(origin, dir, wall.a, wall.b));
  }
  const WallSegment panel = door_segment(scene, door.theta);
  best = std::min(best, ray_segment_hit(origin, dir, panel.a, panel.b));
  return std::min(best, scene.params.lidar_max_range);
}

}  // namespace

LidarScan lidar_scan(const Scene& scene, const BasePose& base,
                     const DoorState& door) {
  LidarScan scan;
  const Vec2 origin = base.position();
  const double sector = M_PI / kLidarSectors;
  const int rays = std::max(1, scene.params.lidar_rays_per_sector);
  for (int i = 0; i < kLidarSectors; ++i) {
    const double lo = base.yaw - M_PI / 2.0 + i * sector;
    double best = scene.params.lidar_max_range;
    // several rays per 9 deg sector, so the reported minimum tracks the
    // nearest surface anywhere in the sector and not just its center line
    for (int k = 0; k < rays; ++k) {
      const double frac = (rays == 1) ? 0.5 : (k + 0.5) / rays;
      best = std::min(best, cast_ray(scene, door, origin, lo + frac * sector));
    }
    scan[i] = best;
  }
  return scan;
}

LidarScan lidar_scan_noisy(const Scene& scene, const BasePose& base,
                           const DoorState& door, Rng& rng) {
  LidarScan scan = lidar_scan(scene, base, door);
  const double sigma = scene.params.lidar_noise_std;
  for (double& s : scan) {
    if (sigma > 0.0) {
      s += sigma * rng.gaussian();
    }
    s = std::clamp(s, 1e-3, scene.params.lidar_max_range);
  }
  return scan;
}

}  // namespace doorsim::sim
