#pragma once

#include <array>

#include "doorsim/geometry.hpp"
#include "doorsim/rng.hpp"
#include "doorsim/sim/door.hpp"
#include "doorsim/sim/scene.hpp"

namespace doorsim::sim {

inline constexpr int kLidarSectors = 20;

// Per-sector minimum range over the front half circle, ordered from the
// robot's right (-90 deg) to its left (+90 deg). Values in (0, max_range].
using LidarScan = std::array<double, kLidarSectors>;

// Noiseless scan of the walls and door panel from the base center.
LidarScan lidar_scan(const Scene& scene, const BasePose& base,
                     const DoorState& door);

// Adds zero-mean Gaussian range noise, then clamps back into (0, max_range].
LidarScan lidar_scan_noisy(const Scene& scene, const BasePose& base,
                           const DoorState& door, Rng& rng);

}  // namespace doorsim::sim
