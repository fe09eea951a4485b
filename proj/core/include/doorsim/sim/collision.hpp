#pragma once

#include <string>
#include <vector>

#include "doorsim/geometry.hpp"
#include "doorsim/kin/arm_model.hpp"
#include "doorsim/sim/door.hpp"
#include "doorsim/sim/scene.hpp"

namespace doorsim::sim {

struct CollisionPair {
  std::string body_a;
  std::string body_b;
  double distance{0.0};  // separation at detection, negative when overlapping
};

struct CollisionReport {
  bool any{false};
  std::vector<CollisionPair> pairs;
};

// Base disc and projected arm capsules against walls and door panel, plus
// non-adjacent arm link pairs in 3D. A grasped end-effector link is exempt
// from the door check (it is intentionally touching the handle).
CollisionReport check_collision(const Scene& scene, const BasePose& base,
                                const kin::JointVec& q, const DoorState& door,
                                bool ee_grasped);

}  // namespace doorsim::sim
