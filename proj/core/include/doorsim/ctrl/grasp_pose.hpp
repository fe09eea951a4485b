#pragma once

#include "doorsim/geometry.hpp"
#include "doorsim/sim/scene.hpp"

namespace doorsim::ctrl {

// Grip pose for a handle estimate, same frame as the estimate. The gripper
// approach axis (its z) points into the door, opposite the handle normal;
// the finger line follows the handle's principal axis, which makes the bar
// grip come out rolled 90 degrees from the lever grip.
Pose3 grasp_pose_for(sim::HandleType type, const Pose3& handle_pose);

// Grip pose backed off along the handle normal by `standoff` meters.
Pose3 pre_grasp_pose(sim::HandleType type, const Pose3& handle_pose,
                     double standoff);

}  // namespace doorsim::ctrl
