#include "doorsim/sim/scene.hpp"

#include <algorithm>
#include <cmath>

#include "doorsim/error.hpp"

namespace doorsim::sim {

kin::JointVec ready_joint_pose() {
  kin::JointVec q;
  q << 0.0, 0.6, 0.0, 1.0, 0.0, -0.3, 0.0;
  return q;
}

void validate(const DoorSpec& door) {
  if (door.width < 0.5 || door.width > 2.0) {
    throw ConfigError("door width out of range [0.5, 2.0]");
  }
  if (door.handle_offset_from_edge < 0.0 ||
      door.handle_offset_from_edge >= door.width) {
    throw ConfigError("handle offset must lie within the door width");
  }
  if (door.hinge_damping < 0.0 || door.latch_release_angle <= 0.0 ||
      door.panel_mass <= 0.0 || door.handle_return_damping <= 0.0) {
    throw ConfigError("invalid door dynamics parameters");
  }
}

Scene Scene::build(const DoorSpec& door, const RobotParams& robot,
                   const SimParams& params) {
  validate(door);
  Scene scene;
  scene.door = door;
  scene.robot = robot;
  scene.params = params;
  scene.arm = kin::ArmModel::default_model();

  const double half = door.width / 2.0;
  const double reach = params.wall_half_length;
  scene.walls.push_back({Vec2(0.0, half), Vec2(0.0, reach)});
  scene.walls.push_back({Vec2(0.0, -half), Vec2(0.0, -reach)});

  if (door.hinge_side == HingeSide::Left) {
    scene.hinge = Vec2(0.0, half);
    scene.closed_dir = Vec2(0.0, -1.0);
    scene.swing_sign = (door.swing == SwingDir::Push) ? 1.0 : -1.0;
  } else {
    scene.hinge = Vec2(0.0, -half);
    scene.closed_dir = Vec2(0.0, 1.0);
    scene.swing_sign = (door.swing == SwingDir::Push) ? -1.0 : 1.0;
  }
  return scene;
}

double door_clearance(const DoorSpec& door, double theta) {
  const double t = std::clamp(theta, 0.0, M_PI / 2.0);
  return door.width * std::sin(t);
}

bool doorway_passable(const DoorSpec& door, double theta,
                      double required_clearance) {
  return door_clearance(door, theta) > required_clearance;
}

}  // namespace doorsim::sim
