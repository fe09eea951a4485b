#pragma once

#include "doorsim/geometry.hpp"
#include "doorsim/kin/arm_model.hpp"
#include "doorsim/rng.hpp"
#include "doorsim/sim/collision.hpp"
#include "doorsim/sim/door.hpp"
#include "doorsim/sim/lidar.hpp"
#include "doorsim/sim/scene.hpp"

namespace doorsim::sim {

struct BaseCommand {
  double v{0.0};  // forward [m/s]
  double w{0.0};  // yaw rate [rad/s]
};

// Differential-drive equivalents (left, right) in rad/s.
Vec2 wheel_speeds(const BaseCommand& cmd, const RobotParams& robot);
BaseCommand from_wheel_speeds(const Vec2& wheels, const RobotParams& robot);

struct GraspState {
  bool attached{false};
  // End-effector pose in the handle frame, captured at attach. The grasp
  // target then rides the handle rigidly, so the wrench starts near zero.
  Pose3 t_handle_ee{Pose3::identity()};
};

struct WorldState {
  double time{0.0};
  BasePose base{};
  double v_applied{0.0};
  double w_applied{0.0};
  kin::JointVec q{kin::JointVec::Zero()};
  kin::JointVec qd{kin::JointVec::Zero()};
  kin::JointVec effort{kin::JointVec::Zero()};
  DoorState door{};
  GraspState grasp{};
  Wrench disturbance{};  // injected at the ee, base frame; for robustness tests
};

// Quasi-static world: kinematic base and arm, second-order door, penalty
// spring between end-effector and grasped handle.
class World {
 public:
  World(Scene scene, const BasePose& start);

  const Scene& scene() const { return scene_; }
  const WorldState& state() const { return state_; }
  WorldState& mutable_state() { return state_; }

  // Advances dt, subdividing into internal substeps of at most params.dt.
  // Throws FaultError on non-finite commands.
  void step(const BaseCommand& base_cmd, const kin::JointVec& qd_cmd,
            double dt);

  // Base frame: x forward, y left, z up, origin at base center on the floor.
  Pose3 ee_pose_base() const;
  Pose3 ee_pose_world() const;
  Pose3 mount_pose_world() const;

  // Wrench the end-effector applies to the environment (spring + contact),
  // plus the injected disturbance, expressed in the base frame. Pressing
  // forward against the door therefore reads as positive x force.
  Wrench ee_wrench() const;
  Wrench ee_wrench_noisy(Rng& rng) const;

  Pose3 handle_pose_world() const;
  Pose3 handle_pose_base() const;

  bool ee_touching_handle() const;
  // Captures the attach offset; fails (returns false) outside contact range.
  bool attach_grasp();
  void release_grasp();

  LidarScan scan() const;
  LidarScan scan_noisy(Rng& rng) const;
  CollisionReport collision() const;
  double clearance() const;

 private:
  struct WrenchSplit {
    Vec3 force_w{Vec3::Zero()};   // on the ee, world frame
    Vec3 torque_w{Vec3::Zero()};
    Vec3 application_w{Vec3::Zero()};
  };
  WrenchSplit coupling_wrench() const;
  Vec3 ee_velocity_world() const;
  Vec3 ee_omega_world() const;
  void substep(double h);
  void update_effort();

  Scene scene_;
  WorldState state_;
};

}  // namespace doorsim::sim
