#include "doorsim/sim/world.hpp"

#include <algorithm>
#include <cmath>

#include "doorsim/error.hpp"

namespace doorsim::sim {

Vec2 wheel_speeds(const BaseCommand& cmd, const RobotParams& robot) {
  const double half_track = robot.track_width / 2.0;
  return Vec2((cmd.v - cmd.w * half_track) / robot.wheel_radius,
              (cmd.v + cmd.w * half_track) / robot.wheel_radius);
}

BaseCommand from_wheel_speeds(const Vec2& wheels, const RobotParams& robot) {
  BaseCommand cmd;
  cmd.v = robot.wheel_radius * (wheels.x() + wheels.y()) / 2.0;
  cmd.w = robot.wheel_radius * (wheels.y() - wheels.x()) / robot.track_width;
  return cmd;
}

World::World(Scene scene, const BasePose& start) : scene_(std::move(scene)) {
  state_.base = start;
  state_.q = scene_.robot.q_init;
  if (scene_.door.handle_type == HandleType::Bar) {
    state_.door.latched = false;
  }
  update_effort();
}

Pose3 World::mount_pose_world() const {
  Pose3 pose = state_.base.to_pose3();
  pose.p.z() = scene_.robot.mount_height;
  return pose;
}

Pose3 World::ee_pose_base() const {
  Pose3 pose = kin::fk(scene_.arm, state_.q);
  pose.p.z() += scene_.robot.mount_height;
  return pose;
}

Pose3 World::ee_pose_world() const {
  return mount_pose_world() * kin::fk(scene_.arm, state_.q);
}

Pose3 World::handle_pose_world() const {
  return handle_frame(scene_, state_.door);
}

Pose3 World::handle_pose_base() const {
  return state_.base.to_pose3().inverse() * handle_pose_world();
}

Vec3 World::ee_velocity_world() const {
  const Pose3 ee = ee_pose_world();
  const Vec3 p_base(state_.base.x, state_.base.y, 0.0);
  const Vec3 v_base = state_.v_applied * Vec3(std::cos(state_.base.yaw),
                                              std::sin(state_.base.yaw), 0.0);
  const Vec3 omega_base(0.0, 0.0, state_.w_applied);
  const kin::Jacobian jac = kin::jacobian(scene_.arm, state_.q);
  const Vec3 v_arm =
      state_.base.to_pose3().rot() * (jac.topRows<3>() * state_.qd);
  return v_base + omega_base.cross(ee.p - p_base) + v_arm;
}

Vec3 World::ee_omega_world() const {
  const kin::Jacobian jac = kin::jacobian(scene_.arm, state_.q);
  const Vec3 w_arm =
      state_.base.to_pose3().rot() * (jac.bottomRows<3>() * state_.qd);
  return Vec3(0.0, 0.0, state_.w_applied) + w_arm;
}

World::WrenchSplit World::coupling_wrench() const {
  WrenchSplit out;
  const Pose3 ee = ee_pose_world();
  const Pose3 handle = handle_pose_world();
  const SimParams& p = scene_.params;

  if (state_.grasp.attached) {
    const Pose3 target = handle * state_.grasp.t_handle_ee;
    const Vec3 grip_v = handle_grip_velocity(scene_, state_.door);
    const Vec3 grip_w = handle_grip_omega(scene_, state_.door);
    const Vec3 target_v = grip_v + grip_w.cross(target.p - handle.p);

    out.force_w = p.grasp_k_lin * (target.p - ee.p) +
                  p.grasp_d_lin * (target_v - ee_velocity_world());
    out.torque_w =
        p.grasp_k_ang * rotation_log(target.rot() * ee.rot().transpose()) +
        p.grasp_d_ang * (grip_w - ee_omega_world());
    out.application_w = handle.p;
    return out;
  }

  const Vec3 gap = ee.p - handle.p;
  const double d = gap.norm();
  if (d < p.contact_radius && d > 1e-9) {
    out.force_w = p.contact_stiffness * (p.contact_radius - d) * (gap / d);
    out.application_w = handle.p;
  }
  return out;
}

Wrench World::ee_wrench() const {
  // coupling_wrench gives the load on the ee; the sensor convention is the
  // wrench applied by the ee, so moving against the reading relieves it
  const WrenchSplit split = coupling_wrench();
  const Mat3 r_wb = state_.base.to_pose3().rot().transpose();
  Wrench sensed;
  sensed.force = r_wb * (-split.force_w) + state_.disturbance.force;
  sensed.torque = r_wb * (-split.torque_w) + state_.disturbance.torque;
  return sensed;
}

Wrench World::ee_wrench_noisy(Rng& rng) const {
  Wrench w = ee_wrench();
  const double sigma = scene_.params.wrench_noise_std;
  if (sigma > 0.0) {
    for (int i = 0; i < 3; ++i) {
      w.force[i] += sigma * rng.gaussian();
      w.torque[i] += 0.2 * sigma * rng.gaussian();
    }
  }
  return w;
}

bool World::ee_touching_handle() const {
  const double d = (ee_pose_world().p - handle_pose_world().p).norm();
  return d < scene_.params.contact_radius;
}

bool World::attach_grasp() {
  if (state_.grasp.attached) {
    return true;
  }
  const Pose3 handle = handle_pose_world();
  if ((ee_pose_world().p - handle.p).norm() > scene_.params.contact_radius) {
    return false;
  }
  state_.grasp.attached = true;
  state_.grasp.t_handle_ee = handle.inverse() * ee_pose_world();
  return true;
}

void World::release_grasp() {
  state_.grasp.attached = false;
  state_.grasp.t_handle_ee = Pose3::identity();
}

void World::step(const BaseCommand& base_cmd, const kin::JointVec& qd_cmd,
                 double dt) {
  if (!(std::isfinite(base_cmd.v) && std::isfinite(base_cmd.w)) ||
      !qd_cmd.allFinite() || !(dt > 0.0)) {
    throw FaultError("non-finite command passed to World::step");
  }
  state_.v_applied = clamp_abs(base_cmd.v, scene_.robot.v_max);
  state_.w_applied = clamp_abs(base_cmd.w, scene_.robot.w_max);
  for (int i = 0; i < kin::kNumJoints; ++i) {
    state_.qd[i] = clamp_abs(qd_cmd[i], scene_.arm.qd_max[i]);
  }

  const int n = std::max(1, static_cast<int>(std::ceil(dt / scene_.params.dt - 1e-9)));
  const double h = dt / n;
  for (int k = 0; k < n; ++k) {
    substep(h);
  }
  update_effort();
}

void World::substep(double h) {
  const WrenchSplit split = coupling_wrench();

  // reaction of the coupling force on the door, about the hinge axis
  const Vec3 hinge3(scene_.hinge.x(), scene_.hinge.y(), 0.0);
  const double grasp_torque =
      scene_.swing_sign *
      ((split.application_w - hinge3).cross(-split.force_w)).z();

  // the angular part of the coupling drives the handle, not the hinge
  if (state_.grasp.attached &&
      scene_.door.handle_type != HandleType::Bar) {
    const Vec3 axis = unlatch_axis(scene_, state_.door.theta);
    const Vec3 pivot = handle_pivot(scene_, state_.door.theta);
    const double handle_torque =
        (-split.torque_w).dot(axis) +
        ((split.application_w - pivot).cross(-split.force_w)).dot(axis);
    step_handle(scene_, state_.door, handle_torque, h);
  } else {
    step_handle(scene_, state_.door, 0.0, h);
  }
  step_door(scene_, state_.door, grasp_torque, h);

  // exact unicycle arc for the base
  const double v = state_.v_applied;
  const double w = state_.w_applied;
  if (std::abs(w) < 1e-9) {
    state_.base.x += v * std::cos(state_.base.yaw) * h;
    state_.base.y += v * std::sin(state_.base.yaw) * h;
  } else {
    const double yaw1 = state_.base.yaw + w * h;
    state_.base.x += v / w * (std::sin(yaw1) - std::sin(state_.base.yaw));
    state_.base.y -= v / w * (std::cos(yaw1) - std::cos(state_.base.yaw));
  }
  state_.base.yaw = wrap_angle(state_.base.yaw + w * h);

  for (int i = 0; i < kin::kNumJoints; ++i) {
    const double q_new = std::clamp(state_.q[i] + state_.qd[i] * h,
                                    scene_.arm.q_min[i], scene_.arm.q_max[i]);
    // keep qd consistent with the clamped motion so damping and logs agree
    if (q_new == scene_.arm.q_min[i] || q_new == scene_.arm.q_max[i]) {
      state_.qd[i] = (q_new - state_.q[i]) / h;
    }
    state_.q[i] = q_new;
  }
  state_.time += h;
}

void World::update_effort() {
  const Wrench sensed = ee_wrench();
  const kin::Jacobian jac = kin::jacobian(scene_.arm, state_.q);
  Vec6 w6;
  w6 << sensed.force, sensed.torque;
  // quasi-static balance: motors carry gravity plus the applied wrench
  state_.effort = kin::gravity_torques(scene_.arm, state_.q) +
                  jac.transpose() * w6;
}

LidarScan World::scan() const {
  return lidar_scan(scene_, state_.base, state_.door);
}

LidarScan World::scan_noisy(Rng& rng) const {
  return lidar_scan_noisy(scene_, state_.base, state_.door, rng);
}

CollisionReport World::collision() const {
  return check_collision(scene_, state_.base, state_.q, state_.door,
                         state_.grasp.attached);
}

double World::clearance() const {
  return door_clearance(scene_.door, state_.door.theta);
}

}  // namespace doorsim::sim
