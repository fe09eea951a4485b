#include "doorsim/sim/door.hpp"

#include <algorithm>
#include <cmath>

namespace doorsim::sim {

namespace {

Vec2 rotate2(const Vec2& v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return Vec2(c * v.x() - s * v.y(), s * v.x() + c * v.y());
}

Vec3 lift(const Vec2& v, double z = 0.0) { return Vec3(v.x(), v.y(), z); }

}  // namespace

Vec2 door_dir(const Scene& scene, double theta) {
  return rotate2(scene.closed_dir, scene.swing_sign * theta);
}

Vec2 door_normal(const Scene& scene, double theta) {
  return rotate2(Vec2(-1.0, 0.0), scene.swing_sign * theta);
}

WallSegment door_segment(const Scene& scene, double theta) {
  WallSegment seg;
  seg.a = scene.hinge;
  seg.b = scene.hinge + scene.door.panel_length() * door_dir(scene, theta);
  return seg;
}

Vec3 handle_pivot(const Scene& scene, double theta) {
  const DoorSpec& d = scene.door;
  const Vec2 on_panel =
      scene.hinge +
      (d.panel_length() - d.handle_offset_from_edge) * door_dir(scene, theta);
  return lift(on_panel + d.handle_standoff * door_normal(scene, theta),
              d.handle_height);
}

Vec3 unlatch_axis(const Scene& scene, double theta) {
  switch (scene.door.handle_type) {
    case HandleType::Lever: {
      // z x lever_dir with lever_dir pointing back toward the hinge
      const Vec2 dir = door_dir(scene, theta);
      return Vec3(dir.y(), -dir.x(), 0.0);
    }
    case HandleType::Knob:
      return lift(door_normal(scene, theta));
    case HandleType::Bar:
      return Vec3::Zero();
  }
  return Vec3::Zero();
}

Pose3 handle_frame(const Scene& scene, const DoorState& state) {
  const Vec2 dir = door_dir(scene, state.theta);
  const Vec3 normal = lift(door_normal(scene, state.theta));
  const Vec3 principal = (scene.door.handle_type == HandleType::Bar)
                             ? Vec3(0.0, 0.0, 1.0)
                             : lift(-dir);

  Mat3 r0;
  r0.col(0) = principal;
  r0.col(1) = normal.cross(principal);
  r0.col(2) = normal;

  const Vec3 pivot = handle_pivot(scene, state.theta);
  const Vec3 axis = unlatch_axis(scene, state.theta);

  Pose3 pose;
  if (scene.door.handle_type == HandleType::Bar || axis.squaredNorm() == 0.0) {
    pose.p = pivot;
    pose.q = Quat(r0);
    return pose;
  }
  const Eigen::AngleAxisd turn(state.handle_angle, axis);
  pose.q = Quat(turn.toRotationMatrix() * r0);
  if (scene.door.handle_type == HandleType::Lever) {
    pose.p = pivot + turn * (scene.door.lever_length * lift(-dir));
  } else {
    pose.p = pivot;
  }
  pose.q.normalize();
  return pose;
}

Vec3 handle_grip_velocity(const Scene& scene, const DoorState& state) {
  const Vec3 grip = handle_frame(scene, state).p;
  const Vec3 omega_door =
      Vec3(0.0, 0.0, scene.swing_sign * state.theta_dot);
  Vec3 v = omega_door.cross(grip - lift(scene.hinge));
  if (scene.door.handle_type == HandleType::Lever) {
    const Vec3 axis = unlatch_axis(scene, state.theta);
    v += (state.handle_rate * axis).cross(grip - handle_pivot(scene, state.theta));
  }
  return v;
}

Vec3 handle_grip_omega(const Scene& scene, const DoorState& state) {
  Vec3 omega(0.0, 0.0, scene.swing_sign * state.theta_dot);
  const Vec3 axis = unlatch_axis(scene, state.theta);
  if (axis.squaredNorm() > 0.0) {
    omega += state.handle_rate * axis;
  }
  return omega;
}

double hinge_torque(const DoorSpec& door, const DoorState& state,
                    double external_torque) {
  double torque = external_torque - door.hinge_damping * state.theta_dot;
  if (state.latched) {
    if (std::abs(torque) <= door.latch_hold_torque) {
      return 0.0;
    }
    torque -= std::copysign(door.latch_hold_torque, torque);
  }
  return torque;
}

void step_door(const Scene& scene, DoorState& state, double grasp_torque,
               double dt) {
  const DoorSpec& door = scene.door;
  double external = grasp_torque;
  if (state.theta > 0.0) {
    external -= door.closer_torque;
  }
  const double net = hinge_torque(door, state, external);
  const double accel = net / door.hinge_inertia();

  // semi-implicit Euler against the stops
  state.theta_dot += accel * dt;
  state.theta += state.theta_dot * dt;
  if (state.theta <= 0.0) {
    state.theta = 0.0;
    state.theta_dot = std::max(state.theta_dot, 0.0);
  } else if (state.theta >= M_PI / 2.0) {
    state.theta = M_PI / 2.0;
    state.theta_dot = std::min(state.theta_dot, 0.0);
  }
  if (state.latched) {
    state.theta = 0.0;
    state.theta_dot = 0.0;
  }
}

void step_handle(const Scene& scene, DoorState& state, double drive_torque,
                 double dt) {
  const DoorSpec& door = scene.door;
  if (door.handle_type == HandleType::Bar) {
    state.latched = false;
    state.handle_angle = 0.0;
    state.handle_rate = 0.0;
    return;
  }
  // first-order, damping-dominated: rate follows torque balance directly
  const double spring = door.handle_return_stiffness * state.handle_angle;
  state.handle_rate = (drive_torque - spring) / door.handle_return_damping;
  state.handle_angle += state.handle_rate * dt;
  if (state.handle_angle < 0.0) {
    state.handle_angle = 0.0;
    state.handle_rate = std::max(state.handle_rate, 0.0);
  } else if (state.handle_angle > door.handle_max_angle) {
    state.handle_angle = door.handle_max_angle;
    state.handle_rate = std::min(state.handle_rate, 0.0);
  }
  if (state.latched && state.handle_angle >= door.latch_release_angle) {
    state.latched = false;
  }
}

}  // namespace doorsim::sim
