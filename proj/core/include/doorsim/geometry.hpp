#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>

namespace doorsim {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Quat = Eigen::Quaterniond;

// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

// Rigid transform; orientation kept normalized.
struct Pose3 {
  Vec3 p{Vec3::Zero()};
  Quat q{Quat::Identity()};

  static Pose3 identity() { return {}; }
  static Pose3 from_matrix(const Mat4& T);

  Mat4 matrix() const;
  Mat3 rot() const { return q.toRotationMatrix(); }
  Pose3 inverse() const;
  Pose3 operator*(const Pose3& other) const;  // this then other (frame composition)
  Vec3 transform(const Vec3& x) const { return q * x + p; }
};

// Rotation vector (log map) of a rotation, angle in [0, pi].
Vec3 rotation_log(const Mat3& R);
Mat3 rotation_exp(const Vec3& w);

// 6-dim pose difference: [p_a - p_b; log(R_a * R_b^T)].
// Linear part is a plain subtraction so it composes with twists.
Vec6 pose_minus(const Pose3& a, const Pose3& b);

// Spatial velocity, linear (m/s) then angular (rad/s).
struct Twist {
  Vec3 lin{Vec3::Zero()};
  Vec3 ang{Vec3::Zero()};

  Vec6 vector() const;
  static Twist from_vector(const Vec6& v);
  Twist operator+(const Twist& o) const { return {lin + o.lin, ang + o.ang}; }
  Twist operator-(const Twist& o) const { return {lin - o.lin, ang - o.ang}; }
  Twist operator*(double s) const { return {lin * s, ang * s}; }
};

// Force (N) and torque (N·m) at the end-effector, mobile-base frame.
struct Wrench {
  Vec3 force{Vec3::Zero()};
  Vec3 torque{Vec3::Zero()};

  Vec6 vector() const;
  static Wrench from_vector(const Vec6& v);
  Wrench operator+(const Wrench& o) const { return {force + o.force, torque + o.torque}; }
  bool all_finite() const;
};

// Planar pose of the differential-drive base in the world frame.
struct BasePose {
  double x{0.0};
  double y{0.0};
  double yaw{0.0};  // wrapped to (-pi, pi]

  Vec2 position() const { return {x, y}; }
  Vec2 heading() const { return {std::cos(yaw), std::sin(yaw)}; }
  // World <-> base-frame point maps (z passes through).
  Vec3 to_world(const Vec3& p_base) const;
  Vec3 to_base(const Vec3& p_world) const;
  Pose3 to_pose3() const;
};

// Expresses a world-frame pose in the mobile-base frame (and back).
Pose3 world_to_base(const BasePose& base, const Pose3& world_pose);
Pose3 base_to_world(const BasePose& base, const Pose3& base_pose);

double clamp_abs(double v, double limit);

}  // namespace doorsim
