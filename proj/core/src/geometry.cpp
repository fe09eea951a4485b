#include "doorsim/geometry.hpp"

#include <algorithm>

namespace doorsim {

double wrap_angle(double a) {
  a = std::fmod(a + M_PI, 2.0 * M_PI);
  if (a <= 0.0) a += 2.0 * M_PI;
  return a - M_PI;
}

Pose3 Pose3::from_matrix(const Mat4& T) {
  Pose3 out;
  out.p = T.block<3, 1>(0, 3);
  out.q = Quat(Mat3(T.block<3, 3>(0, 0))).normalized();
  return out;
}

Mat4 Pose3::matrix() const {
  Mat4 T = Mat4::Identity();
  T.block<3, 3>(0, 0) = q.toRotationMatrix();
  T.block<3, 1>(0, 3) = p;
  return T;
}

Pose3 Pose3::inverse() const {
  Pose3 out;
  out.q = q.conjugate();
  out.p = -(out.q * p);
  return out;
}

Pose3 Pose3::operator*(const Pose3& other) const {
  Pose3 out;
  out.p = p + q * other.p;
  out.q = (q * other.q).normalized();
  return out;
}

Vec3 rotation_log(const Mat3& R) {
  Eigen::AngleAxisd aa(R);
  double angle = aa.angle();
  if (angle > M_PI) angle -= 2.0 * M_PI;  // AngleAxis returns [0, pi] already
  return aa.axis() * angle;
}

Mat3 rotation_exp(const Vec3& w) {
  const double n = w.norm();
  if (n < 1e-14) return Mat3::Identity();
  return Eigen::AngleAxisd(n, w / n).toRotationMatrix();
}

Vec6 pose_minus(const Pose3& a, const Pose3& b) {
  Vec6 d;
  d.head<3>() = a.p - b.p;
  d.tail<3>() = rotation_log(a.rot() * b.rot().transpose());
  return d;
}

Vec6 Twist::vector() const {
  Vec6 v;
  v.head<3>() = lin;
  v.tail<3>() = ang;
  return v;
}

Twist Twist::from_vector(const Vec6& v) { return {v.head<3>(), v.tail<3>()}; }

Vec6 Wrench::vector() const {
  Vec6 v;
  v.head<3>() = force;
  v.tail<3>() = torque;
  return v;
}

Wrench Wrench::from_vector(const Vec6& v) { return {v.head<3>(), v.tail<3>()}; }

bool Wrench::all_finite() const {
  return force.allFinite() && torque.allFinite();
}

Vec3 BasePose::to_world(const Vec3& p_base) const {
  const double c = std::cos(yaw), s = std::sin(yaw);
  return {x + c * p_base.x() - s * p_base.y(), y + s * p_base.x() + c * p_base.y(), p_base.z()};
}

Vec3 BasePose::to_base(const Vec3& p_world) const {
  const double c = std::cos(yaw), s = std::sin(yaw);
  const double dx = p_world.x() - x, dy = p_world.y() - y;
  return {c * dx + s * dy, -s * dx + c * dy, p_world.z()};
}

Pose3 BasePose::to_pose3() const {
  Pose3 out;
  out.p = {x, y, 0.0};
  out.q = Quat(Eigen::AngleAxisd(yaw, Vec3::UnitZ()));
  return out;
}

Pose3 world_to_base(const BasePose& base, const Pose3& world_pose) {
  return base.to_pose3().inverse() * world_pose;
}

Pose3 base_to_world(const BasePose& base, const Pose3& base_pose) {
  return base.to_pose3() * base_pose;
}

double clamp_abs(double v, double limit) {
  return std::clamp(v, -limit, limit);
}

}  // namespace doorsim
