#include "doorsim/kin/arm_model.hpp"

namespace doorsim::kin {

namespace {

Mat4 dh_transform(const DhRow& row, double q) {
  const double ct = std::cos(q + row.theta_offset);
  const double st = std::sin(q + row.theta_offset);
  const double ca = std::cos(row.alpha);
  const double sa = std::sin(row.alpha);
  Mat4 T;
  T << ct, -st * ca,  st * sa, row.a * ct,
       st,  ct * ca, -ct * sa, row.a * st,
        0,       sa,       ca,      row.d,
        0,        0,        0,          1;
  return T;
}

}  // namespace

ArmModel ArmModel::default_model() {
  ArmModel m;
  const double hp = M_PI / 2.0;
  m.dh = {DhRow{0.0, -hp, 0.28, 0.0},
          DhRow{0.0,  hp, 0.00, 0.0},
          DhRow{0.0, -hp, 0.42, 0.0},
          DhRow{0.0,  hp, 0.00, 0.0},
          DhRow{0.0, -hp, 0.31, 0.0},
          DhRow{0.0,  hp, 0.00, 0.0},
          DhRow{0.0, 0.0, 0.16, 0.0}};
  m.q_min << -2.9, -2.2, -2.9, -2.2, -2.9, -2.2, -2.9;
  m.q_max << 2.9, 2.2, 2.9, 2.2, 2.9, 2.2, 2.9;
  m.qd_max.setConstant(1.2);
  m.link_mass = {1.7, 1.4, 1.2, 1.0, 0.8, 0.6, 0.4};
  return m;
}

std::array<Pose3, kNumJoints + 1> fk_frames(const ArmModel& model, const JointVec& q) {
  std::array<Pose3, kNumJoints + 1> frames;
  Mat4 T = Mat4::Identity();
  frames[0] = Pose3::identity();
  for (int i = 0; i < kNumJoints; ++i) {
    T = T * dh_transform(model.dh[i], q[i]);
    frames[i + 1] = Pose3::from_matrix(T);
  }
  return frames;
}

Pose3 fk(const ArmModel& model, const JointVec& q) {
  Mat4 T = Mat4::Identity();
  for (int i = 0; i < kNumJoints; ++i) T = T * dh_transform(model.dh[i], q[i]);
  return Pose3::from_matrix(T);
}

Jacobian jacobian(const ArmModel& model, const JointVec& q) {
  const auto frames = fk_frames(model, q);
  const Vec3 p_ee = frames[kNumJoints].p;
  Jacobian J;
  for (int i = 0; i < kNumJoints; ++i) {
    // Joint i rotates about the z-axis of the frame preceding it.
    const Vec3 z = frames[i].rot().col(2);
    const Vec3 p = frames[i].p;
    J.block<3, 1>(0, i) = z.cross(p_ee - p);
    J.block<3, 1>(3, i) = z;
  }
  return J;
}

JointVec gravity_torques(const ArmModel& model, const JointVec& q, double g) {
  const auto frames = fk_frames(model, q);
  JointVec tau = JointVec::Zero();
  // holding torque: the negative of the moment gravity applies about each axis
  const Vec3 anti_gravity(0.0, 0.0, g);
  for (int i = 0; i < kNumJoints; ++i) {
    const Vec3 z = frames[i].rot().col(2);
    const Vec3 p = frames[i].p;
    for (int j = i; j < kNumJoints; ++j) {
      const Vec3 r = frames[j + 1].p - p;
      tau[i] += z.dot(r.cross(model.link_mass[j] * anti_gravity));
    }
  }
  return tau;
}

}  // namespace doorsim::kin
