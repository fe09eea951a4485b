#pragma once

#include "doorsim/geometry.hpp"

#include <array>

namespace doorsim::kin {

inline constexpr int kNumJoints = 7;

using JointVec = Eigen::Matrix<double, kNumJoints, 1>;
using Jacobian = Eigen::Matrix<double, 6, kNumJoints>;

// Classic DH row: T = RotZ(theta + theta_offset) * TransZ(d) * TransX(a) * RotX(alpha)
struct DhRow {
  double a{0.0};
  double alpha{0.0};
  double d{0.0};
  double theta_offset{0.0};
};

// 7-DOF serial chain with Kinova-like dimensions, expressed in the arm
// mount frame. Includes the per-link point masses used by the simplified
// gravity-effort model.
struct ArmModel {
  std::array<DhRow, kNumJoints> dh;
  JointVec q_min;
  JointVec q_max;
  JointVec qd_max;
  std::array<double, kNumJoints> link_mass;  // kg, lumped at each frame origin

  static ArmModel default_model();
};

// End-effector pose relative to the arm mount.
Pose3 fk(const ArmModel& model, const JointVec& q);

// All joint frames (frame i = pose after applying DH rows 0..i), plus the
// mount frame at index 0; size kNumJoints + 1. Used for Jacobian columns,
// collision capsules and the gravity model.
std::array<Pose3, kNumJoints + 1> fk_frames(const ArmModel& model, const JointVec& q);

// Geometric Jacobian in the mount frame (linear rows first).
Jacobian jacobian(const ArmModel& model, const JointVec& q);

// Holding torque per joint against gravity, from the lumped point-mass
// model. Motor-side sign: positive where the motor works against the load.
JointVec gravity_torques(const ArmModel& model, const JointVec& q, double g = 9.81);

}  // namespace doorsim::kin
