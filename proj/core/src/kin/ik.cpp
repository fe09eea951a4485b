#include "doorsim/kin/ik.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>

namespace doorsim::kin {

namespace {

JointVec solve_dls(const Jacobian& J, const Vec6& twist, double lambda) {
  Eigen::Matrix<double, 6, 6> JJt = J * J.transpose();
  JJt.diagonal().array() += lambda * lambda;
  return J.transpose() * JJt.ldlt().solve(twist);
}

}  // namespace

JointVec ik_velocity_fixed_lambda(const ArmModel& model, const JointVec& q,
                                  const Twist& twist, double lambda, bool clamp_speed) {
  const Jacobian J = jacobian(model, q);
  JointVec qd = solve_dls(J, twist.vector(), lambda);
  if (clamp_speed) {
    for (int i = 0; i < kNumJoints; ++i) qd[i] = clamp_abs(qd[i], model.qd_max[i]);
  }
  return qd;
}

JointVec ik_velocity(const ArmModel& model, const JointVec& q, const Twist& twist,
                     const IkParams& params) {
  const Jacobian J = jacobian(model, q);
  double lambda = params.lambda;
  const Eigen::JacobiSVD<Jacobian> svd(J, Eigen::ComputeFullV);
  if (svd.singularValues().minCoeff() < params.sigma_min_trigger) {
    lambda = params.lambda_singular;
  }
  JointVec qd = solve_dls(J, twist.vector(), lambda);
  if (params.posture_gain > 0.0) {
    // the last right singular vector spans the null space of the 6x7
    // chain exactly, so the posture pull cannot disturb the twist
    const JointVec null_dir = svd.matrixV().col(kNumJoints - 1);
    const JointVec qd_rest = params.posture_gain * (params.q_rest - q);
    qd += null_dir * null_dir.dot(qd_rest);
  }
  for (int i = 0; i < kNumJoints; ++i) qd[i] = clamp_abs(qd[i], model.qd_max[i]);
  return qd;
}

}  // namespace doorsim::kin
