#pragma once

#include "doorsim/kin/arm_model.hpp"

namespace doorsim::kin {

struct IkParams {
  double lambda{0.05};            // damping
  double lambda_singular{0.2};    // raised damping near singularities
  double sigma_min_trigger{0.01}; // smallest-singular-value threshold
  // Null-space pull toward a rest posture, off by default. The plain
  // damped solve happily parks the chain at stretched configurations
  // where the task direction degenerates; a small bias on the redundant
  // dof keeps the elbow folded without disturbing the commanded twist.
  double posture_gain{0.0};       // 1/s toward q_rest inside the null space
  JointVec q_rest = (JointVec() << 0.0, 0.7, 0.0, 1.2, -1.4, -1.2, 0.0)
                        .finished();
};

// Damped least-squares velocity IK: qd = J^T (J J^T + lambda^2 I)^-1 * twist,
// clamped to the model's joint speed limits. Damping is raised when the
// chain is close to singular, so the result is always bounded.
JointVec ik_velocity(const ArmModel& model, const JointVec& q, const Twist& twist,
                     const IkParams& params = {});

// Same solve with an explicit fixed damping (used by tests).
JointVec ik_velocity_fixed_lambda(const ArmModel& model, const JointVec& q,
                                  const Twist& twist, double lambda,
                                  bool clamp_speed = true);

}  // namespace doorsim::kin
