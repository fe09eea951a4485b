#include "doorsim/ctrl/force_feedback.hpp"

#include <algorithm>
#include <cmath>

namespace doorsim::ctrl {

AxisConfig AxisConfig::opening() {
  AxisConfig cfg;
  cfg.mode = {AxisMode::Manipulation, AxisMode::Manipulation,
              AxisMode::Passive,      AxisMode::Passive,
              AxisMode::Passive,      AxisMode::Manipulation};
  cfg.limit << 30.0, 30.0, 5.0, 1.0, 1.0, 5.0;
  return cfg;
}

const char* phase_name(TaskPhase phase) {
  switch (phase) {
    case TaskPhase::Approach: return "approach";
    case TaskPhase::Unlatch: return "unlatch";
    case TaskPhase::Explore: return "explore";
    case TaskPhase::Open: return "open";
    case TaskPhase::HoldAndPass: return "hold_and_pass";
    case TaskPhase::Release: return "release";
    case TaskPhase::Done: return "done";
  }
  return "unknown";
}

Twist force_feedback(const Wrench& wrench, const AxisConfig& axes,
                     const ControllerGains& gains, ForceIntegrator& integrator,
                     double dt) {
  Vec6 sigma;
  sigma << wrench.force, wrench.torque;

  Vec6 out = Vec6::Zero();
  for (int i = 0; i < 6; ++i) {
    const double limit = axes.limit[i];
    const double mag = std::abs(sigma[i]);
    if (mag <= limit) {
      // deadband: exact zero, and the excursion is over
      integrator.sum[i] = 0.0;
      integrator.excursion_sign[i] = 0;
      continue;
    }
    const int sign = sigma[i] > 0.0 ? 1 : -1;
    if (integrator.excursion_sign[i] != sign) {
      // a flipped reading starts a fresh excursion; stale charge would aid
      // the new overload instead of opposing it
      integrator.sum[i] = 0.0;
      integrator.excursion_sign[i] = sign;
    }
    const double err = (mag - limit) * -sign;
    integrator.sum[i] += err * dt;

    const bool angular = i >= 3;
    const double kp = angular ? gains.kp_cmp_ang : gains.kp_cmp;
    const double ki = angular ? gains.ki_cmp_ang : gains.ki_cmp;
    const double cap = angular ? gains.integrator_limit_ang
                               : gains.integrator_limit;
    double integral_term = ki * integrator.sum[i];
    integral_term = std::clamp(integral_term, -cap, cap);
    if (ki > 0.0) {
      // keep the stored sum consistent with the clamped term
      integrator.sum[i] = integral_term / ki;
    }
    out[i] = kp * err + integral_term;
  }
  return Twist::from_vector(out);
}

Twist position_control(const Pose3& target, const Pose3& current,
                       const ControllerGains& gains) {
  const Vec6 err = pose_minus(target, current);
  Twist twist;
  twist.lin = gains.kp_pos * err.head<3>();
  twist.ang = gains.kp_pos * err.tail<3>();
  const double ln = twist.lin.norm();
  if (ln > gains.max_lin) {
    twist.lin *= gains.max_lin / ln;
  }
  const double an = twist.ang.norm();
  if (an > gains.max_ang) {
    twist.ang *= gains.max_ang / an;
  }
  return twist;
}

}  // namespace doorsim::ctrl
