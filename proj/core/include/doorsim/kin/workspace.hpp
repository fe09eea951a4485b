#pragma once

#include "doorsim/geometry.hpp"

namespace doorsim::kin {

struct WorkspaceLimits {
  double mu_min{0.35};  // m, base retreats below this
  double mu_max{0.85};  // m, base advances beyond this
  double rho{0.75};     // m, approach reach used by the task controller
};

enum class WorkspaceVerdict { InReach, TooFar, TooClose };

// Classifies the horizontal distance from the arm mount to a target
// expressed in the mobile-base frame. Boundaries are inclusive (a target
// exactly at mu_min or mu_max is InReach).
inline WorkspaceVerdict workspace_check(const Vec3& target_in_base, const WorkspaceLimits& limits) {
  const double d = target_in_base.head<2>().norm();
  if (d > limits.mu_max) return WorkspaceVerdict::TooFar;
  if (d < limits.mu_min) return WorkspaceVerdict::TooClose;
  return WorkspaceVerdict::InReach;
}

}  // namespace doorsim::kin
