#pragma once

#include "doorsim/geometry.hpp"
#include "doorsim/kin/workspace.hpp"
#include "doorsim/sim/world.hpp"

namespace doorsim::ctrl {

// Twist the base motion imparts at a point p (base frame): the arm must
// subtract this so the end-effector keeps its world-frame velocity.
Twist base_twist_at(const sim::BaseCommand& base, const Vec3& p);

struct ComposeResult {
  Twist ee;               // commanded end-effector twist, base frame
  sim::BaseCommand base;  // v from the workspace verdict, w passed through
};

// Final velocity composition: the workspace verdict drives the base (TooFar
// advances at v_ws, TooClose retreats, InReach holds), the base-induced twist
// at the end-effector is subtracted, and the compliance twist is added.
ComposeResult compose_velocity(const Twist& pos_twist, const Twist& ff_twist,
                               kin::WorkspaceVerdict verdict, double v_ws,
                               double w_cmd, const Vec3& p_ee_base);

}  // namespace doorsim::ctrl
