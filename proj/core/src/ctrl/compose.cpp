#include "doorsim/ctrl/compose.hpp"

namespace doorsim::ctrl {

Twist base_twist_at(const sim::BaseCommand& base, const Vec3& p) {
  Twist t;
  const Vec3 omega(0.0, 0.0, base.w);
  t.lin = Vec3(base.v, 0.0, 0.0) + omega.cross(p);
  t.ang = omega;
  return t;
}

ComposeResult compose_velocity(const Twist& pos_twist, const Twist& ff_twist,
                               kin::WorkspaceVerdict verdict, double v_ws,
                               double w_cmd, const Vec3& p_ee_base) {
  ComposeResult out;
  switch (verdict) {
    case kin::WorkspaceVerdict::TooFar: out.base.v = v_ws; break;
    case kin::WorkspaceVerdict::TooClose: out.base.v = -v_ws; break;
    case kin::WorkspaceVerdict::InReach: out.base.v = 0.0; break;
  }
  out.base.w = w_cmd;
  const Twist induced = base_twist_at(out.base, p_ee_base);
  out.ee = pos_twist - induced + ff_twist;
  return out;
}

}  // namespace doorsim::ctrl
