#include "doorsim/ctrl/grasp_pose.hpp"

namespace doorsim::ctrl {

Pose3 grasp_pose_for(sim::HandleType type, const Pose3& handle_pose) {
  (void)type;  // the handle frame already encodes the type's principal axis
  const Mat3 rh = handle_pose.rot();
  const Vec3 x = rh.col(0);
  const Vec3 z = -rh.col(2);
  Mat3 rg;
  rg.col(0) = x;
  rg.col(1) = z.cross(x);
  rg.col(2) = z;
  Pose3 out;
  out.p = handle_pose.p;
  out.q = Eigen::Quaterniond(rg).normalized();
  return out;
}

Pose3 pre_grasp_pose(sim::HandleType type, const Pose3& handle_pose,
                     double standoff) {
  Pose3 out = grasp_pose_for(type, handle_pose);
  out.p += standoff * handle_pose.rot().col(2);
  return out;
}

}  // namespace doorsim::ctrl
