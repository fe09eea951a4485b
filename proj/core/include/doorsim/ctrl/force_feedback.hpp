#pragma once

#include "doorsim/ctrl/types.hpp"
#include "doorsim/geometry.hpp"

namespace doorsim::ctrl {

// Integral state for the force compensator. One accumulator per axis, in
// N*s (linear) or N*m*s (angular), plus the sign of the excursion it was
// accumulated under so a sign flip cannot produce an aiding twist.
struct ForceIntegrator {
  Vec6 sum{Vec6::Zero()};
  std::array<int, 6> excursion_sign{{0, 0, 0, 0, 0, 0}};

  void reset() {
    sum.setZero();
    excursion_sign.fill(0);
  }
};

// Compliance twist from the measured wrench. Axes inside their limit output
// exactly zero and have their integrator cleared; over the limit the twist
// opposes the reading with a PI on the excess.
Twist force_feedback(const Wrench& wrench, const AxisConfig& axes,
                     const ControllerGains& gains, ForceIntegrator& integrator,
                     double dt);

// P servo toward a target pose, both in the mobile-base frame. Linear and
// angular parts are saturated separately, direction preserved.
Twist position_control(const Pose3& target, const Pose3& current,
                       const ControllerGains& gains);

}  // namespace doorsim::ctrl
