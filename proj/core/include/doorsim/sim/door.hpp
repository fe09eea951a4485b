#pragma once

#include "doorsim/geometry.hpp"
#include "doorsim/sim/scene.hpp"

namespace doorsim::sim {

struct DoorState {
  double theta{0.0};        // opening angle, 0 = closed, always >= 0
  double theta_dot{0.0};
  double handle_angle{0.0}; // lever / knob rotation about the unlatch axis
  double handle_rate{0.0};
  bool latched{true};
};

// Unit vector along the panel from hinge to free edge, world xy.
Vec2 door_dir(const Scene& scene, double theta);

// Unit normal of the panel plane pointing toward the robot's approach side
// (equals (-1, 0) when closed).
Vec2 door_normal(const Scene& scene, double theta);

// Panel footprint endpoints: hinge and free edge.
WallSegment door_segment(const Scene& scene, double theta);

// Handle pivot on the panel surface, world frame.
Vec3 handle_pivot(const Scene& scene, double theta);

// Axis the handle rotates about to release the latch, world frame.
// Horizontal in-plane for levers, panel normal for knobs, zero for bars.
Vec3 unlatch_axis(const Scene& scene, double theta);

// Pose of the grip point. z points along the panel normal toward the robot,
// x along the handle's principal axis (toward the hinge for levers, vertical
// for bars), both carried through the current handle rotation.
Pose3 handle_frame(const Scene& scene, const DoorState& state);

// World velocity of the grip point for the current door and handle rates.
Vec3 handle_grip_velocity(const Scene& scene, const DoorState& state);

// World angular velocity of the grip frame.
Vec3 handle_grip_omega(const Scene& scene, const DoorState& state);

// Net hinge torque: external minus viscous damping, with the latch holding
// torque subtracted (clamped to zero below the hold threshold) while latched.
double hinge_torque(const DoorSpec& door, const DoorState& state,
                    double external_torque);

// Integrates theta, theta_dot one step of dt against the hinge stops [0, pi/2].
// grasp_torque is the moment of the grasp force about the hinge; the door
// closer is applied internally whenever the panel is off its stop.
void step_door(const Scene& scene, DoorState& state, double grasp_torque,
               double dt);

// Integrates the sprung handle one step and clears the latch once the angle
// passes the release threshold. Bars carry no latch and ignore this.
void step_handle(const Scene& scene, DoorState& state, double drive_torque,
                 double dt);

}  // namespace doorsim::sim
