#pragma once

#include <array>

#include "doorsim/geometry.hpp"

namespace doorsim::ctrl {

// Axis order used throughout the controller: x, y, z, roll, pitch, yaw.
enum Axis : int { kAxisX = 0, kAxisY, kAxisZ, kAxisRoll, kAxisPitch, kAxisYaw };

enum class AxisMode { Manipulation, Passive };

// Per-axis compliance setup. Manipulation axes carry high limits so the
// controller keeps authority there; passive axes yield early.
struct AxisConfig {
  std::array<AxisMode, 6> mode{};
  Vec6 limit{Vec6::Zero()};  // N on linear axes, N*m on angular axes

  // x, y, yaw manipulation (30 N / 5 N*m); z, roll, pitch passive (5 N / 1 N*m)
  static AxisConfig opening();

  AxisConfig with_limit(Axis axis, double value) const {
    AxisConfig out = *this;
    out.limit[axis] = value;
    return out;
  }
  AxisConfig with_mode(Axis axis, AxisMode m) const {
    AxisConfig out = *this;
    out.mode[axis] = m;
    return out;
  }
};

struct ControllerGains {
  double kp_pos{1.0};           // [1/s]
  double kp_cmp{0.01};          // [(m/s)/N]
  double ki_cmp{0.02};          // [(m/s)/(N*s)]
  double integrator_limit{0.2};  // cap on the integral term [m/s]

  // angular compliance channels, same structure in (rad/s)/(N*m)
  double kp_cmp_ang{0.08};
  double ki_cmp_ang{0.2};
  double integrator_limit_ang{0.6};

  // position_control saturation
  double max_lin{0.25};  // [m/s]
  double max_ang{0.9};   // [rad/s]
};

// Estimated door-opening direction. psi_x: +1 push, -1 pull. psi_y: +1 the
// handle drifts left during early opening, -1 right. Zero means unknown.
struct OpeningDirection {
  int psi_x{0};
  int psi_y{0};

  bool known() const { return psi_x != 0 && psi_y != 0; }
  // Labeling convention: clockwise when the signs agree.
  bool clockwise() const { return psi_x * psi_y == 1; }
};

struct ExploreParams {
  double omega_x{15.0};      // probe force threshold [N]
  double delta_x{0.10};      // travel before the lateral vote [m]
  double probe_speed{0.05};  // [m/s]
  double window_time{1.0};   // probe window [s]
  double window_travel{0.05};  // probe window [m]
};

enum class TaskPhase {
  Approach,      // ST1: drive and align until the handle is in reach
  Unlatch,       // ST2: touch, grasp, rotate the handle free
  Explore,       // ST3: probe push/pull, then watch the lateral drift
  Open,          // ST4: march the grip along the identified direction
  HoldAndPass,   // keep the door open while the base goes through
  Release,       // let go, stow the arm, clear the doorway
  Done,
};

const char* phase_name(TaskPhase phase);

}  // namespace doorsim::ctrl
