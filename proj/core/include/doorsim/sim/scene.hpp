#pragma once

#include <vector>

#include "doorsim/geometry.hpp"
#include "doorsim/kin/arm_model.hpp"

namespace doorsim::sim {

// Hinge side as seen from the robot's approach side of the wall; left is +y.
enum class HingeSide { Left, Right };

// Push swings the door away from the robot's approach side (+x), pull toward it.
enum class SwingDir { Push, Pull };

enum class HandleType { Lever = 1, Knob = 2, Bar = 3 };

struct DoorSpec {
  double width{1.0};                    // doorway span between frame edges [m]
  HingeSide hinge_side{HingeSide::Right};
  SwingDir swing{SwingDir::Push};
  HandleType handle_type{HandleType::Lever};
  double handle_height{0.95};           // grip height above floor [m]
  double handle_offset_from_edge{0.08}; // along the door, from the free edge [m]
  double hinge_damping{15.0};           // [N*m*s/rad]; sets the closer's drift-shut rate
  double latch_release_angle{0.5};      // handle angle that frees the latch [rad]
  double wall_gap{0.01};                // panel is this much shorter than the doorway [m]

  double panel_mass{12.0};              // [kg], inertia about hinge = m*w^2/3
  double closer_torque{0.8};            // constant torque toward closed [N*m]
  double latch_hold_torque{500.0};      // held at the hinge while latched [N*m]

  double handle_max_angle{0.6};         // mechanical stop [rad]
  double handle_return_stiffness{0.4};  // [N*m/rad]
  double handle_return_damping{0.8};    // [N*m*s/rad]
  double handle_standoff{0.10};         // grip point proud of the panel plane [m]
  double lever_length{0.09};            // pivot-to-grip distance, lever only [m]

  double panel_length() const { return width - wall_gap; }
  double hinge_inertia() const { return panel_mass * width * width / 3.0; }
};

// Throws ConfigError on out-of-range fields (width outside [0.5, 2.0],
// handle off the panel, negative dynamics constants).
void validate(const DoorSpec& door);

// Elbow-forward ready pose, reaching ahead of the base at handle height.
kin::JointVec ready_joint_pose();

struct RobotParams {
  double base_radius{0.30};
  double wheel_radius{0.08};
  double track_width{0.40};     // wheel separation [m]
  double v_max{0.5};            // [m/s]
  double w_max{1.0};            // [rad/s]
  double mount_height{0.35};    // arm base above floor [m]
  double arm_capsule_radius{0.05};
  double ee_capsule_radius{0.03};
  kin::JointVec q_init{ready_joint_pose()};
};

struct SimParams {
  double dt{0.005};             // inner integration step [s]
  double control_dt{0.2};       // controller tick [s]
  double grasp_k_lin{500.0};    // [N/m]
  double grasp_k_ang{20.0};     // [N*m/rad]
  double grasp_d_lin{20.0};  // [N*s/m]
  // must stay below handle_return_damping: the grip's angular damping feeds
  // back into the handle's first-order update and flips it unstable otherwise
  double grasp_d_ang{0.5};  // [N*m*s/rad]
  double contact_stiffness{2000.0};
  double contact_radius{0.03};  // pre-grasp touch sphere around the grip [m]
  double lidar_max_range{5.0};
  double lidar_noise_std{0.04};
  double wrench_noise_std{0.0}; // force channels [N]; torque channels scaled by 0.2
  int lidar_rays_per_sector{90};  // 0.1 deg spacing, a true per-sector minimum
  double wall_half_length{3.0}; // walls run from the doorway edge to +-this y [m]
  double door_height{2.0};
};

// A vertical wall segment, given by its footprint in the world xy plane.
struct WallSegment {
  Vec2 a{Vec2::Zero()};
  Vec2 b{Vec2::Zero()};
};

// Static world layout. The wall lies in the plane x = 0 with the doorway
// centered on y = 0; the robot approaches from x < 0 facing +x.
struct Scene {
  DoorSpec door;
  RobotParams robot;
  SimParams params;
  kin::ArmModel arm;

  std::vector<WallSegment> walls;  // two segments flanking the doorway
  Vec2 hinge{Vec2::Zero()};        // (0, +w/2) for a left hinge, (0, -w/2) for right
  Vec2 closed_dir{Vec2::Zero()};   // unit vector hinge -> free edge at theta = 0
  double swing_sign{1.0};          // world z rotation per unit theta

  static Scene build(const DoorSpec& door,
                     const RobotParams& robot = RobotParams{},
                     const SimParams& params = SimParams{});
};

// Width of the free passage at opening angle theta: the perpendicular gap
// between the latch-side frame edge and the panel, w*sin(theta) on [0, pi/2].
double door_clearance(const DoorSpec& door, double theta);

// Single source of the traversability rule: passage wider than the robot's
// 0.66 m footprint. Training, evaluation and the harness all call this.
bool doorway_passable(const DoorSpec& door, double theta,
                      double required_clearance = 0.66);

}  // namespace doorsim::sim
