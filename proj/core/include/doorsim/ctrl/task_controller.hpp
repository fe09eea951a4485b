#pragma once

#include <string>
#include <vector>

#include "doorsim/ctrl/compose.hpp"
#include "doorsim/ctrl/force_feedback.hpp"
#include "doorsim/ctrl/types.hpp"
#include "doorsim/kin/ik.hpp"
#include "doorsim/kin/workspace.hpp"
#include "doorsim/rng.hpp"
#include "doorsim/sim/world.hpp"

namespace doorsim::ctrl {

struct ControlParams {
  ControllerGains gains{};
  AxisConfig axes{};  // filled with AxisConfig::opening() by default ctor below
  ExploreParams explore{};
  kin::WorkspaceLimits workspace{};
  kin::IkParams ik = [] {
    kin::IkParams p;
    // drive the spare dof toward a folded elbow; door pulls otherwise
    // stretch the chain straight and the solve collapses right when the
    // grasp needs relieving
    p.posture_gain = 0.8;
    return p;
  }();

  double control_dt{0.2};

  // base behavior
  double v_ws{0.15};            // workspace-driven advance / retreat speed
  double heading_gain{1.5};
  double approach_speed{0.35};
  double bearing_tolerance{0.0873};  // 5 degrees

  // unlatch
  double pre_grasp_standoff{0.12};
  double reach_speed{0.02};
  double contact_threshold{2.0};  // N; above the noise floor of the sensor
  double reach_max_travel{0.25};
  double unlatch_rate{0.8};        // rad/s about the press axis
  double unlatch_torque_stop{5.0};  // N*m; hard-stop detection

  // explore
  double explore_y_limit{1.0};  // N; low enough to follow millimeter drift

  // open / pass
  double open_speed{0.10};
  double pass_clearance{0.69};  // m of doorway gap that triggers a push pass
  double pull_open_theta{1.47};  // rad a pull door needs before the pass lane
                                 // clears its half-open panel at every width
  double stall_window{2.0};     // s
  double stall_delta{0.015};    // rad of progress below which ST4 is stalled
  double min_open_theta{0.5};   // rad before a stall may end ST4
  double hold_line_x{-0.45};    // world x the base holds until the pass
  double pass_speed{0.12};
  double exit_speed{0.30};
  double pull_bypass_y{0.30};  // lateral offset rounding the free edge on
                               // the way back to the lane after a pull
  double release_x{1.0};     // world x where a push pass lets go; the door
                             // must stay dragged open until the base clears
                             // the swept panel edge
  double reach_strain{0.88};  // horizontal grip distance forcing release
  double grip_min{0.30};     // grip closer than this folds the arm; let go
  double exit_x{1.35};       // world x that ends the episode
  double through_x_limit{12.0};  // N; tow budget while riding the grip
  double drag_offset{0.05};      // m; the arm leads the grip by this much in
                                 // +x so the grasp spring keeps towing the
                                 // door while the base crosses
  double pass_y_limit{1.0};      // N; lateral slip while passing
  double pass_yaw_limit{1.0};    // N*m; the grip slips in yaw as the panel
                                 // turns; a stiff wrist torque would fight
                                 // the drag near full open
  double pull_retreat_speed{0.15};  // m/s backing out of the panel's sweep
  double pull_keep_margin{0.15};    // m beyond panel length plus base radius
                                    // kept between base center and hinge
                                    // while a pull door swings out
  double pull_follow_span{0.55};    // m horizontal grip span the base tries
                                    // to hold while trailing a pull swing
  double pull_follow_speed{0.25};   // m/s cap on the trailing chase

  ControlParams() { axes = AxisConfig::opening(); }
};

// One control tick's worth of commands and telemetry for the episode log.
struct TickResult {
  sim::BaseCommand base_cmd{};
  kin::JointVec qd_cmd{kin::JointVec::Zero()};
  TaskPhase phase{TaskPhase::Approach};
  kin::WorkspaceVerdict verdict{kin::WorkspaceVerdict::InReach};
  Wrench wrench{};
  Twist pos_twist{};
  Twist ff_twist{};
  Twist ee_twist{};
  OpeningDirection direction{};
  bool fault{false};
  std::string event;  // non-empty on the tick a transition fires
};

// Scripted door-opening state machine: approach, grasp and unlatch, probe
// for the opening direction, swing the door, pass through, release.
//
// The controller reads the simulator's handle pose and door angles directly;
// these stand in for the perception and door-state estimators a real robot
// would run. Forces come through the noisy wrench channel only.
class TaskController {
 public:
  TaskController(ControlParams params, const sim::Scene& scene);

  // Computes commands for one 0.2 s tick. Actuates nothing except the
  // gripper (attach on contact, release during the pass). Call world.step
  // with the returned commands to advance the episode.
  TickResult tick(sim::World& world, Rng& rng);

  TaskPhase phase() const { return phase_; }
  bool failed() const { return fault_; }
  const std::string& fault_reason() const { return fault_reason_; }
  const OpeningDirection& direction() const { return dir_; }

 private:
  enum class UnlatchStage { Reach, Press, Settle };
  enum class ExploreStage { ProbePush, ProbeRecover, ProbePull, Drift };
  enum class PassStage { Reposition, Through };

  void enter(TaskPhase next, TickResult& out, const char* event);
  void fail(const char* reason, TickResult& out);
  kin::JointVec stow_toward(const kin::JointVec& q, double gain) const;

  ControlParams p_;
  sim::HandleType handle_type_;
  double latch_release_angle_;
  kin::ArmModel arm_;
  kin::JointVec q_init_;
  double v_max_;
  double w_max_;
  // door and base constants folded into the identification geometry
  double panel_length_;
  double grip_radius_;
  double handle_standoff_;
  double base_radius_;

  TaskPhase phase_{TaskPhase::Approach};
  double phase_time_{0.0};
  bool fault_{false};
  std::string fault_reason_;
  OpeningDirection dir_{};
  ForceIntegrator integ_{};

  UnlatchStage unlatch_stage_{UnlatchStage::Reach};
  double reach_travel_{0.0};
  Vec3 press_axis_{Vec3::Zero()};
  int settle_ticks_{0};

  ExploreStage explore_stage_{ExploreStage::ProbePush};
  double probe_time_{0.0};
  double probe_travel_{0.0};
  double probe_peak_{0.0};
  double recover_time_{0.0};
  bool drift_origin_pending_{false};
  Vec3 drift_origin_world_{Vec3::Zero()};
  double drift_yaw_{0.0};

  Vec3 open_dir_world_{Vec3::Zero()};
  Vec3 hinge_world_{Vec3::Zero()};
  std::vector<double> theta_history_;

  PassStage pass_stage_{PassStage::Through};
  double shade_{0.0};
  bool released_{false};
};

}  // namespace doorsim::ctrl
