#include "doorsim/ctrl/task_controller.hpp"

#include <algorithm>
#include <cmath>

#include "doorsim/ctrl/grasp_pose.hpp"

namespace doorsim::ctrl {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Steering toward a world-frame waypoint. Rotates in place when the goal is
// far off the nose, otherwise drives at `speed`.
sim::BaseCommand pursue(const BasePose& base, const Vec2& goal, double speed,
                        double w_max) {
  const double bearing =
      wrap_angle(std::atan2(goal.y() - base.y, goal.x() - base.x) - base.yaw);
  sim::BaseCommand cmd;
  cmd.w = clamp_abs(2.0 * bearing, w_max);
  cmd.v = (std::abs(bearing) < 1.2) ? speed : 0.0;
  return cmd;
}

double dist2(const BasePose& base, const Vec2& goal) {
  return std::hypot(goal.x() - base.x, goal.y() - base.y);
}

// Track the +x line y = lane. Pursuit toward a waypoint only converges to
// the chord, which is not tight enough for the doorway; this servos the
// cross-track error directly so the base is centered before the jambs.
sim::BaseCommand follow_lane(const BasePose& base, double lane, double speed,
                             double w_max) {
  const double heading_des = clamp_abs(-6.0 * (base.y - lane), 0.6);
  sim::BaseCommand cmd;
  cmd.w = clamp_abs(2.5 * wrap_angle(heading_des - base.yaw), w_max);
  cmd.v = speed;
  return cmd;
}

}  // namespace

TaskController::TaskController(ControlParams params, const sim::Scene& scene)
    : p_(std::move(params)),
      handle_type_(scene.door.handle_type),
      latch_release_angle_(scene.door.latch_release_angle),
      arm_(scene.arm),
      q_init_(scene.robot.q_init),
      v_max_(scene.robot.v_max),
      w_max_(scene.robot.w_max),
      panel_length_(scene.door.panel_length()),
      grip_radius_(scene.door.panel_length() -
                   scene.door.handle_offset_from_edge -
                   (scene.door.handle_type == sim::HandleType::Lever
                        ? scene.door.lever_length
                        : 0.0)),
      handle_standoff_(scene.door.handle_standoff),
      base_radius_(scene.robot.base_radius) {}

void TaskController::enter(TaskPhase next, TickResult& out, const char* event) {
  phase_ = next;
  phase_time_ = 0.0;
  integ_.reset();
  out.event = event;
}

void TaskController::fail(const char* reason, TickResult& out) {
  fault_ = true;
  fault_reason_ = reason;
  out.fault = true;
  enter(TaskPhase::Done, out, reason);
}

kin::JointVec TaskController::stow_toward(const kin::JointVec& q,
                                          double gain) const {
  kin::JointVec qd;
  for (int i = 0; i < kin::kNumJoints; ++i) {
    qd[i] = clamp_abs(gain * (q_init_[i] - q[i]), arm_.qd_max[i]);
  }
  return qd;
}

TickResult TaskController::tick(sim::World& world, Rng& rng) {
  TickResult out;
  out.phase = phase_;
  out.direction = dir_;
  if (phase_ == TaskPhase::Done) {
    out.fault = fault_;
    return out;
  }

  const double dt = p_.control_dt;
  phase_time_ += dt;

  const Pose3 ee_b = world.ee_pose_base();
  const Pose3 handle_b = world.handle_pose_base();
  const Wrench wrench = world.ee_wrench_noisy(rng);
  const BasePose base = world.state().base;
  const kin::JointVec& q = world.state().q;
  out.wrench = wrench;

  if (world.collision().any) {
    fail("collision", out);
    out.phase = phase_;
    return out;
  }

  // march lead converting a desired speed into a P-servo offset
  const double lead = 1.0 / std::max(p_.gains.kp_pos, 1e-6);

  switch (phase_) {
    case TaskPhase::Approach: {
      const double dist = handle_b.p.head<2>().norm();
      const double bearing = std::atan2(handle_b.p.y(), handle_b.p.x());

      sim::BaseCommand cmd;
      cmd.w = clamp_abs(p_.heading_gain * bearing, 0.8 * w_max_);
      if (dist > p_.workspace.rho && std::abs(bearing) < 0.5) {
        cmd.v = std::min(0.8 * (dist - p_.workspace.rho) + 0.05,
                         p_.approach_speed);
      }
      out.base_cmd = cmd;

      if (dist > p_.workspace.rho + 0.35) {
        // still driving; keep the arm in its ready pose
        out.qd_cmd = stow_toward(q, 2.0);
        break;
      }
      const Pose3 target =
          pre_grasp_pose(handle_type_, handle_b, p_.pre_grasp_standoff);
      out.pos_twist = position_control(target, ee_b, p_.gains);
      out.ff_twist = force_feedback(wrench, p_.axes, p_.gains, integ_, dt);
      out.ee_twist = out.pos_twist - base_twist_at(cmd, ee_b.p) + out.ff_twist;
      out.qd_cmd = kin::ik_velocity(arm_, q, out.ee_twist, p_.ik);

      const Vec6 err = pose_minus(target, ee_b);
      const bool base_settled = std::abs(world.state().v_applied) < 0.02 &&
                                std::abs(world.state().w_applied) < 0.05;
      if (dist <= p_.workspace.rho &&
          std::abs(bearing) < p_.bearing_tolerance && base_settled &&
          err.head<3>().norm() < 0.03 && err.tail<3>().norm() < 0.25) {
        enter(TaskPhase::Unlatch, out, "approach_complete");
        unlatch_stage_ = UnlatchStage::Reach;
        reach_travel_ = 0.0;
      }
      break;
    }

    case TaskPhase::Unlatch: {
      out.base_cmd = sim::BaseCommand{};
      switch (unlatch_stage_) {
        case UnlatchStage::Reach: {
          const Vec3 approach = -handle_b.rot().col(2);
          Pose3 target;
          target.p = ee_b.p + lead * p_.reach_speed * approach;
          target.q = grasp_pose_for(handle_type_, handle_b).q;
          out.pos_twist = position_control(target, ee_b, p_.gains);
          out.ff_twist = force_feedback(wrench, p_.axes, p_.gains, integ_, dt);
          out.ee_twist = out.pos_twist + out.ff_twist;
          out.qd_cmd = kin::ik_velocity(arm_, q, out.ee_twist, p_.ik);
          reach_travel_ += p_.reach_speed * dt;

          const bool contact = wrench.force.norm() >= p_.contact_threshold ||
                               world.ee_touching_handle();
          if (contact && world.attach_grasp()) {
            if (handle_type_ == sim::HandleType::Bar) {
              // a bar just pushes; there is no latch motion to perform
              enter(TaskPhase::Explore, out, "unlatch_complete");
              explore_stage_ = ExploreStage::ProbePush;
              probe_time_ = probe_travel_ = probe_peak_ = 0.0;
              drift_origin_pending_ = true;
            } else {
              unlatch_stage_ = UnlatchStage::Press;
              if (handle_type_ == sim::HandleType::Knob) {
                press_axis_ = handle_b.rot().col(2);
              } else {
                press_axis_ =
                    Vec3(0.0, 0.0, 1.0).cross(handle_b.rot().col(0));
                press_axis_.normalize();
              }
              out.event = "grasped";
            }
          } else if (reach_travel_ > p_.reach_max_travel) {
            fail("reach_timeout", out);
          }
          break;
        }
        case UnlatchStage::Press: {
          // open-loop rotation about the press axis; the angular compliance
          // channels are opened wide so they cannot fight the press itself
          AxisConfig axes = p_.axes;
          axes.limit.tail<3>().setConstant(50.0);
          out.ff_twist = force_feedback(wrench, axes, p_.gains, integ_, dt);
          out.ee_twist = out.ff_twist;
          out.ee_twist.ang += p_.unlatch_rate * press_axis_;
          out.qd_cmd = kin::ik_velocity(arm_, q, out.ee_twist, p_.ik);

          const double tau = std::abs(wrench.torque.dot(press_axis_));
          const bool released =
              world.state().door.handle_angle >= latch_release_angle_;
          if (released || tau >= p_.unlatch_torque_stop) {
            unlatch_stage_ = UnlatchStage::Settle;
            settle_ticks_ = 10;
            out.event = "unlatched";
          }
          break;
        }
        case UnlatchStage::Settle: {
          // the lever swings back after release and drags the grip with it,
          // leaving centimeters of lateral strain in the grasp; bleed that
          // with a compliant lateral axis and hold here until both the
          // return and the bleed are done, because the displacement origin
          // is captured on exit and any strain still stored would replay
          // during the probes and drown the door's genuine lateral drift
          const AxisConfig settle_axes =
              p_.axes.with_limit(kAxisY, p_.explore_y_limit)
                  .with_mode(kAxisY, AxisMode::Passive);
          out.ff_twist = force_feedback(wrench, settle_axes, p_.gains, integ_, dt);
          out.ee_twist = out.ff_twist;
          out.qd_cmd = kin::ik_velocity(arm_, q, out.ee_twist, p_.ik);
          const bool quiet =
              world.state().door.handle_angle <= 0.05 &&
              std::abs(wrench.force.y()) <= p_.explore_y_limit + 1.0;
          if (quiet || --settle_ticks_ <= 0) {
            enter(TaskPhase::Explore, out, "unlatch_complete");
            explore_stage_ = ExploreStage::ProbePush;
            probe_time_ = probe_travel_ = probe_peak_ = 0.0;
            drift_origin_pending_ = true;
          }
          break;
        }
      }
      break;
    }

    case TaskPhase::Explore: {
      out.base_cmd = sim::BaseCommand{};
      if (drift_origin_pending_) {
        // sampled on the first tick of the phase rather than when the
        // transition fired, so the final settle twist has fully run out and
        // none of its motion leaks into the displacement vote; from here the
        // probe travel itself is part of the door's first ten centimeters
        drift_origin_pending_ = false;
        drift_origin_world_ = world.ee_pose_world().p;
        // vote frame is the closed door plane, not the base: the base parks
        // yawed toward the handle, and in a yawed frame the probe march
        // itself bleeds into the lateral component and can outvote the
        // genuine arc drift
        const Vec3 n_w = base.to_pose3().rot() * (-handle_b.rot().col(2));
        drift_yaw_ = std::atan2(n_w.y(), n_w.x());
      }
      // the whole phase runs with a very compliant lateral axis so the grip
      // can follow the handle's millimeter-scale drift toward the hinge side
      const AxisConfig axes = p_.axes.with_limit(kAxisY, p_.explore_y_limit)
                                  .with_mode(kAxisY, AxisMode::Passive);
      switch (explore_stage_) {
        case ExploreStage::ProbePush:
        case ExploreStage::ProbePull: {
          const bool push = explore_stage_ == ExploreStage::ProbePush;
          const Vec3 dir = (push ? 1.0 : -1.0) * Vec3::UnitX();
          Pose3 target;
          target.p = ee_b.p + lead * p_.explore.probe_speed * dir;
          target.q = ee_b.q;
          out.pos_twist = position_control(target, ee_b, p_.gains);
          out.ff_twist = force_feedback(wrench, axes, p_.gains, integ_, dt);
          out.ee_twist = out.pos_twist + out.ff_twist;
          out.qd_cmd = kin::ik_velocity(arm_, q, out.ee_twist, p_.ik);

          probe_time_ += dt;
          probe_travel_ += p_.explore.probe_speed * dt;
          probe_peak_ = std::max(probe_peak_, std::abs(wrench.force.x()));

          if (probe_peak_ >= p_.explore.omega_x) {
            if (push) {
              explore_stage_ = ExploreStage::ProbeRecover;
              recover_time_ = 0.0;
            } else {
              fail("door_jammed", out);
            }
          } else if (probe_time_ >= p_.explore.window_time ||
                     probe_travel_ >= p_.explore.window_travel) {
            dir_.psi_x = push ? 1 : -1;
            out.direction = dir_;
            explore_stage_ = ExploreStage::Drift;
            out.event = push ? "push_door" : "pull_door";
          }
          break;
        }
        case ExploreStage::ProbeRecover: {
          // back off until the jammed-probe force clears, then try pulling
          Pose3 target;
          target.p = ee_b.p - lead * p_.explore.probe_speed * Vec3::UnitX();
          target.q = ee_b.q;
          out.pos_twist = position_control(target, ee_b, p_.gains);
          out.ff_twist = force_feedback(wrench, axes, p_.gains, integ_, dt);
          out.ee_twist = out.pos_twist + out.ff_twist;
          out.qd_cmd = kin::ik_velocity(arm_, q, out.ee_twist, p_.ik);
          recover_time_ += dt;
          if (std::abs(wrench.force.x()) < p_.contact_threshold ||
              recover_time_ > 1.5) {
            explore_stage_ = ExploreStage::ProbePull;
            probe_time_ = probe_travel_ = probe_peak_ = 0.0;
          }
          break;
        }
        case ExploreStage::Drift: {
          const Vec3 dir = static_cast<double>(dir_.psi_x) * Vec3::UnitX();
          Pose3 target;
          target.p = ee_b.p + lead * 0.6 * p_.open_speed * dir;
          target.q = ee_b.q;
          out.pos_twist = position_control(target, ee_b, p_.gains);
          out.ff_twist = force_feedback(wrench, axes, p_.gains, integ_, dt);
          // the door may carry the grip out of reach here; let the verdict
          // walk the base after it while the frozen frame keeps the vote
          out.verdict = kin::workspace_check(target.p, p_.workspace);
          const ComposeResult composed = compose_velocity(
              out.pos_twist, out.ff_twist, out.verdict, p_.v_ws, 0.0, ee_b.p);
          out.ee_twist = composed.ee;
          out.base_cmd = composed.base;
          out.qd_cmd = kin::ik_velocity(arm_, q, out.ee_twist, p_.ik);

          const Vec3 d_w = world.ee_pose_world().p - drift_origin_world_;
          const double cy = std::cos(drift_yaw_);
          const double sy = std::sin(drift_yaw_);
          const Vec3 delta(cy * d_w.x() + sy * d_w.y(),
                           -sy * d_w.x() + cy * d_w.y(), d_w.z());
          if (std::abs(delta.x()) >= p_.explore.delta_x) {
            dir_.psi_y = delta.y() > 0.0 ? 1 : -1;
            out.direction = dir_;
            enter(TaskPhase::Open, out, "direction_identified");
            const double cd = std::cos(drift_yaw_);
            const double sd = std::sin(drift_yaw_);
            const Vec3 diag =
                Vec3(dir_.psi_x, dir_.psi_y, 0.0) / std::sqrt(2.0);
            open_dir_world_ = Vec3(cd * diag.x() - sd * diag.y(),
                                   sd * diag.x() + cd * diag.y(), 0.0);
            // the grip rode a circle of known radius from the vote origin,
            // so the chord's perpendicular bisector pins the hinge; the
            // panel turns about +z with the sign opposite the lateral vote,
            // which picks which of the two intersections is real
            Vec3 chord = d_w;
            chord.z() = 0.0;
            Vec3 u(dir_.psi_y * chord.y(), -dir_.psi_y * chord.x(), 0.0);
            u.normalize();
            const double r_grip = std::hypot(grip_radius_, handle_standoff_);
            const double half = 0.5 * chord.norm();
            const double apo =
                std::sqrt(std::max(r_grip * r_grip - half * half, 0.0));
            hinge_world_ = drift_origin_world_ + 0.5 * chord + apo * u;
            hinge_world_.z() = 0.0;
            theta_history_.clear();
          }
          break;
        }
      }
      break;
    }

    case TaskPhase::Open: {
      const Pose3 base3 = base.to_pose3();
      const double spin = dir_.psi_y > 0 ? -1.0 : 1.0;
      Vec3 d_w = open_dir_world_;
      if (dir_.psi_x < 0) {
        // the frozen diagonal leaves the grip's arc within half a radian
        // and then grinds strain into the grasp; with the hinge pinned at
        // identification a pull can follow the tangent the whole way
        Vec3 rad = base3.rot() * ee_b.p + base3.p - hinge_world_;
        rad.z() = 0.0;
        if (rad.norm() > 1e-9) {
          rad.normalize();
          d_w = spin * Vec3(-rad.y(), rad.x(), 0.0);
        }
      }
      Vec3 d = base3.rot().transpose() * d_w;
      d.z() = 0.0;
      if (d.norm() > 1e-9) {
        d.normalize();
      }
      Pose3 target;
      target.p = ee_b.p + lead * p_.open_speed * d;
      // a pull swing rotates the grip three times as far as a push needs
      // before its pass; track the handle frame or the wrist winds up
      // against a joint stop and the arm can no longer relieve anything
      target.q = dir_.psi_x < 0 ? grasp_pose_for(handle_type_, handle_b).q
                                : ee_b.q;
      out.pos_twist = position_control(target, ee_b, p_.gains);
      out.ff_twist = force_feedback(wrench, p_.axes, p_.gains, integ_, dt);

      out.verdict = kin::workspace_check(target.p, p_.workspace);
      if (dir_.psi_x > 0 && base.x > p_.hold_line_x &&
          out.verdict == kin::WorkspaceVerdict::TooFar) {
        // hold short of the doorway; the pass phase owns the final advance
        out.verdict = kin::WorkspaceVerdict::InReach;
      }
      const double w_cmd = clamp_abs(
          0.9 * std::atan2(ee_b.p.y(), ee_b.p.x()), 0.5 * w_max_);
      if (dir_.psi_x < 0) {
        // the panel's free edge can reach anything nearer the hinge than
        // its own length; ride just outside that circle, trailing the
        // handle at the span the arm holds comfortably. The follow term
        // alone would dive at the grip and the barrier term alone would
        // strand the arm, but together they make the base slide along
        // the rim after the arcing handle.
        const double keep =
            panel_length_ + base_radius_ + p_.pull_keep_margin;
        const Vec3 handle_w = base3.rot() * handle_b.p + base3.p;
        Vec2 r(base.x - hinge_world_.x(), base.y - hinge_world_.y());
        const double hd = r.norm();
        r /= std::max(hd, 1e-9);
        const double span = ee_b.p.head<2>().norm();

        Vec2 v_des(0.0, 0.0);
        if (span > p_.pull_follow_span) {
          Vec2 to_grip(handle_w.x() - base.x, handle_w.y() - base.y);
          const double n = to_grip.norm();
          if (n > 1e-9) {
            v_des = std::min(2.5 * (span - p_.pull_follow_span),
                             p_.pull_follow_speed) *
                    (to_grip / n);
          }
        }
        // barrier floor on the outward rate; tapered so the retreat never
        // outruns what the arm can pay out, a stretched chain collapses
        // the solve right when the grasp needs relieving
        const double v_out = std::min(
            p_.pull_retreat_speed *
                std::clamp((0.70 - span) / 0.08, 0.25, 1.0),
            2.0 * (keep + 0.03 - hd));
        const double v_rad = v_des.dot(r);
        if (v_rad < v_out) {
          v_des += (v_out - v_rad) * r;
        }

        sim::BaseCommand cmd;
        if (v_des.norm() > 0.03) {
          // diff drive tracks the line of travel; fold the heading error
          // into a half turn so the base backs out rather than spinning
          // around while the arm is tied to the door
          double err =
              wrap_angle(std::atan2(v_des.y(), v_des.x()) - base.yaw);
          double sign = 1.0;
          if (err > 0.5 * kPi) {
            err -= kPi;
            sign = -1.0;
          } else if (err < -0.5 * kPi) {
            err += kPi;
            sign = -1.0;
          }
          cmd.w = clamp_abs(2.0 * err, 0.5 * w_max_);
          cmd.v = sign * v_des.norm() * std::max(std::cos(err), 0.0);
        } else {
          // face the grip so the arm works in front of the chassis
          cmd.w = w_cmd;
        }
        out.base_cmd = cmd;
        out.ee_twist =
            out.pos_twist - base_twist_at(cmd, ee_b.p) + out.ff_twist;
      } else {
        const ComposeResult composed =
            compose_velocity(out.pos_twist, out.ff_twist, out.verdict,
                             p_.v_ws, w_cmd, ee_b.p);
        out.ee_twist = composed.ee;
        out.base_cmd = composed.base;
      }
      out.qd_cmd = kin::ik_velocity(arm_, q, out.ee_twist, p_.ik);
      std::fprintf(stderr,
                   "[dbg] t=%.1f ee_b=(%.2f %.2f %.2f) yaw=%.2f cmd=(%.2f "
                   "%.2f) qd=%.3f q=[%.2f %.2f %.2f %.2f %.2f %.2f %.2f]\n",
                   phase_time_, ee_b.p.x(), ee_b.p.y(), ee_b.p.z(), base.yaw,
                   out.base_cmd.v, out.base_cmd.w, out.qd_cmd.norm(), q[0],
                   q[1], q[2], q[3], q[4], q[5], q[6]);

      const double theta = world.state().door.theta;
      theta_history_.push_back(theta);
      const std::size_t window =
          static_cast<std::size_t>(p_.stall_window / dt);
      const bool stalled =
          theta_history_.size() > window && theta > p_.min_open_theta &&
          theta - theta_history_[theta_history_.size() - 1 - window] <
              p_.stall_delta;
      // a push pass drags the rest of the swing itself, so a stall at arm
      // stretch is enough; a pull pass gets no second chance and the lane
      // only clears the panel once the door is nearly square to the wall
      const bool ready = dir_.psi_x > 0
                             ? (world.clearance() > p_.pass_clearance || stalled)
                             : theta >= p_.pull_open_theta;
      if (ready) {
        enter(TaskPhase::HoldAndPass, out, "door_open");
        // the sign product encodes the hinge side: the handle standoff seam
        // rotates opposite ways for push and pull, so the product survives
        const bool hinge_right = dir_.clockwise();
        shade_ = hinge_right ? 0.05 : -0.05;
        // a push base sits close enough to ride straight out; a pull base
        // is far behind after the retreat and lines up first
        pass_stage_ =
            dir_.psi_x > 0 ? PassStage::Through : PassStage::Reposition;
        released_ = false;
      }
      break;
    }

    case TaskPhase::HoldAndPass: {
      if (dir_.psi_x > 0) {
        // push: keep the arm tracking a point just ahead of the handle so
        // the grasp spring tows the door against its closer while the base
        // drives; tracking absorbs the door's surges, the relief limit
        // caps the tow force
        const double grip_dist = handle_b.p.head<2>().norm();
        out.base_cmd = follow_lane(base, shade_, p_.pass_speed, w_max_);
        Pose3 grip = grasp_pose_for(handle_type_, handle_b);
        grip.p.x() += p_.drag_offset;
        out.pos_twist = position_control(grip, ee_b, p_.gains);
        const AxisConfig axes =
            p_.axes.with_limit(kAxisX, p_.through_x_limit)
                .with_limit(kAxisY, p_.pass_y_limit)
                .with_mode(kAxisY, AxisMode::Passive)
                .with_limit(kAxisYaw, p_.pass_yaw_limit);
        out.ff_twist = force_feedback(wrench, axes, p_.gains, integ_, dt);
        out.ee_twist = out.pos_twist + out.ff_twist;
        out.qd_cmd = kin::ik_velocity(arm_, q, out.ee_twist, p_.ik);

        // no strain release here: the handle rides beyond nominal reach
        // while the door swings ahead of the base, and the grasp holds
        if (base.x > p_.release_x || grip_dist < p_.grip_min) {
          enter(TaskPhase::Release, out, "released");
        }
      } else {
        // pull: the gate left the door past upright, so it coasts shut on
        // its closer slower than the base crosses; let go at once, stow
        // the arm, and swing wide of the free edge before cutting back to
        // the lane, because the straight line to the doorway shaves the
        // panel's tip
        if (!released_) {
          world.release_grasp();
          released_ = true;
        }
        out.qd_cmd = stow_toward(q, 3.0);
        const double tip_x = hinge_world_.x() - panel_length_;
        if (pass_stage_ == PassStage::Reposition) {
          const Vec2 wide(tip_x - 0.25,
                          std::copysign(p_.pull_bypass_y, shade_));
          out.base_cmd = pursue(base, wide, p_.pass_speed, w_max_);
          if (dist2(base, wide) < 0.15) {
            pass_stage_ = PassStage::Through;
          }
        } else {
          const Vec2 cut(-0.1, shade_);
          out.base_cmd = pursue(base, cut, p_.pass_speed, w_max_);
          if (base.x > -0.2) {
            enter(TaskPhase::Release, out, "released");
          }
        }
      }
      break;
    }

    case TaskPhase::Release: {
      if (!released_) {
        world.release_grasp();
        released_ = true;
      }
      out.base_cmd = follow_lane(base, shade_, p_.exit_speed, w_max_);
      out.qd_cmd = stow_toward(q, 3.0);
      if (base.x > p_.exit_x) {
        enter(TaskPhase::Done, out, "driving_mode_handoff");
      }
      break;
    }

    case TaskPhase::Done:
      break;
  }

  out.phase = phase_;
  out.direction = dir_;
  out.fault = fault_;
  return out;
}

}  // namespace doorsim::ctrl
