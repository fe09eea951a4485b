#include "doorsim/sim/door.hpp"

#include <cmath>

#include <doctest.h>

#include "doorsim/sim/scene.hpp"

using namespace doorsim;
using namespace doorsim::sim;

namespace {

Scene make_scene(HingeSide hinge, SwingDir swing,
                 HandleType handle = HandleType::Lever, double width = 1.0) {
  DoorSpec d;
  d.width = width;
  d.hinge_side = hinge;
  d.swing = swing;
  d.handle_type = handle;
  return Scene::build(d);
}

// Door-only dynamics integrated with RK4 on a fine grid, as an independent
// reference for the semi-implicit stepper. Valid while the door is away
// from its angular stops.
struct ThetaState {
  double theta;
  double theta_dot;
};

ThetaState rk4_door(const DoorSpec& d, ThetaState s, double external,
                    double t_end, double h) {
  const double inertia = d.hinge_inertia();
  const auto accel = [&](const ThetaState& x) {
    const double closer = (x.theta > 0.0) ? d.closer_torque : 0.0;
    return (external - closer - d.hinge_damping * x.theta_dot) / inertia;
  };
  const int n = static_cast<int>(std::round(t_end / h));
  for (int i = 0; i < n; ++i) {
    const double k1v = accel(s);
    const double k1x = s.theta_dot;
    const ThetaState s2{s.theta + 0.5 * h * k1x, s.theta_dot + 0.5 * h * k1v};
    const double k2v = accel(s2);
    const double k2x = s2.theta_dot;
    const ThetaState s3{s.theta + 0.5 * h * k2x, s.theta_dot + 0.5 * h * k2v};
    const double k3v = accel(s3);
    const double k3x = s3.theta_dot;
    const ThetaState s4{s.theta + h * k3x, s.theta_dot + h * k3v};
    const double k4v = accel(s4);
    const double k4x = s4.theta_dot;
    s.theta += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    s.theta_dot += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  return s;
}

}  // namespace

TEST_CASE("panel direction and normal for every hinge/swing combination") {
  // closed: panel runs from the hinge across the doorway, normal faces -x
  for (SwingDir swing : {SwingDir::Push, SwingDir::Pull}) {
    Scene left = make_scene(HingeSide::Left, swing);
    CHECK(left.hinge.isApprox(Vec2(0.0, 0.5)));
    CHECK(door_dir(left, 0.0).isApprox(Vec2(0.0, -1.0)));
    CHECK(door_normal(left, 0.0).isApprox(Vec2(-1.0, 0.0)));

    Scene right = make_scene(HingeSide::Right, swing);
    CHECK(right.hinge.isApprox(Vec2(0.0, -0.5)));
    CHECK(door_dir(right, 0.0).isApprox(Vec2(0.0, 1.0)));
  }

  // opening moves the free edge off the wall plane, to the correct side
  const double th = 0.4;
  CHECK(door_dir(make_scene(HingeSide::Left, SwingDir::Push), th).x() > 0.0);
  CHECK(door_dir(make_scene(HingeSide::Left, SwingDir::Pull), th).x() < 0.0);
  CHECK(door_dir(make_scene(HingeSide::Right, SwingDir::Push), th).x() > 0.0);
  CHECK(door_dir(make_scene(HingeSide::Right, SwingDir::Pull), th).x() < 0.0);
}

TEST_CASE("normal rotates with the panel and stays perpendicular") {
  Scene s = make_scene(HingeSide::Right, SwingDir::Push);
  for (double th : {0.0, 0.3, 0.9, M_PI / 2.0}) {
    const Vec2 dir = door_dir(s, th);
    const Vec2 n = door_normal(s, th);
    CHECK(std::abs(dir.dot(n)) < 1e-12);
    CHECK(n.norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("clearance grows with angle and gates on 0.66 m") {
  DoorSpec d;
  d.width = 1.0;
  CHECK(door_clearance(d, 0.0) == doctest::Approx(0.0));
  CHECK(door_clearance(d, M_PI / 2.0) == doctest::Approx(1.0));
  CHECK(door_clearance(d, 0.5) == doctest::Approx(std::sin(0.5)));
  CHECK_FALSE(doorway_passable(d, 0.5));
  CHECK(doorway_passable(d, 1.0));

  DoorSpec narrow;
  narrow.width = 0.75;
  CHECK(doorway_passable(narrow, M_PI / 2.0));
  DoorSpec at_limit;
  at_limit.width = 0.66;
  CHECK_FALSE(doorway_passable(at_limit, M_PI / 2.0));  // strict inequality
}

TEST_CASE("hinge torque combines external, damping and latch hold") {
  DoorSpec d;
  d.hinge_damping = 1.0;
  DoorState s;
  s.latched = false;

  CHECK(hinge_torque(d, s, 0.0) == doctest::Approx(0.0));

  s.theta_dot = 0.5;
  CHECK(hinge_torque(d, s, 2.0) == doctest::Approx(1.5));

  s = DoorState{};
  s.latched = true;
  CHECK(hinge_torque(d, s, 10.0) == doctest::Approx(0.0));
  CHECK(hinge_torque(d, s, d.latch_hold_torque + 7.0) == doctest::Approx(7.0));
}

TEST_CASE("latched door does not move under moderate torque") {
  Scene scene = make_scene(HingeSide::Right, SwingDir::Push);
  DoorState s;
  for (int i = 0; i < 400; ++i) {
    step_door(scene, s, 40.0, 0.005);
  }
  CHECK(s.theta == 0.0);
  CHECK(s.theta_dot == 0.0);
}

TEST_CASE("unlatched door under constant torque matches an RK4 reference") {
  Scene scene = make_scene(HingeSide::Right, SwingDir::Push);
  DoorState s;
  s.latched = false;
  s.theta = 0.1;  // off the closed stop so the closer force is smooth
  const double external = 6.0;
  const double t_end = 1.0;
  for (int i = 0; i < 200; ++i) {
    step_door(scene, s, external, t_end / 200.0);
  }
  const ThetaState ref =
      rk4_door(scene.door, {0.1, 0.0}, external, t_end, 1e-4);
  REQUIRE(ref.theta < M_PI / 2.0);  // reference stayed between the stops
  CHECK(s.theta == doctest::Approx(ref.theta).epsilon(0.01));
  CHECK(s.theta_dot == doctest::Approx(ref.theta_dot).epsilon(0.02));
}

TEST_CASE("door integration error shrinks with the step size") {
  Scene scene = make_scene(HingeSide::Right, SwingDir::Push);
  const double external = 6.0;
  const double t_end = 1.0;
  const auto run = [&](double h) {
    DoorState s;
    s.latched = false;
    s.theta = 0.1;
    const int n = static_cast<int>(std::round(t_end / h));
    for (int i = 0; i < n; ++i) {
      step_door(scene, s, external, h);
    }
    return s.theta;
  };
  const double ref = rk4_door(scene.door, {0.1, 0.0}, external, t_end, 1e-5).theta;
  const double err_coarse = std::abs(run(0.02) - ref);
  const double err_fine = std::abs(run(0.005) - ref);
  CHECK(err_fine * 2.0 < err_coarse);  // at least first-order convergence
}

TEST_CASE("door saturates at its stops without overshoot") {
  Scene scene = make_scene(HingeSide::Right, SwingDir::Push);
  DoorState s;
  s.latched = false;
  for (int i = 0; i < 4000; ++i) {
    step_door(scene, s, 50.0, 0.005);
  }
  CHECK(s.theta == doctest::Approx(M_PI / 2.0));
  CHECK(s.theta_dot <= 0.0);

  for (int i = 0; i < 4000; ++i) {
    step_door(scene, s, -50.0, 0.005);
  }
  CHECK(s.theta == doctest::Approx(0.0));
  CHECK(s.theta_dot >= 0.0);
}

TEST_CASE("handle follows its overdamped first-order response") {
  Scene scene = make_scene(HingeSide::Right, SwingDir::Push);
  const DoorSpec& d = scene.door;
  DoorState s;
  const double drive = 0.3;  // strong enough to reach release eventually
  const double t_end = 0.5;
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    step_handle(scene, s, drive, t_end / n);
  }
  // rate follows torque balance directly: k x' = (tau - k_s x), x(0) = 0
  const double tau_c = d.handle_return_damping / d.handle_return_stiffness;
  const double expect =
      drive / d.handle_return_stiffness * (1.0 - std::exp(-t_end / tau_c));
  CHECK(s.handle_angle == doctest::Approx(expect).epsilon(0.01));
}

TEST_CASE("latch releases at the threshold angle and stays released") {
  Scene scene = make_scene(HingeSide::Right, SwingDir::Push);
  DoorState s;
  REQUIRE(s.latched);
  int ticks_to_release = -1;
  for (int i = 0; i < 2000; ++i) {
    step_handle(scene, s, 0.5, 0.005);
    if (!s.latched) {
      ticks_to_release = i;
      break;
    }
  }
  REQUIRE(ticks_to_release > 0);
  CHECK(s.handle_angle >= scene.door.latch_release_angle);

  // spring returns the handle (2 s time constant); the latch stays released
  for (int i = 0; i < 2000; ++i) {
    step_handle(scene, s, 0.0, 0.005);
  }
  CHECK(s.handle_angle < 0.01);
  CHECK_FALSE(s.latched);
}

TEST_CASE("handle clamps at its mechanical stop") {
  Scene scene = make_scene(HingeSide::Right, SwingDir::Push);
  DoorState s;
  for (int i = 0; i < 4000; ++i) {
    step_handle(scene, s, 5.0, 0.005);
  }
  CHECK(s.handle_angle == doctest::Approx(scene.door.handle_max_angle));
}

TEST_CASE("bar handles spawn unlatched and ignore handle dynamics") {
  Scene scene = make_scene(HingeSide::Right, SwingDir::Push, HandleType::Bar);
  DoorState s;
  step_handle(scene, s, 2.0, 0.005);
  CHECK_FALSE(s.latched);
  CHECK(s.handle_angle == 0.0);
}

TEST_CASE("handle frame geometry at the closed pose") {
  Scene scene = make_scene(HingeSide::Right, SwingDir::Push);
  const DoorSpec& d = scene.door;
  DoorState s;
  const Vec3 pivot = handle_pivot(scene, 0.0);
  CHECK(pivot.x() == doctest::Approx(-d.handle_standoff));
  CHECK(pivot.y() == doctest::Approx(-d.width / 2.0 + d.panel_length() -
                                     d.handle_offset_from_edge));
  CHECK(pivot.z() == doctest::Approx(d.handle_height));

  const Pose3 grip = handle_frame(scene, s);
  // lever points back toward the hinge (-y for a right hinge)
  CHECK((grip.p - pivot).isApprox(Vec3(0.0, -d.lever_length, 0.0), 1e-9));
  const Mat3 r = grip.rot();
  CHECK(r.col(2).isApprox(Vec3(-1.0, 0.0, 0.0), 1e-9));  // faces the robot
  CHECK(r.col(0).isApprox(Vec3(0.0, -1.0, 0.0), 1e-9));  // principal axis
}

TEST_CASE("pressing the lever swings the grip downward at fixed standoff") {
  Scene scene = make_scene(HingeSide::Right, SwingDir::Push);
  DoorState s;
  s.handle_angle = 0.5;
  const Pose3 grip = handle_frame(scene, s);
  const Vec3 pivot = handle_pivot(scene, 0.0);
  CHECK(grip.p.z() == doctest::Approx(scene.door.handle_height -
                                      scene.door.lever_length * std::sin(0.5)));
  CHECK(grip.p.x() == doctest::Approx(pivot.x()));  // stays off the panel
  CHECK((grip.p - pivot).norm() == doctest::Approx(scene.door.lever_length));
}

TEST_CASE("grip velocity matches finite differences of the grip pose") {
  Scene scene = make_scene(HingeSide::Left, SwingDir::Pull);
  DoorState s;
  s.latched = false;
  s.theta = 0.4;
  s.theta_dot = 0.6;
  s.handle_angle = 0.2;
  s.handle_rate = -0.3;

  const double h = 1e-7;
  DoorState sp = s;
  sp.theta += h * s.theta_dot;
  sp.handle_angle += h * s.handle_rate;
  const Vec3 fd =
      (handle_frame(scene, sp).p - handle_frame(scene, s).p) / h;
  CHECK((handle_grip_velocity(scene, s) - fd).norm() < 1e-5);
}

TEST_CASE("knob frames rotate about the panel normal in place") {
  Scene scene = make_scene(HingeSide::Right, SwingDir::Push, HandleType::Knob);
  DoorState s0;
  DoorState s1;
  s1.handle_angle = 0.5;
  const Pose3 a = handle_frame(scene, s0);
  const Pose3 b = handle_frame(scene, s1);
  CHECK((a.p - b.p).norm() < 1e-12);  // knob grip does not translate
  const Vec3 axis = unlatch_axis(scene, 0.0);
  const Vec3 rotvec = rotation_log(b.rot() * a.rot().transpose());
  CHECK((rotvec - 0.5 * axis).norm() < 1e-9);
}
