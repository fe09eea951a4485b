// Developer diagnostic: runs one scripted episode and prints a per-tick
// table of phase, door angle, base pose, and wrench magnitudes.
//
//   episode_trace [push|pull] [left|right] [width] [yaw] [seed]

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "doorsim/ctrl/task_controller.hpp"
#include "doorsim/sim/world.hpp"

using namespace doorsim;

int main(int argc, char** argv) {
  sim::DoorSpec door;
  door.swing = (argc > 1 && std::strcmp(argv[1], "pull") == 0)
                   ? sim::SwingDir::Pull
                   : sim::SwingDir::Push;
  door.hinge_side = (argc > 2 && std::strcmp(argv[2], "left") == 0)
                        ? sim::HingeSide::Left
                        : sim::HingeSide::Right;
  door.width = argc > 3 ? std::atof(argv[3]) : 1.0;
  const double yaw = argc > 4 ? std::atof(argv[4]) : 0.0;
  const uint64_t seed = argc > 5 ? std::strtoull(argv[5], nullptr, 10) : 0;

  const sim::Scene scene = sim::Scene::build(door);
  sim::World world(scene, BasePose{-2.0, 0.0, yaw});
  ctrl::TaskController controller(ctrl::ControlParams{}, scene);
  Rng rng(seed);

  std::printf(
      "%6s %-13s %7s %7s %7s %7s %7s %8s %8s %8s %s\n", "t", "phase", "theta",
      "handle", "base.x", "base.y", "yaw", "|F|", "Fx", "clear", "event");
  int tick = 0;
  while (world.state().time < 90.0 &&
         controller.phase() != ctrl::TaskPhase::Done) {
    const ctrl::TickResult r = controller.tick(world, rng);
    const auto& s = world.state();
    if (tick % 5 == 0 || !r.event.empty()) {
      std::printf(
          "%6.1f %-13s %7.3f %7.3f %7.3f %7.3f %7.3f %8.2f %8.2f %8.3f %s\n",
          s.time, ctrl::phase_name(r.phase), s.door.theta, s.door.handle_angle,
          s.base.x, s.base.y, s.base.yaw, r.wrench.force.norm(),
          r.wrench.force.x(), world.clearance(), r.event.c_str());
    }
    world.step(r.base_cmd, r.qd_cmd, 0.2);
    ++tick;
  }
  const auto& s = world.state();
  std::printf("\nfinal: t=%.1f phase=%s fault=%d (%s) theta=%.3f "
              "clearance=%.3f base=(%.2f, %.2f) psi=(%d,%d)\n",
              s.time, ctrl::phase_name(controller.phase()),
              controller.failed() ? 1 : 0, controller.fault_reason().c_str(),
              s.door.theta, world.clearance(), s.base.x, s.base.y,
              controller.direction().psi_x, controller.direction().psi_y);
  return controller.failed() ? 2 : 0;
}
