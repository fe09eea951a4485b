#include "doorsim/sim/collision.hpp"

#include <array>
#include <cmath>
#include <string_view>
#include <utility>

#include "doorsim/sim/planar.hpp"

namespace doorsim::sim {

namespace {

struct Capsule {
  Vec3 a;
  Vec3 b;
  double radius;
  const char* name;
};

Pose3 mount_pose(const Scene& scene, const BasePose& base) {
  Pose3 pose = base.to_pose3();
  pose.p.z() = scene.robot.mount_height;
  return pose;
}

// Four capsules between the distinct frame origins of the chain: shoulder,
// upper arm, forearm, wrist-to-tool.
std::array<Capsule, 4> arm_capsules(const Scene& scene, const BasePose& base,
                                    const kin::JointVec& q) {
  const auto frames = kin::fk_frames(scene.arm, q);
  const Pose3 mount = mount_pose(scene, base);
  const auto at = [&](int i) { return mount.transform(frames[i].p); };
  const double r = scene.robot.arm_capsule_radius;
  return {Capsule{at(0), at(1), r, "arm0"}, Capsule{at(1), at(3), r, "arm1"},
          Capsule{at(3), at(5), r, "arm2"},
          Capsule{at(5), at(7), scene.robot.ee_capsule_radius, "arm3"}};
}

void add_pair(CollisionReport& report, const char* a, const char* b,
              double distance) {
  report.any = true;
  report.pairs.push_back({a, b, distance});
}

}  // namespace

CollisionReport check_collision(const Scene& scene, const BasePose& base,
                                const kin::JointVec& q, const DoorState& door,
                                bool ee_grasped) {
  CollisionReport report;
  const Vec2 center = base.position();
  const double base_r = scene.robot.base_radius;

  const std::array<const char*, 2> wall_names = {"wall_left", "wall_right"};
  for (std::size_t i = 0; i < scene.walls.size(); ++i) {
    const double d =
        point_segment_distance(center, scene.walls[i].a, scene.walls[i].b);
    if (d < base_r) {
      add_pair(report, "base", wall_names[i], d - base_r);
    }
  }
  const WallSegment panel = door_segment(scene, door.theta);
  const double base_door = point_segment_distance(center, panel.a, panel.b);
  if (base_door < base_r) {
    add_pair(report, "base", "door", base_door - base_r);
  }

  const auto capsules = arm_capsules(scene, base, q);
  for (const Capsule& cap : capsules) {
    const Vec2 a(cap.a.x(), cap.a.y());
    const Vec2 b(cap.b.x(), cap.b.y());
    for (std::size_t i = 0; i < scene.walls.size(); ++i) {
      const double d =
          segment_segment_distance(a, b, scene.walls[i].a, scene.walls[i].b);
      if (d < cap.radius) {
        add_pair(report, cap.name, wall_names[i], d - cap.radius);
      }
    }
    // the tool link rides the handle while grasped; that contact is the task
    if (ee_grasped && std::string_view(cap.name) == "arm3") {
      continue;
    }
    const double d = segment_segment_distance(a, b, panel.a, panel.b);
    if (d < cap.radius) {
      add_pair(report, cap.name, "door", d - cap.radius);
    }
  }

  // non-adjacent links only; neighbours share a joint and always "touch"
  const std::array<std::pair<int, int>, 3> self_pairs = {
      std::make_pair(0, 2), std::make_pair(0, 3), std::make_pair(1, 3)};
  for (const auto& [i, j] : self_pairs) {
    const double d = segment_segment_distance3(capsules[i].a, capsules[i].b,
                                               capsules[j].a, capsules[j].b);
    const double limit = capsules[i].radius + capsules[j].radius;
    if (d < limit) {
      add_pair(report, capsules[i].name, capsules[j].name, d - limit);
    }
  }
  return report;
}

}  // namespace doorsim::sim
