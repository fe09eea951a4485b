#include "doorsim/scenario.hpp"

#include <fstream>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "doorsim/error.hpp"

namespace doorsim {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::string& where,
                  const std::set<std::string>& allowed) {
  if (!j.is_object()) {
    throw ConfigError(where + ": expected an object");
  }
  for (const auto& item : j.items()) {
    if (allowed.count(item.key()) == 0) {
      throw ConfigError(where + ": unknown key '" + item.key() + "'");
    }
  }
}

double get_num(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) {
    return fallback;
  }
  if (!j.at(key).is_number()) {
    throw ConfigError("'" + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

sim::HingeSide parse_hinge(const std::string& s) {
  if (s == "left") return sim::HingeSide::Left;
  if (s == "right") return sim::HingeSide::Right;
  throw ConfigError("door.hinge must be 'left' or 'right'");
}

sim::SwingDir parse_swing(const std::string& s) {
  if (s == "push") return sim::SwingDir::Push;
  if (s == "pull") return sim::SwingDir::Pull;
  throw ConfigError("door.swing must be 'push' or 'pull'");
}

sim::HandleType parse_handle(const std::string& s) {
  if (s == "lever") return sim::HandleType::Lever;
  if (s == "knob") return sim::HandleType::Knob;
  if (s == "bar") return sim::HandleType::Bar;
  throw ConfigError("door.handle must be 'lever', 'knob' or 'bar'");
}

const char* hinge_name(sim::HingeSide h) {
  return h == sim::HingeSide::Left ? "left" : "right";
}
const char* swing_name(sim::SwingDir s) {
  return s == sim::SwingDir::Push ? "push" : "pull";
}
const char* handle_name(sim::HandleType t) {
  switch (t) {
    case sim::HandleType::Lever: return "lever";
    case sim::HandleType::Knob: return "knob";
    case sim::HandleType::Bar: return "bar";
  }
  return "lever";
}

sim::DoorSpec parse_door(const json& j) {
  require_keys(j, "door",
               {"width", "hinge", "swing", "handle", "handle_height",
                "handle_offset_from_edge", "hinge_damping",
                "latch_release_angle", "wall_gap", "panel_mass",
                "closer_torque", "latch_hold_torque", "handle_max_angle",
                "handle_return_stiffness", "handle_return_damping",
                "handle_standoff", "lever_length"});
  sim::DoorSpec d;
  d.width = get_num(j, "width", d.width);
  if (j.contains("hinge")) d.hinge_side = parse_hinge(j.at("hinge"));
  if (j.contains("swing")) d.swing = parse_swing(j.at("swing"));
  if (j.contains("handle")) d.handle_type = parse_handle(j.at("handle"));
  d.handle_height = get_num(j, "handle_height", d.handle_height);
  d.handle_offset_from_edge =
      get_num(j, "handle_offset_from_edge", d.handle_offset_from_edge);
  d.hinge_damping = get_num(j, "hinge_damping", d.hinge_damping);
  d.latch_release_angle =
      get_num(j, "latch_release_angle", d.latch_release_angle);
  d.wall_gap = get_num(j, "wall_gap", d.wall_gap);
  d.panel_mass = get_num(j, "panel_mass", d.panel_mass);
  d.closer_torque = get_num(j, "closer_torque", d.closer_torque);
  d.latch_hold_torque = get_num(j, "latch_hold_torque", d.latch_hold_torque);
  d.handle_max_angle = get_num(j, "handle_max_angle", d.handle_max_angle);
  d.handle_return_stiffness =
      get_num(j, "handle_return_stiffness", d.handle_return_stiffness);
  d.handle_return_damping =
      get_num(j, "handle_return_damping", d.handle_return_damping);
  d.handle_standoff = get_num(j, "handle_standoff", d.handle_standoff);
  d.lever_length = get_num(j, "lever_length", d.lever_length);
  sim::validate(d);
  return d;
}

sim::RobotParams parse_robot(const json& j) {
  require_keys(j, "robot",
               {"base_radius", "wheel_radius", "track_width", "v_max", "w_max",
                "mount_height", "arm_capsule_radius", "ee_capsule_radius",
                "q_init"});
  sim::RobotParams r;
  r.base_radius = get_num(j, "base_radius", r.base_radius);
  r.wheel_radius = get_num(j, "wheel_radius", r.wheel_radius);
  r.track_width = get_num(j, "track_width", r.track_width);
  r.v_max = get_num(j, "v_max", r.v_max);
  r.w_max = get_num(j, "w_max", r.w_max);
  r.mount_height = get_num(j, "mount_height", r.mount_height);
  r.arm_capsule_radius = get_num(j, "arm_capsule_radius", r.arm_capsule_radius);
  r.ee_capsule_radius = get_num(j, "ee_capsule_radius", r.ee_capsule_radius);
  if (j.contains("q_init")) {
    const auto& arr = j.at("q_init");
    if (!arr.is_array() || arr.size() != kin::kNumJoints) {
      throw ConfigError("robot.q_init must be an array of 7 numbers");
    }
    for (int i = 0; i < kin::kNumJoints; ++i) {
      r.q_init[i] = arr.at(i).get<double>();
    }
  }
  return r;
}

sim::SimParams parse_sim(const json& j) {
  require_keys(j, "sim",
               {"dt", "control_dt", "grasp_k_lin", "grasp_k_ang",
                "grasp_d_lin", "grasp_d_ang", "contact_stiffness",
                "contact_radius", "lidar_max_range", "lidar_noise_std",
                "wrench_noise_std", "lidar_rays_per_sector",
                "wall_half_length", "door_height"});
  sim::SimParams p;
  p.dt = get_num(j, "dt", p.dt);
  p.control_dt = get_num(j, "control_dt", p.control_dt);
  p.grasp_k_lin = get_num(j, "grasp_k_lin", p.grasp_k_lin);
  p.grasp_k_ang = get_num(j, "grasp_k_ang", p.grasp_k_ang);
  p.grasp_d_lin = get_num(j, "grasp_d_lin", p.grasp_d_lin);
  p.grasp_d_ang = get_num(j, "grasp_d_ang", p.grasp_d_ang);
  p.contact_stiffness = get_num(j, "contact_stiffness", p.contact_stiffness);
  p.contact_radius = get_num(j, "contact_radius", p.contact_radius);
  p.lidar_max_range = get_num(j, "lidar_max_range", p.lidar_max_range);
  p.lidar_noise_std = get_num(j, "lidar_noise_std", p.lidar_noise_std);
  p.wrench_noise_std = get_num(j, "wrench_noise_std", p.wrench_noise_std);
  p.lidar_rays_per_sector = static_cast<int>(
      get_num(j, "lidar_rays_per_sector", p.lidar_rays_per_sector));
  p.wall_half_length = get_num(j, "wall_half_length", p.wall_half_length);
  p.door_height = get_num(j, "door_height", p.door_height);
  if (p.dt <= 0.0 || p.dt > 0.05) {
    throw ConfigError("sim.dt must lie in (0, 0.05]");
  }
  if (p.control_dt < p.dt) {
    throw ConfigError("sim.control_dt must be at least sim.dt");
  }
  return p;
}

}  // namespace

ScenarioConfig scenario_from_json(const json& j) {
  require_keys(j, "scenario",
               {"name", "door", "robot", "sim", "start", "seed", "timeout",
                "controller", "checkpoint"});
  ScenarioConfig c;
  if (j.contains("name")) c.name = j.at("name").get<std::string>();
  if (j.contains("door")) c.door = parse_door(j.at("door"));
  if (j.contains("robot")) c.robot = parse_robot(j.at("robot"));
  if (j.contains("sim")) c.sim = parse_sim(j.at("sim"));
  if (j.contains("start")) {
    const auto& arr = j.at("start");
    if (!arr.is_array() || arr.size() != 3) {
      throw ConfigError("start must be [x, y, yaw]");
    }
    c.start = BasePose{arr.at(0).get<double>(), arr.at(1).get<double>(),
                       arr.at(2).get<double>()};
  }
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  c.timeout = get_num(j, "timeout", c.timeout);
  if (c.timeout <= 0.0) {
    throw ConfigError("timeout must be positive");
  }
  if (j.contains("controller")) {
    c.controller = j.at("controller").get<std::string>();
  }
  if (c.controller != "adaptive" && c.controller != "rl") {
    throw ConfigError("controller must be 'adaptive' or 'rl'");
  }
  if (j.contains("checkpoint")) {
    c.checkpoint = j.at("checkpoint").get<std::string>();
  }
  if (c.controller == "rl" && c.checkpoint.empty()) {
    throw ConfigError("controller 'rl' requires a checkpoint path");
  }
  return c;
}

json scenario_to_json(const ScenarioConfig& c) {
  json j;
  j["name"] = c.name;
  j["door"] = {
      {"width", c.door.width},
      {"hinge", hinge_name(c.door.hinge_side)},
      {"swing", swing_name(c.door.swing)},
      {"handle", handle_name(c.door.handle_type)},
      {"handle_height", c.door.handle_height},
      {"handle_offset_from_edge", c.door.handle_offset_from_edge},
      {"hinge_damping", c.door.hinge_damping},
      {"latch_release_angle", c.door.latch_release_angle},
      {"wall_gap", c.door.wall_gap},
      {"panel_mass", c.door.panel_mass},
      {"closer_torque", c.door.closer_torque},
      {"latch_hold_torque", c.door.latch_hold_torque},
      {"handle_max_angle", c.door.handle_max_angle},
      {"handle_return_stiffness", c.door.handle_return_stiffness},
      {"handle_return_damping", c.door.handle_return_damping},
      {"handle_standoff", c.door.handle_standoff},
      {"lever_length", c.door.lever_length},
  };
  j["robot"] = {
      {"base_radius", c.robot.base_radius},
      {"wheel_radius", c.robot.wheel_radius},
      {"track_width", c.robot.track_width},
      {"v_max", c.robot.v_max},
      {"w_max", c.robot.w_max},
      {"mount_height", c.robot.mount_height},
      {"arm_capsule_radius", c.robot.arm_capsule_radius},
      {"ee_capsule_radius", c.robot.ee_capsule_radius},
      {"q_init", std::vector<double>(c.robot.q_init.data(),
                                     c.robot.q_init.data() + kin::kNumJoints)},
  };
  j["sim"] = {
      {"dt", c.sim.dt},
      {"control_dt", c.sim.control_dt},
      {"grasp_k_lin", c.sim.grasp_k_lin},
      {"grasp_k_ang", c.sim.grasp_k_ang},
      {"grasp_d_lin", c.sim.grasp_d_lin},
      {"grasp_d_ang", c.sim.grasp_d_ang},
      {"contact_stiffness", c.sim.contact_stiffness},
      {"contact_radius", c.sim.contact_radius},
      {"lidar_max_range", c.sim.lidar_max_range},
      {"lidar_noise_std", c.sim.lidar_noise_std},
      {"wrench_noise_std", c.sim.wrench_noise_std},
      {"lidar_rays_per_sector", c.sim.lidar_rays_per_sector},
      {"wall_half_length", c.sim.wall_half_length},
      {"door_height", c.sim.door_height},
  };
  j["start"] = {c.start.x, c.start.y, c.start.yaw};
  j["seed"] = c.seed;
  j["timeout"] = c.timeout;
  j["controller"] = c.controller;
  if (!c.checkpoint.empty()) {
    j["checkpoint"] = c.checkpoint;
  }
  return j;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open scenario file: " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("scenario parse error: " + std::string(e.what()));
  }
  try {
    return scenario_from_json(j);
  } catch (const json::exception& e) {
    throw ConfigError("scenario field error: " + std::string(e.what()));
  }
}

void save_scenario(const ScenarioConfig& config,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot write scenario file: " + path.string());
  }
  out << scenario_to_json(config).dump(2) << '\n';
}

sim::World make_world(const ScenarioConfig& config) {
  sim::Scene scene = sim::Scene::build(config.door, config.robot, config.sim);
  return sim::World(std::move(scene), config.start);
}

json world_snapshot(const sim::World& world) {
  const sim::WorldState& s = world.state();
  json j;
  j["time"] = s.time;
  j["base"] = {s.base.x, s.base.y, s.base.yaw};
  j["q"] = std::vector<double>(s.q.data(), s.q.data() + kin::kNumJoints);
  j["door"] = {{"theta", s.door.theta},
               {"theta_dot", s.door.theta_dot},
               {"handle_angle", s.door.handle_angle},
               {"latched", s.door.latched}};
  j["grasp_attached"] = s.grasp.attached;
  j["clearance"] = world.clearance();
  return j;
}

}  // namespace doorsim
