#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "doorsim/geometry.hpp"
#include "doorsim/sim/world.hpp"

#include <nlohmann/json_fwd.hpp>

namespace doorsim {

// Everything needed to reproduce one episode: door variant, robot placement,
// noise settings and the controller to run. Serialized as JSON.
struct ScenarioConfig {
  std::string name{"door"};
  sim::DoorSpec door{};
  sim::RobotParams robot{};
  sim::SimParams sim{};
  BasePose start{-2.0, 0.0, 0.0};
  std::uint64_t seed{0};
  double timeout{60.0};               // wall-clock-free sim time budget [s]
  std::string controller{"adaptive"}; // "adaptive" or "rl"
  std::string checkpoint;             // policy weights, when controller == "rl"
};

// Strict parse: unknown keys and out-of-range values raise ConfigError.
ScenarioConfig scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioConfig& config);

ScenarioConfig load_scenario(const std::filesystem::path& path);
void save_scenario(const ScenarioConfig& config,
                   const std::filesystem::path& path);

sim::World make_world(const ScenarioConfig& config);

// Final-state snapshot for the episode sidecar.
nlohmann::json world_snapshot(const sim::World& world);

}  // namespace doorsim
