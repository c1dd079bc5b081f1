#pragma once

#include <string>

#include "json.hpp"

#include "jamloc/experiment.hpp"

namespace jamloc {

// JSON scenario configuration. Every field is optional and defaults to the
// baseline scenario; unknown keys are rejected. field.placement_seed is not
// part of the schema because experiment trials derive their seeds from
// master_seed.
ScenarioConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const ScenarioConfig& config);

ScenarioConfig load_config_file(const std::string& path);

Method method_from_string(const std::string& name);
CompensationMode compensation_mode_from_string(const std::string& name);
PlacementPolicy placement_policy_from_string(const std::string& name);

}  // namespace jamloc
