#include "jamloc/config.hpp"

#include <fstream>
#include <initializer_list>
#include <stdexcept>

namespace jamloc {

namespace {

using nlohmann::json;

void check_keys(const json& j, const char* context,
                std::initializer_list<const char*> allowed) {
    if (!j.is_object())
        throw std::invalid_argument(std::string(context) + " must be a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known)
            throw std::invalid_argument(std::string("unknown key \"") + item.key() + "\" in " +
                                        context);
    }
}

template <typename T>
void read(const json& j, const char* key, T& target) {
    if (const auto it = j.find(key); it != j.end()) target = it->get<T>();
}

}  // namespace

Method method_from_string(const std::string& name) {
    if (name == "cl") return Method::CL;
    if (name == "cj") return Method::CJ;
    if (name == "gjl") return Method::GJL;
    throw std::invalid_argument("unknown method: " + name);
}

CompensationMode compensation_mode_from_string(const std::string& name) {
    if (name == "paper") return CompensationMode::Paper;
    if (name == "geometric") return CompensationMode::Geometric;
    throw std::invalid_argument("unknown gjl_mode: " + name);
}

PlacementPolicy placement_policy_from_string(const std::string& name) {
    if (name == "center") return PlacementPolicy::Center;
    if (name == "edge") return PlacementPolicy::Edge;
    if (name == "corner") return PlacementPolicy::Corner;
    if (name == "fixed") return PlacementPolicy::Fixed;
    throw std::invalid_argument("unknown placement policy: " + name);
}

ScenarioConfig config_from_json(const json& j) try {
    check_keys(j, "config",
               {"field", "radio", "jammer_radius_m", "placement", "methods", "gjl_mode",
                "min_angle_deg", "trials", "master_seed"});

    ScenarioConfig config;

    if (const auto it = j.find("field"); it != j.end()) {
        const json& f = *it;
        check_keys(f, "field", {"width_m", "height_m", "node_count"});
        read(f, "width_m", config.field.width_m);
        read(f, "height_m", config.field.height_m);
        read(f, "node_count", config.field.node_count);
    }

    if (const auto it = j.find("radio"); it != j.end()) {
        const json& r = *it;
        check_keys(r, "radio",
                   {"jammer_power_dbm", "antenna_constant_db", "path_loss_exponent",
                    "shadowing_sigma_db", "node_comm_range_m"});
        read(r, "jammer_power_dbm", config.radio.jammer_power_dbm);
        read(r, "antenna_constant_db", config.radio.antenna_constant_db);
        read(r, "path_loss_exponent", config.radio.path_loss_exponent);
        read(r, "shadowing_sigma_db", config.radio.shadowing_sigma_db);
        read(r, "node_comm_range_m", config.radio.node_comm_range_m);
    }

    read(j, "jammer_radius_m", config.jammer_radius_m);

    if (const auto it = j.find("placement"); it != j.end()) {
        const json& p = *it;
        check_keys(p, "placement", {"policy", "x", "y"});
        std::string policy = to_string(config.placement.policy);
        read(p, "policy", policy);
        config.placement.policy = placement_policy_from_string(policy);
        if (config.placement.policy == PlacementPolicy::Fixed) {
            read(p, "x", config.placement.fixed_position.x);
            read(p, "y", config.placement.fixed_position.y);
        }
    }

    if (const auto it = j.find("methods"); it != j.end()) {
        config.methods.clear();
        for (const auto& name : *it) config.methods.push_back(method_from_string(name.get<std::string>()));
    }

    if (const auto it = j.find("gjl_mode"); it != j.end())
        config.gjl_mode = compensation_mode_from_string(it->get<std::string>());

    read(j, "min_angle_deg", config.min_angle_deg);
    read(j, "trials", config.trials);
    read(j, "master_seed", config.master_seed);

    config.validate();
    return config;
} catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config error: ") + e.what());
}

nlohmann::ordered_json config_to_json(const ScenarioConfig& config) {
    nlohmann::ordered_json j;
    j["field"] = {{"width_m", config.field.width_m},
                  {"height_m", config.field.height_m},
                  {"node_count", config.field.node_count}};
    j["radio"] = {{"jammer_power_dbm", config.radio.jammer_power_dbm},
                  {"antenna_constant_db", config.radio.antenna_constant_db},
                  {"path_loss_exponent", config.radio.path_loss_exponent},
                  {"shadowing_sigma_db", config.radio.shadowing_sigma_db},
                  {"node_comm_range_m", config.radio.node_comm_range_m}};
    j["jammer_radius_m"] = config.jammer_radius_m;
    nlohmann::ordered_json placement;
    placement["policy"] = to_string(config.placement.policy);
    if (config.placement.policy == PlacementPolicy::Fixed) {
        placement["x"] = config.placement.fixed_position.x;
        placement["y"] = config.placement.fixed_position.y;
    }
    j["placement"] = std::move(placement);
    nlohmann::ordered_json methods = nlohmann::ordered_json::array();
    for (const Method m : config.methods) methods.push_back(to_string(m));
    j["methods"] = std::move(methods);
    j["gjl_mode"] = to_string(config.gjl_mode);
    j["min_angle_deg"] = config.min_angle_deg;
    j["trials"] = config.trials;
    j["master_seed"] = config.master_seed;
    return j;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config parse error in " + path + ": " + e.what());
    }
    return config_from_json(j);
}

}  // namespace jamloc
