#include "jamloc/network.hpp"

#include <stdexcept>

#include "jamloc/random.hpp"

namespace jamloc {

const char* to_string(NodeClass c) {
    switch (c) {
        case NodeClass::Unaffected: return "unaffected";
        case NodeClass::Boundary: return "boundary";
        case NodeClass::Jammed: return "jammed";
    }
    return "?";
}

std::vector<Node> generate_field(const FieldConfig& config) {
    if (!(config.width_m > 0.0) || !(config.height_m > 0.0))
        throw std::invalid_argument("field dimensions must be positive");
    if (config.node_count < 1) throw std::invalid_argument("node_count must be >= 1");

    std::mt19937_64 rng(config.placement_seed);
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(config.node_count));
    for (int i = 0; i < config.node_count; ++i) {
        const double x = uniform_range(rng, 0.0, config.width_m);
        const double y = uniform_range(rng, 0.0, config.height_m);
        nodes.push_back({i, {x, y}});
    }
    return nodes;
}

std::unordered_map<int, NodeClass> classify_nodes(const std::vector<Node>& nodes,
                                                  const Jammer& jammer) {
    const double rj = jammer.radius_m;
    const double rn = jammer.radio.node_comm_range_m;
    if (!(rj > rn) || !(rn > 0.0))
        throw std::invalid_argument("jamming radius must exceed the node comm range");

    std::unordered_map<int, NodeClass> classes;
    classes.reserve(nodes.size());
    for (const auto& node : nodes) {
        const double d = distance(node.position, jammer.position);
        NodeClass c;
        if (d > rj) {
            c = NodeClass::Unaffected;
        } else if (d >= rj - rn) {
            c = NodeClass::Boundary;
        } else {
            c = NodeClass::Jammed;
        }
        // Co-located nodes sit inside the radio model's singularity and are
        // treated as fully jammed, so they are never observed.
        if (d < kMinModelDistanceM) c = NodeClass::Jammed;
        classes.emplace(node.id, c);
    }
    return classes;
}

std::vector<BoundaryObservation> observe_boundary(const std::vector<Node>& nodes,
                                                  const Jammer& jammer, std::mt19937_64& rng) {
    const auto classes = classify_nodes(nodes, jammer);
    std::vector<BoundaryObservation> observations;
    for (const auto& node : nodes) {
        if (classes.at(node.id) != NodeClass::Boundary) continue;
        const double d = distance(node.position, jammer.position);
        const PowerSample sample = received_power(jammer.radio, d, rng);
        observations.push_back({node.id, node.position, sample.received_dbm});
    }
    return observations;
}

}  // namespace jamloc
