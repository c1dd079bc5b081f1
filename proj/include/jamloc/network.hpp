#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "jamloc/geometry.hpp"
#include "jamloc/propagation.hpp"

namespace jamloc {

struct Node {
    int id = 0;
    Point2D position;
};

struct Jammer {
    Point2D position;
    double radius_m = 30.0;
    RadioParams radio;
};

// A node is jammed when it sits more than one comm range inside the jamming
// disc, a boundary node when it is within one comm range of the disc edge
// (closed interval on both ends), and unaffected outside the disc.
enum class NodeClass { Unaffected, Boundary, Jammed };

const char* to_string(NodeClass c);

struct BoundaryObservation {
    int node_id = 0;
    Point2D position;
    double received_power_dbm = 0.0;
};

struct FieldConfig {
    double width_m = 100.0;
    double height_m = 100.0;
    int node_count = 100;
    std::uint64_t placement_seed = 0;
};

// node_count nodes i.i.d. uniform over the field rectangle, ids 0..n-1.
// Deterministic given placement_seed.
std::vector<Node> generate_field(const FieldConfig& config);

std::unordered_map<int, NodeClass> classify_nodes(const std::vector<Node>& nodes,
                                                  const Jammer& jammer);

// One observation per boundary node, in node-id order, with received power
// drawn through the radio model.
std::vector<BoundaryObservation> observe_boundary(const std::vector<Node>& nodes,
                                                  const Jammer& jammer, std::mt19937_64& rng);

}  // namespace jamloc
