#pragma once

#include <optional>
#include <vector>

#include "jamloc/geometry.hpp"
#include "jamloc/network.hpp"

namespace jamloc {

enum class Method { CL, CJ, GJL };

// How the chord's perpendicular line is offset from the midpoint using the
// power difference of its endpoints (k = 10^((P2 - P1) / 20), P2 >= P1):
//   Paper     delta = k * d12 / (2 + k)   the original GJL compensation
//   Geometric delta = (k - 1) * d12 / (k + 1)   consistent with the chord
//             geometry when the chord passes near the center; equal powers
//             give zero offset
enum class CompensationMode { Paper, Geometric };

const char* to_string(Method m);
const char* to_string(CompensationMode mode);

// One compensated chord: endpoints ordered so near_node has the higher
// received power (it is closer to the jammer), the power ratio k, the offset
// delta_l, and the resulting perpendicular line through the point at fraction
// foot_t along near_node -> far_node.
struct ChordCompensation {
    BoundaryObservation far_node;   // lower power
    BoundaryObservation near_node;  // higher power
    double chord_length_m = 0.0;
    double k = 1.0;
    double delta_l_m = 0.0;
    double foot_t = 0.5;
    Line compensated_line;
};

struct GjlDiagnostics {
    ChordCompensation chord1;
    ChordCompensation chord2;
};

struct LocalizationEstimate {
    Point2D position;
    Method method = Method::CL;
    bool used_fallback = false;
    std::optional<GjlDiagnostics> diagnostics;
};

struct Chord {
    BoundaryObservation a;  // smaller node id
    BoundaryObservation b;
    double length_m = 0.0;
};

struct ChordPair {
    Chord primary;
    Chord secondary;
};

// Arithmetic mean of the boundary positions.
LocalizationEstimate centroid_localize(const std::vector<BoundaryObservation>& observations);

// Center of the minimum enclosing circle of the boundary positions.
LocalizationEstimate cj_localize(const std::vector<BoundaryObservation>& observations);

// primary = the longest pairwise chord; secondary = the longest remaining
// chord whose direction differs from the primary by at least min_angle_deg.
// Length ties break toward the smaller (node_id, node_id) pair.
ChordPair select_chords(const std::vector<BoundaryObservation>& observations,
                        double min_angle_deg);

// Offset of the compensated perpendicular from the chord, by mode. Powers
// must be ordered so p2_dbm >= p1_dbm.
double compensation_delta(double p1_dbm, double p2_dbm, double d12_m, CompensationMode mode);

// Full pipeline: select two chords, offset each chord's perpendicular toward
// its higher-power endpoint, and intersect the two lines. Throws
// InsufficientBoundaryNodes, NoTransverseChord, or NearParallelLines when the
// construction is impossible; callers fall back to cj_localize.
LocalizationEstimate gjl_localize(const std::vector<BoundaryObservation>& observations,
                                  CompensationMode mode, double min_angle_deg);

// Euclidean distance between the estimate and the true jammer position.
double localization_error(const LocalizationEstimate& estimate, const Point2D& truth);

}  // namespace jamloc
