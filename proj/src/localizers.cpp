#include "jamloc/localizers.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace jamloc {

const char* to_string(Method m) {
    switch (m) {
        case Method::CL: return "cl";
        case Method::CJ: return "cj";
        case Method::GJL: return "gjl";
    }
    return "?";
}

const char* to_string(CompensationMode mode) {
    switch (mode) {
        case CompensationMode::Paper: return "paper";
        case CompensationMode::Geometric: return "geometric";
    }
    return "?";
}

LocalizationEstimate centroid_localize(const std::vector<BoundaryObservation>& observations) {
    if (observations.empty()) throw NoBoundaryNodes();
    double sx = 0.0;
    double sy = 0.0;
    for (const auto& obs : observations) {
        sx += obs.position.x;
        sy += obs.position.y;
    }
    const double n = static_cast<double>(observations.size());
    return {{sx / n, sy / n}, Method::CL, false, std::nullopt};
}

LocalizationEstimate cj_localize(const std::vector<BoundaryObservation>& observations) {
    if (observations.empty()) throw NoBoundaryNodes();
    std::vector<Point2D> positions;
    positions.reserve(observations.size());
    for (const auto& obs : observations) positions.push_back(obs.position);
    const Circle circle = min_enclosing_circle(positions);
    return {circle.center, Method::CJ, false, std::nullopt};
}

namespace {

// Undirected angle between two chord directions, in [0, 90] degrees.
double direction_angle_deg(const Point2D& u, const Point2D& v) {
    const double dot = std::abs(u.x * v.x + u.y * v.y);
    const double crs = std::abs(u.x * v.y - u.y * v.x);
    return std::atan2(crs, dot) * (180.0 / 3.14159265358979323846);
}

}  // namespace

ChordPair select_chords(const std::vector<BoundaryObservation>& observations,
                        double min_angle_deg) {
    // Distinct positions, not distinct ids, decide whether a triangle of
    // chords exists at all.
    std::vector<Point2D> positions;
    positions.reserve(observations.size());
    for (const auto& obs : observations) positions.push_back(obs.position);
    std::sort(positions.begin(), positions.end(),
              [](const Point2D& p, const Point2D& q) {
                  return p.x < q.x || (p.x == q.x && p.y < q.y);
              });
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    if (positions.size() < 3) throw InsufficientBoundaryNodes();

    // Scan pairs in (node_id, node_id) order so that length ties resolve to
    // the lexicographically smallest pair.
    std::vector<std::size_t> order(observations.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return observations[i].node_id < observations[j].node_id;
    });

    const std::size_t n = order.size();
    double best_len = -1.0;
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = observations[order[i]];
            const auto& b = observations[order[j]];
            if (a.position == b.position) continue;
            const double len = distance(a.position, b.position);
            if (len > best_len) {
                best_len = len;
                best_i = i;
                best_j = j;
            }
        }
    }

    const auto& p1 = observations[order[best_i]];
    const auto& p2 = observations[order[best_j]];
    const Point2D primary_dir{p2.position.x - p1.position.x, p2.position.y - p1.position.y};

    double second_len = -1.0;
    std::size_t second_i = 0;
    std::size_t second_j = 0;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (i == best_i && j == best_j) continue;
            const auto& a = observations[order[i]];
            const auto& b = observations[order[j]];
            if (a.position == b.position) continue;
            const Point2D dir{b.position.x - a.position.x, b.position.y - a.position.y};
            if (direction_angle_deg(primary_dir, dir) < min_angle_deg) continue;
            const double len = distance(a.position, b.position);
            if (len > second_len) {
                second_len = len;
                second_i = i;
                second_j = j;
                found = true;
            }
        }
    }
    if (!found) throw NoTransverseChord();

    const auto& s1 = observations[order[second_i]];
    const auto& s2 = observations[order[second_j]];
    return {{p1, p2, best_len}, {s1, s2, second_len}};
}

namespace {

struct CompensationTerms {
    double k = 1.0;
    double delta = 0.0;
};

CompensationTerms compensation_terms(double p1_dbm, double p2_dbm, double d12_m,
                                     CompensationMode mode) {
    // The exponent constant folds in a free-space path-loss exponent of 2,
    // independent of the simulated radio's exponent.
    const double k = std::pow(10.0, (p2_dbm - p1_dbm) / 20.0);
    const double delta = mode == CompensationMode::Paper ? k * d12_m / (2.0 + k)
                                                         : (k - 1.0) * d12_m / (k + 1.0);
    return {k, delta};
}

ChordCompensation compensate_chord(const Chord& chord, CompensationMode mode) {
    BoundaryObservation far = chord.a;
    BoundaryObservation near = chord.b;
    // near_node = higher power; the smaller node id wins an exact tie.
    if (near.received_power_dbm < far.received_power_dbm ||
        (near.received_power_dbm == far.received_power_dbm && far.node_id < near.node_id)) {
        std::swap(far, near);
    }

    const double d12 = chord.length_m;
    const auto [k, delta] = compensation_terms(far.received_power_dbm, near.received_power_dbm,
                                               d12, mode);

    // The perpendicular's foot sits (d12 - delta) / 2 from the near node:
    // the along-chord distances l_near + l_far = d12 and l_far - l_near = delta.
    const double t = (d12 - delta) / (2.0 * d12);
    const Segment toward_far(near.position, far.position);
    const Line line = perpendicular_at(toward_far, t);
    return {far, near, d12, k, delta, t, line};
}

}  // namespace

double compensation_delta(double p1_dbm, double p2_dbm, double d12_m, CompensationMode mode) {
    if (!(d12_m > 0.0)) throw DegenerateSegment();
    return compensation_terms(p1_dbm, p2_dbm, d12_m, mode).delta;
}

LocalizationEstimate gjl_localize(const std::vector<BoundaryObservation>& observations,
                                  CompensationMode mode, double min_angle_deg) {
    const ChordPair chords = select_chords(observations, min_angle_deg);
    const ChordCompensation c1 = compensate_chord(chords.primary, mode);
    const ChordCompensation c2 = compensate_chord(chords.secondary, mode);
    const Point2D position = line_intersection(c1.compensated_line, c2.compensated_line);
    return {position, Method::GJL, false, GjlDiagnostics{c1, c2}};
}

double localization_error(const LocalizationEstimate& estimate, const Point2D& truth) {
    return distance(estimate.position, truth);
}

}  // namespace jamloc
