#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jamloc/localizers.hpp"
#include "jamloc/network.hpp"

namespace jamloc {

enum class PlacementPolicy { Center, Edge, Corner, Fixed };

// Where the ground-truth jammer is drawn each trial. Center is a 20x20 m
// square around the field center, Edge a 10 m deep band along the left side,
// Corner a 20x20 m square at the origin; regions are clamped to the field.
struct JammerPlacement {
    PlacementPolicy policy = PlacementPolicy::Center;
    Point2D fixed_position{50.0, 50.0};  // used only by Fixed
};

const char* to_string(PlacementPolicy p);

struct ScenarioConfig {
    FieldConfig field;  // placement_seed is ignored here; trials derive their own
    RadioParams radio;
    double jammer_radius_m = 30.0;
    JammerPlacement placement;
    std::vector<Method> methods{Method::CL, Method::CJ, Method::GJL};
    CompensationMode gjl_mode = CompensationMode::Paper;
    double min_angle_deg = 15.0;
    int trials = 500;
    std::uint64_t master_seed = 1;

    void validate() const;  // throws std::invalid_argument
};

enum class TrialStatus { Ok, Fallback, Failure };

const char* to_string(TrialStatus s);

struct MethodOutcome {
    Method method = Method::CL;
    TrialStatus status = TrialStatus::Failure;
    Point2D estimate;       // meaningless on Failure
    double error_m = 0.0;   // meaningless on Failure
};

struct TrialRecord {
    int trial_index = 0;
    Point2D jammer_truth;
    int boundary_count = 0;
    std::vector<MethodOutcome> outcomes;  // one per enabled method, in config order
};

struct MethodSummary {
    Method method = Method::CL;
    std::string mode = "-";  // compensation mode for GJL rows, "-" otherwise
    int trial_count = 0;
    int failure_count = 0;
    int fallback_count = 0;
    // Over trials that produced an estimate (fallbacks included); zero when none did.
    double mean_error = 0.0;
    double std_error = 0.0;
    double median_error = 0.0;
    int estimate_count() const { return trial_count - failure_count; }
};

struct ExperimentResult {
    std::vector<TrialRecord> records;       // ordered by trial_index
    std::vector<MethodSummary> summaries;   // one per enabled method
};

// Everything one trial produced, for snapshot export.
struct TrialDetail {
    TrialRecord record;
    std::vector<Node> nodes;
    std::unordered_map<int, NodeClass> classes;
    Jammer jammer;
    std::vector<BoundaryObservation> observations;
    std::vector<LocalizationEstimate> estimates;  // successful outcomes only, config order
};

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

Point2D place_jammer(const JammerPlacement& placement, const FieldConfig& field,
                     std::mt19937_64& rng);

// gjl_localize with a cj_localize fallback when chord selection or the line
// intersection fails; total for any non-empty observation list.
LocalizationEstimate gjl_or_fallback(const std::vector<BoundaryObservation>& observations,
                                     CompensationMode mode, double min_angle_deg);

TrialDetail run_trial_detailed(const ScenarioConfig& config, int trial_index);
TrialRecord run_trial(const ScenarioConfig& config, int trial_index);

// Runs all trials (in parallel when num_threads != 1; 0 picks a default) and
// aggregates. Records and summaries are identical regardless of threading.
ExperimentResult run_experiment(const ScenarioConfig& config, int num_threads = 0);

enum class SweepAxis { Density, Region, Radius };

const char* to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(const std::string& name);

struct SweepRow {
    std::string axis;
    std::string value;
    std::vector<MethodSummary> summaries;
};

// One run_experiment per value with everything else held fixed. Density
// values are node counts, radius values are meters, region values are
// placement policy names.
std::vector<SweepRow> sweep(const ScenarioConfig& base, SweepAxis axis,
                            const std::vector<std::string>& values, int num_threads = 0);

}  // namespace jamloc
