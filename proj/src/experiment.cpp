#include "jamloc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "jamloc/random.hpp"

namespace jamloc {

const char* to_string(PlacementPolicy p) {
    switch (p) {
        case PlacementPolicy::Center: return "center";
        case PlacementPolicy::Edge: return "edge";
        case PlacementPolicy::Corner: return "corner";
        case PlacementPolicy::Fixed: return "fixed";
    }
    return "?";
}

const char* to_string(TrialStatus s) {
    switch (s) {
        case TrialStatus::Ok: return "ok";
        case TrialStatus::Fallback: return "fallback";
        case TrialStatus::Failure: return "failure";
    }
    return "?";
}

const char* to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Density: return "density";
        case SweepAxis::Region: return "region";
        case SweepAxis::Radius: return "radius";
    }
    return "?";
}

SweepAxis sweep_axis_from_string(const std::string& name) {
    if (name == "density") return SweepAxis::Density;
    if (name == "region") return SweepAxis::Region;
    if (name == "radius") return SweepAxis::Radius;
    throw std::invalid_argument("unknown sweep axis: " + name);
}

void ScenarioConfig::validate() const {
    if (!(field.width_m > 0.0) || !(field.height_m > 0.0))
        throw std::invalid_argument("field dimensions must be positive");
    if (field.node_count < 1) throw std::invalid_argument("node_count must be >= 1");
    if (!(radio.path_loss_exponent > 0.0))
        throw std::invalid_argument("path_loss_exponent must be positive");
    if (radio.shadowing_sigma_db < 0.0)
        throw std::invalid_argument("shadowing_sigma_db must be >= 0");
    if (!(radio.node_comm_range_m > 0.0))
        throw std::invalid_argument("node_comm_range_m must be positive");
    if (!(jammer_radius_m > radio.node_comm_range_m))
        throw std::invalid_argument("jammer_radius_m must exceed node_comm_range_m");
    if (!(min_angle_deg >= 0.0) || !(min_angle_deg <= 90.0))
        throw std::invalid_argument("min_angle_deg must lie in [0, 90]");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (placement.policy == PlacementPolicy::Fixed) {
        const auto& p = placement.fixed_position;
        if (p.x < 0.0 || p.x > field.width_m || p.y < 0.0 || p.y > field.height_m)
            throw std::invalid_argument("fixed jammer position must lie inside the field");
    }
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    return mix_seed(master_seed, trial_index);
}

Point2D place_jammer(const JammerPlacement& placement, const FieldConfig& field,
                     std::mt19937_64& rng) {
    const double w = field.width_m;
    const double h = field.height_m;
    switch (placement.policy) {
        case PlacementPolicy::Center: {
            const double hw = std::min(10.0, 0.5 * w);
            const double hh = std::min(10.0, 0.5 * h);
            const double x = uniform_range(rng, 0.5 * w - hw, 0.5 * w + hw);
            const double y = uniform_range(rng, 0.5 * h - hh, 0.5 * h + hh);
            return {x, y};
        }
        case PlacementPolicy::Edge: {
            const double band = std::min(10.0, w);
            const double x = uniform_range(rng, 0.0, band);
            const double y = uniform_range(rng, 0.0, h);
            return {x, y};
        }
        case PlacementPolicy::Corner: {
            const double sx = std::min(20.0, w);
            const double sy = std::min(20.0, h);
            const double x = uniform_range(rng, 0.0, sx);
            const double y = uniform_range(rng, 0.0, sy);
            return {x, y};
        }
        case PlacementPolicy::Fixed: return placement.fixed_position;
    }
    throw std::logic_error("unknown placement policy");
}

LocalizationEstimate gjl_or_fallback(const std::vector<BoundaryObservation>& observations,
                                     CompensationMode mode, double min_angle_deg) {
    try {
        return gjl_localize(observations, mode, min_angle_deg);
    } catch (const InsufficientBoundaryNodes&) {
    } catch (const NoTransverseChord&) {
    } catch (const NearParallelLines&) {
    }
    LocalizationEstimate estimate = cj_localize(observations);
    estimate.method = Method::GJL;
    estimate.used_fallback = true;
    return estimate;
}

namespace {

// Per-trial sub-streams, so field layout, jammer draw and shadowing noise
// stay decoupled.
enum : std::uint64_t { kFieldStream = 0, kJammerStream = 1, kShadowStream = 2 };

MethodOutcome failure_outcome(Method method) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {method, TrialStatus::Failure, {nan, nan}, nan};
}

}  // namespace

TrialDetail run_trial_detailed(const ScenarioConfig& config, int trial_index) {
    const std::uint64_t trial_seed =
        derive_trial_seed(config.master_seed, static_cast<std::uint64_t>(trial_index));

    FieldConfig field = config.field;
    field.placement_seed = mix_seed(trial_seed, kFieldStream);

    TrialDetail detail;
    detail.nodes = generate_field(field);

    std::mt19937_64 jammer_rng(mix_seed(trial_seed, kJammerStream));
    const Point2D truth = place_jammer(config.placement, config.field, jammer_rng);
    detail.jammer = {truth, config.jammer_radius_m, config.radio};

    detail.classes = classify_nodes(detail.nodes, detail.jammer);
    std::mt19937_64 shadow_rng(mix_seed(trial_seed, kShadowStream));
    detail.observations = observe_boundary(detail.nodes, detail.jammer, shadow_rng);

    TrialRecord& record = detail.record;
    record.trial_index = trial_index;
    record.jammer_truth = truth;
    record.boundary_count = static_cast<int>(detail.observations.size());

    for (const Method method : config.methods) {
        if (detail.observations.empty()) {
            record.outcomes.push_back(failure_outcome(method));
            continue;
        }
        LocalizationEstimate estimate{};
        switch (method) {
            case Method::CL: estimate = centroid_localize(detail.observations); break;
            case Method::CJ: estimate = cj_localize(detail.observations); break;
            case Method::GJL:
                estimate = gjl_or_fallback(detail.observations, config.gjl_mode,
                                           config.min_angle_deg);
                break;
        }
        const TrialStatus status =
            estimate.used_fallback ? TrialStatus::Fallback : TrialStatus::Ok;
        record.outcomes.push_back(
            {method, status, estimate.position, localization_error(estimate, truth)});
        detail.estimates.push_back(std::move(estimate));
    }
    return detail;
}

TrialRecord run_trial(const ScenarioConfig& config, int trial_index) {
    return run_trial_detailed(config, trial_index).record;
}

namespace {

std::vector<MethodSummary> summarize(const ScenarioConfig& config,
                                     const std::vector<TrialRecord>& records) {
    std::vector<MethodSummary> summaries;
    for (std::size_t m = 0; m < config.methods.size(); ++m) {
        MethodSummary s;
        s.method = config.methods[m];
        s.mode = s.method == Method::GJL ? to_string(config.gjl_mode) : "-";
        s.trial_count = static_cast<int>(records.size());

        std::vector<double> errors;
        errors.reserve(records.size());
        for (const auto& record : records) {
            const MethodOutcome& outcome = record.outcomes[m];
            if (outcome.status == TrialStatus::Failure) {
                ++s.failure_count;
                continue;
            }
            if (outcome.status == TrialStatus::Fallback) ++s.fallback_count;
            errors.push_back(outcome.error_m);
        }

        if (!errors.empty()) {
            double sum = 0.0;
            for (const double e : errors) sum += e;
            s.mean_error = sum / static_cast<double>(errors.size());
            if (errors.size() > 1) {
                double ss = 0.0;
                for (const double e : errors) ss += (e - s.mean_error) * (e - s.mean_error);
                s.std_error = std::sqrt(ss / static_cast<double>(errors.size() - 1));
            }
            std::sort(errors.begin(), errors.end());
            const std::size_t n = errors.size();
            s.median_error = n % 2 == 1 ? errors[n / 2]
                                        : 0.5 * (errors[n / 2 - 1] + errors[n / 2]);
        }
        summaries.push_back(std::move(s));
    }
    return summaries;
}

}  // namespace

ExperimentResult run_experiment(const ScenarioConfig& config, int num_threads) {
    config.validate();

    const int trials = config.trials;
    if (num_threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        num_threads = static_cast<int>(hw == 0 ? 1 : hw);
    }
    num_threads = std::min(num_threads, trials);

    ExperimentResult result;
    result.records.resize(static_cast<std::size_t>(trials));

    if (num_threads == 1) {
        for (int i = 0; i < trials; ++i) result.records[static_cast<std::size_t>(i)] = run_trial(config, i);
    } else {
        // Each trial is a pure function of (config, index); workers just race
        // for indices and the result is order-independent.
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(num_threads));
        for (int t = 0; t < num_threads; ++t) {
            workers.emplace_back([&] {
                try {
                    for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
                        result.records[static_cast<std::size_t>(i)] = run_trial(config, i);
                    }
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& worker : workers) worker.join();
        if (failure) std::rethrow_exception(failure);
    }

    result.summaries = summarize(config, result.records);
    return result;
}

std::vector<SweepRow> sweep(const ScenarioConfig& base, SweepAxis axis,
                            const std::vector<std::string>& values, int num_threads) {
    if (values.empty()) throw std::invalid_argument("sweep requires at least one value");

    std::vector<SweepRow> rows;
    for (const std::string& value : values) {
        ScenarioConfig config = base;
        switch (axis) {
            case SweepAxis::Density: {
                std::size_t used = 0;
                const int count = std::stoi(value, &used);
                if (used != value.size()) throw std::invalid_argument("bad density value: " + value);
                config.field.node_count = count;
                break;
            }
            case SweepAxis::Radius: {
                std::size_t used = 0;
                const double radius = std::stod(value, &used);
                if (used != value.size()) throw std::invalid_argument("bad radius value: " + value);
                config.jammer_radius_m = radius;
                break;
            }
            case SweepAxis::Region: {
                if (value == "center") config.placement.policy = PlacementPolicy::Center;
                else if (value == "edge") config.placement.policy = PlacementPolicy::Edge;
                else if (value == "corner") config.placement.policy = PlacementPolicy::Corner;
                else throw std::invalid_argument("bad region value: " + value);
                break;
            }
        }
        ExperimentResult result = run_experiment(config, num_threads);
        rows.push_back({to_string(axis), value, std::move(result.summaries)});
    }
    return rows;
}

}  // namespace jamloc
