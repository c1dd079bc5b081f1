#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jamloc/config.hpp"
#include "jamloc/csv.hpp"
#include "jamloc/experiment.hpp"

namespace fs = std::filesystem;

namespace {

using namespace jamloc;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::string config_path;
    std::string out_dir = ".";
    bool dump_config = false;

    std::uint64_t seed = 0;
    int trials = 0;
    int nodes = 0;
    double radius = 0.0;
    std::string region;
    double sigma = 0.0;
    std::string gjl_mode;
    double min_angle = 0.0;

    CLI::Option* seed_opt = nullptr;
    CLI::Option* trials_opt = nullptr;
    CLI::Option* nodes_opt = nullptr;
    CLI::Option* radius_opt = nullptr;
    CLI::Option* region_opt = nullptr;
    CLI::Option* sigma_opt = nullptr;
    CLI::Option* mode_opt = nullptr;
    CLI::Option* angle_opt = nullptr;
};

void add_common_flags(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--config", o.config_path, "JSON scenario config file");
    sub->add_option("--out", o.out_dir, "output directory")->capture_default_str();
    o.seed_opt = sub->add_option("--seed", o.seed, "master seed");
    o.trials_opt = sub->add_option("--trials", o.trials, "Monte Carlo trials");
    o.nodes_opt = sub->add_option("--nodes", o.nodes, "sensor node count");
    o.radius_opt = sub->add_option("--radius", o.radius, "jamming radius in meters");
    o.region_opt = sub->add_option("--region", o.region, "jammer placement region")
                       ->check(CLI::IsMember({"center", "edge", "corner"}));
    o.sigma_opt = sub->add_option("--sigma", o.sigma, "shadowing sigma in dB");
    o.mode_opt = sub->add_option("--gjl-mode", o.gjl_mode, "GJL compensation mode")
                     ->check(CLI::IsMember({"paper", "geometric"}));
    o.angle_opt = sub->add_option("--min-angle", o.min_angle,
                                  "minimum angle between the two chords, degrees");
    sub->add_flag("--dump-config", o.dump_config,
                  "print the effective config as JSON and exit");
}

ScenarioConfig effective_config(const CommonOpts& o) {
    ScenarioConfig config =
        o.config_path.empty() ? ScenarioConfig{} : load_config_file(o.config_path);
    if (o.seed_opt->count()) config.master_seed = o.seed;
    if (o.trials_opt->count()) config.trials = o.trials;
    if (o.nodes_opt->count()) config.field.node_count = o.nodes;
    if (o.radius_opt->count()) config.jammer_radius_m = o.radius;
    if (o.region_opt->count())
        config.placement.policy = placement_policy_from_string(o.region);
    if (o.sigma_opt->count()) config.radio.shadowing_sigma_db = o.sigma;
    if (o.mode_opt->count()) config.gjl_mode = compensation_mode_from_string(o.gjl_mode);
    if (o.angle_opt->count()) config.min_angle_deg = o.min_angle;
    config.validate();
    return config;
}

fs::path ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
    return {dir};
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    writer(out);
    out.flush();
    if (!out) throw IoError("write to " + path.string() + " failed");
}

bool dump_if_requested(const CommonOpts& o, const ScenarioConfig& config) {
    if (!o.dump_config) return false;
    std::cout << config_to_json(config).dump(2) << "\n";
    return true;
}

int cmd_simulate(const CommonOpts& o) {
    const ScenarioConfig config = effective_config(o);
    if (dump_if_requested(o, config)) return 0;

    const TrialDetail detail = run_trial_detailed(config, 0);
    const fs::path dir = ensure_out_dir(o.out_dir);

    write_file(dir / "nodes.csv", [&](std::ostream& out) {
        write_nodes_csv(out, detail.nodes, detail.classes, detail.observations);
    });
    write_file(dir / "estimate.csv", [&](std::ostream& out) {
        write_estimates_csv(out, detail.record.outcomes);
    });
    const bool gjl_enabled =
        std::find(config.methods.begin(), config.methods.end(), Method::GJL) !=
        config.methods.end();
    if (gjl_enabled) {
        std::optional<GjlDiagnostics> diagnostics;
        for (const auto& estimate : detail.estimates) {
            if (estimate.method == Method::GJL && estimate.diagnostics)
                diagnostics = estimate.diagnostics;
        }
        write_file(dir / "diagnostics.csv", [&](std::ostream& out) {
            write_diagnostics_csv(out, diagnostics);
        });
    }

    const auto& truth = detail.record.jammer_truth;
    std::cout << "jammer truth: (" << fixed6(truth.x) << ", " << fixed6(truth.y) << ")\n";
    std::cout << "boundary nodes: " << detail.record.boundary_count << "\n";
    for (const auto& outcome : detail.record.outcomes) {
        std::cout << to_string(outcome.method);
        if (outcome.status == TrialStatus::Failure) {
            std::cout << ": failure (no boundary nodes)\n";
            continue;
        }
        std::cout << ": estimate (" << fixed6(outcome.estimate.x) << ", "
                  << fixed6(outcome.estimate.y) << ") error " << fixed6(outcome.error_m);
        if (outcome.status == TrialStatus::Fallback) std::cout << " [fallback]";
        std::cout << "\n";
    }
    return 0;
}

int cmd_sweep(const CommonOpts& o, const std::string& axis_name,
              const std::vector<std::string>& values) {
    const ScenarioConfig config = effective_config(o);
    if (dump_if_requested(o, config)) return 0;
    if (values.empty()) throw std::invalid_argument("sweep requires --values");

    const SweepAxis axis = sweep_axis_from_string(axis_name);
    const std::vector<SweepRow> rows = sweep(config, axis, values);

    const fs::path dir = ensure_out_dir(o.out_dir);
    write_file(dir / "results.csv",
               [&](std::ostream& out) { write_sweep_csv(out, rows); });

    for (const auto& row : rows) {
        for (const auto& s : row.summaries) {
            std::cout << row.axis << "=" << row.value << " " << to_string(s.method);
            if (s.mode != "-") std::cout << "(" << s.mode << ")";
            if (s.estimate_count() > 0) {
                std::cout << " mean " << fixed6(s.mean_error) << " median "
                          << fixed6(s.median_error);
            } else {
                std::cout << " no estimates";
            }
            std::cout << " failures " << s.failure_count << " fallbacks " << s.fallback_count
                      << "\n";
        }
    }
    return 0;
}

int cmd_compare(const CommonOpts& o) {
    const ScenarioConfig base = effective_config(o);
    if (dump_if_requested(o, base)) return 0;

    ScenarioConfig geometric = base;
    geometric.methods = {Method::CL, Method::CJ, Method::GJL};
    geometric.gjl_mode = CompensationMode::Geometric;
    ExperimentResult geometric_result = run_experiment(geometric);

    ScenarioConfig paper = base;
    paper.methods = {Method::GJL};
    paper.gjl_mode = CompensationMode::Paper;
    ExperimentResult paper_result = run_experiment(paper);

    std::vector<MethodSummary> summaries = std::move(geometric_result.summaries);
    summaries.push_back(std::move(paper_result.summaries.front()));

    const fs::path dir = ensure_out_dir(o.out_dir);
    write_file(dir / "compare.csv",
               [&](std::ostream& out) { write_summary_csv(out, summaries); });

    std::cout << "method,mode,trials,failures,fallbacks,mean_error,std_error,median_error\n";
    for (const auto& s : summaries) {
        std::cout << to_string(s.method) << ',' << s.mode << ',' << s.trial_count << ','
                  << s.failure_count << ',' << s.fallback_count << ',';
        if (s.estimate_count() > 0)
            std::cout << fixed6(s.mean_error) << ',' << fixed6(s.std_error) << ','
                      << fixed6(s.median_error);
        else
            std::cout << ",,";
        std::cout << "\n";
    }

    const MethodSummary& cl = summaries[0];
    const MethodSummary& gjl_geometric = summaries[2];
    const MethodSummary& gjl_paper = summaries[3];
    if (cl.estimate_count() > 0 && cl.mean_error > 0.0) {
        const double ratio_geometric = gjl_geometric.mean_error / cl.mean_error;
        const double ratio_paper = gjl_paper.mean_error / cl.mean_error;
        std::cout << "GJL(geometric)/CL mean error ratio: " << fixed6(ratio_geometric)
                  << " (<= 0.30 target: " << (ratio_geometric <= 0.30 ? "met" : "not met")
                  << ")\n";
        std::cout << "GJL(paper)/CL mean error ratio: " << fixed6(ratio_paper) << "\n";
    } else {
        std::cout << "GJL/CL mean error ratio: n/a (CL produced no estimates)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jammer localization simulator: CL, CJ and GJL over a jammed sensor field"};
    app.require_subcommand(1);

    CLI::App* simulate = app.add_subcommand(
        "simulate", "run one trial and export nodes.csv, estimate.csv, diagnostics.csv");
    CommonOpts simulate_opts;
    add_common_flags(simulate, simulate_opts);

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "run a Monte Carlo sweep over density, region or radius");
    CommonOpts sweep_opts;
    std::string axis;
    std::vector<std::string> values;
    add_common_flags(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--axis", axis, "sweep axis: density, region or radius");
    sweep_cmd->add_option("--values", values, "comma-separated sweep values")->delimiter(',');

    CLI::App* compare = app.add_subcommand(
        "compare", "run CL, CJ and GJL (both modes) on one scenario and report mean errors");
    CommonOpts compare_opts;
    add_common_flags(compare, compare_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(simulate)) return cmd_simulate(simulate_opts);
        if (app.got_subcommand(sweep_cmd)) {
            if (!sweep_cmd->count("--axis"))
                throw std::invalid_argument("sweep requires --axis");
            return cmd_sweep(sweep_opts, axis, values);
        }
        if (app.got_subcommand(compare)) return cmd_compare(compare_opts);
        throw std::logic_error("no subcommand dispatched");
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
