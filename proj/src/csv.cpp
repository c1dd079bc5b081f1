#include "jamloc/csv.hpp"

#include <cstdio>
#include <unordered_map>

namespace jamloc {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void write_nodes_csv(std::ostream& out, const std::vector<Node>& nodes,
                     const std::unordered_map<int, NodeClass>& classes,
                     const std::vector<BoundaryObservation>& observations) {
    std::unordered_map<int, double> power;
    power.reserve(observations.size());
    for (const auto& obs : observations) power.emplace(obs.node_id, obs.received_power_dbm);

    out << "node_id,x,y,class,received_power\n";
    for (const auto& node : nodes) {
        const NodeClass c = classes.at(node.id);
        out << node.id << ',' << fixed6(node.position.x) << ',' << fixed6(node.position.y)
            << ',' << to_string(c) << ',';
        if (const auto it = power.find(node.id); it != power.end()) out << fixed6(it->second);
        out << '\n';
    }
}

void write_estimates_csv(std::ostream& out, const std::vector<MethodOutcome>& outcomes) {
    out << "method,x,y,error,fallback\n";
    for (const auto& outcome : outcomes) {
        out << to_string(outcome.method) << ',';
        if (outcome.status == TrialStatus::Failure) {
            out << ",,,\n";
            continue;
        }
        out << fixed6(outcome.estimate.x) << ',' << fixed6(outcome.estimate.y) << ','
            << fixed6(outcome.error_m) << ','
            << (outcome.status == TrialStatus::Fallback ? 1 : 0) << '\n';
    }
}

namespace {

void write_chord_row(std::ostream& out, int index, const ChordCompensation& chord) {
    const auto& n1 = chord.far_node;
    const auto& n2 = chord.near_node;
    out << index << ',' << n1.node_id << ',' << fixed6(n1.position.x) << ','
        << fixed6(n1.position.y) << ',' << fixed6(n1.received_power_dbm) << ',' << n2.node_id
        << ',' << fixed6(n2.position.x) << ',' << fixed6(n2.position.y) << ','
        << fixed6(n2.received_power_dbm) << ',' << fixed6(chord.chord_length_m) << ','
        << fixed6(chord.k) << ',' << fixed6(chord.delta_l_m) << ',' << fixed6(chord.foot_t)
        << '\n';
}

}  // namespace

void write_diagnostics_csv(std::ostream& out, const std::optional<GjlDiagnostics>& diagnostics) {
    out << "chord,node1_id,node1_x,node1_y,node1_power,"
           "node2_id,node2_x,node2_y,node2_power,d12,k,delta_l,t\n";
    if (!diagnostics) return;
    write_chord_row(out, 1, diagnostics->chord1);
    write_chord_row(out, 2, diagnostics->chord2);
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    out << "trial,jammer_x,jammer_y,boundary_count,method,status,x,y,error\n";
    for (const auto& record : records) {
        for (const auto& outcome : record.outcomes) {
            out << record.trial_index << ',' << fixed6(record.jammer_truth.x) << ','
                << fixed6(record.jammer_truth.y) << ',' << record.boundary_count << ','
                << to_string(outcome.method) << ',' << to_string(outcome.status) << ',';
            if (outcome.status == TrialStatus::Failure) {
                out << ",,\n";
                continue;
            }
            out << fixed6(outcome.estimate.x) << ',' << fixed6(outcome.estimate.y) << ','
                << fixed6(outcome.error_m) << '\n';
        }
    }
}

namespace {

void write_summary_fields(std::ostream& out, const MethodSummary& s) {
    out << to_string(s.method) << ',' << s.mode << ',' << s.trial_count << ','
        << s.failure_count << ',' << s.fallback_count << ',';
    if (s.estimate_count() > 0) {
        out << fixed6(s.mean_error) << ',' << fixed6(s.std_error) << ','
            << fixed6(s.median_error);
    } else {
        out << ",,";
    }
    out << '\n';
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "axis,value,method,mode,trials,failures,fallbacks,"
           "mean_error,std_error,median_error\n";
    for (const auto& row : rows) {
        for (const auto& summary : row.summaries) {
            out << row.axis << ',' << row.value << ',';
            write_summary_fields(out, summary);
        }
    }
}

void write_summary_csv(std::ostream& out, const std::vector<MethodSummary>& summaries) {
    out << "method,mode,trials,failures,fallbacks,mean_error,std_error,median_error\n";
    for (const auto& summary : summaries) write_summary_fields(out, summary);
}

}  // namespace jamloc
