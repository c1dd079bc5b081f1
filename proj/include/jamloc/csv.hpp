#pragma once

#include <ostream>
#include <string>

#include "jamloc/experiment.hpp"

namespace jamloc {

// All real-valued CSV fields use fixed formatting with six fractional
// digits; integer fields print as integers; files end with a newline and
// always carry a header row. Failed trials leave their value fields empty.

std::string fixed6(double v);

// node_id,x,y,class,received_power  (power only for boundary nodes)
void write_nodes_csv(std::ostream& out, const std::vector<Node>& nodes,
                     const std::unordered_map<int, NodeClass>& classes,
                     const std::vector<BoundaryObservation>& observations);

// method,x,y,error,fallback
void write_estimates_csv(std::ostream& out, const std::vector<MethodOutcome>& outcomes);

// chord,node1_id,node1_x,node1_y,node1_power,node2_id,node2_x,node2_y,node2_power,d12,k,delta_l,t
void write_diagnostics_csv(std::ostream& out, const std::optional<GjlDiagnostics>& diagnostics);

// trial,jammer_x,jammer_y,boundary_count,method,status,x,y,error
void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);

// axis,value,method,mode,trials,failures,fallbacks,mean_error,std_error,median_error
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// method,mode,trials,failures,fallbacks,mean_error,std_error,median_error
void write_summary_csv(std::ostream& out, const std::vector<MethodSummary>& summaries);

}  // namespace jamloc
