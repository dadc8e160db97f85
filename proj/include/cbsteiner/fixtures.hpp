#pragma once

// Hand-traced reference instances and their replays. Each replay reruns the
// solver and the oracle and lists every disagreement with the recorded trace.

#include <string>
#include <vector>

#include "cbsteiner/graph.hpp"
#include "cbsteiner/report.hpp"

namespace cbsteiner {

// m = 4: y1=(1,2) y2=(1,3) y3=(2,4) y4=(3,4); R = X.
ConvexBipartiteGraph all_x_fixture();

// m = 13, ten intervals; R ⊂ X of eight positions.
ConvexBipartiteGraph subset_x_fixture();
std::vector<int> subset_x_fixture_terminals();

// m = 8, five intervals; R = Y.
ConvexBipartiteGraph all_y_fixture();

// m = 7, six intervals; R = {y1, y3, y5}.
ConvexBipartiteGraph subset_y_fixture();
std::vector<int> subset_y_fixture_terminals();

GeneralGraph triangle_fixture();

struct TraceReplay {
    std::string name;
    std::vector<std::string> diffs;
    Json report;

    bool ok() const noexcept { return diffs.empty(); }
};

TraceReplay replay_all_x_trace();
TraceReplay replay_subset_x_trace();
TraceReplay replay_all_y_trace();
TraceReplay replay_dp_trace();
TraceReplay replay_vc_trace();

std::vector<TraceReplay> replay_reference_traces();

}  // namespace cbsteiner
