#include "cbsteiner/report.hpp"

namespace cbsteiner {

namespace {

Json step_json(const AllXStep& s) { return {{"z", s.z}, {"w", s.w}, {"reach", s.reach}}; }

Json step_json(const SubsetXStep& s) {
    return {{"iteration", s.iteration},   {"z", s.z},
            {"zj", s.zj},                 {"next_terminal", s.next_terminal},
            {"p", s.p_start},             {"q", s.q_start},
            {"s1", vertex_list_json(s.s1)}, {"s2", vertex_list_json(s.s2)},
            {"took", s.took_s1 ? "s1" : "s2"}, {"added", vertex_list_json(s.added)}};
}

Json step_json(const AllYStep& s) {
    return {{"iteration", s.iteration}, {"y", s.y},          {"r", s.r},
            {"action", to_string(s.action)}, {"added", s.added}, {"marked", s.newly_marked}};
}

Json step_json(const FrontierStep& s) { return {{"position", s.position}, {"bought", s.bought}}; }

Json step_json(const DpStep& s) {
    return {{"y", s.y}, {"i", s.i}, {"j", s.j}, {"kind", s.kind}, {"added", vertex_list_json(s.added)}};
}

}  // namespace

Json vertex_list_json(std::span<const Vertex> vertices) {
    Json out = Json::array();
    for (const auto& v : vertices) out.push_back(to_string(v));
    return out;
}

Json trace_json(const Trace& trace) {
    return std::visit(
        [](const auto& steps) -> Json {
            if constexpr (std::is_same_v<std::decay_t<decltype(steps)>, std::monostate>) {
                return Json::array();
            } else {
                Json out = Json::array();
                for (const auto& s : steps) out.push_back(step_json(s));
                return out;
            }
        },
        trace);
}

Json result_json(const SteinerResult& result) {
    Json tree = Json::array();
    for (const auto& [a, b] : result.tree) tree.push_back({to_string(a), to_string(b)});
    return {{"terminal_case", to_string(result.terminal_case)},
            {"method", result.method},
            {"size", result.size()},
            {"steiner_set", vertex_list_json(result.steiner_set)},
            {"tree", tree},
            {"trace", trace_json(result.trace)}};
}

Json table_json(const DpTable& table) {
    Json entries = Json::array();
    for (const auto& e : table.entries) {
        Json row = {{"y", e.y}, {"i", e.i}, {"j", e.j}, {"case", to_string(e.entry_case)}};
        row["f"] = e.f ? Json(*e.f) : Json(nullptr);
        row["branch"] = e.branch == ' ' ? Json(nullptr) : Json(std::string(1, e.branch));
        row["pred"] = e.pred_i ? Json::array({e.pred_i, e.pred_j}) : Json(nullptr);
        entries.push_back(row);
    }
    Json cells = Json::array();
    for (const auto& [key, cell] : table.cells) {
        cells.push_back({{"i", key.first},
                         {"j", key.second},
                         {"F", cell.value ? Json(*cell.value) : Json(nullptr)},
                         {"argmin", cell.argmin_y}});
    }
    return {{"window_offset", table.window_offset},
            {"window_length", table.window_length},
            {"class", to_string(table.instance_class)},
            {"last_terminal", table.last_terminal},
            {"final_value", table.final_value ? Json(*table.final_value) : Json(nullptr)},
            {"entries", entries},
            {"cells", cells},
            {"predecessor_reads", table.predecessor_reads},
            {"reads_were_earlier_rows", table.reads_were_earlier_rows},
            {"cell_updates", table.cell_updates}};
}

Json oracle_json(const VertexOracleResult& result) {
    return {{"optimum", result.optimum}, {"witness", vertex_list_json(result.witness)}, {"explored", result.explored}};
}

Json oracle_json(const OracleResult& result) {
    return {{"optimum", result.optimum}, {"witness", result.witness}, {"explored", result.explored}};
}

Json domination_json(const DominationResult& result) {
    return {{"d1", vertex_list_json(result.d1)},
            {"d2", vertex_list_json(result.d2)},
            {"d", vertex_list_json(result.d)},
            {"size", result.d.size()},
            {"valid", result.valid},
            {"patched", result.patched}};
}

}  // namespace cbsteiner
