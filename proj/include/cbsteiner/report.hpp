#pragma once

// JSON views of results, tables and oracle answers. Field names are stable.

#include <json.hpp>

#include "cbsteiner/dp.hpp"
#include "cbsteiner/oracle.hpp"
#include "cbsteiner/reductions.hpp"
#include "cbsteiner/result.hpp"

namespace cbsteiner {

using Json = nlohmann::ordered_json;

Json vertex_list_json(std::span<const Vertex> vertices);
Json trace_json(const Trace& trace);
Json result_json(const SteinerResult& result);
Json table_json(const DpTable& table);
Json oracle_json(const VertexOracleResult& result);
Json oracle_json(const OracleResult& result);
Json domination_json(const DominationResult& result);

}  // namespace cbsteiner
