#pragma once

// Line-oriented text formats, 1-based ids, '#' starts a comment.
//
//   cbg <m> <n>            convex bipartite graph
//   y <id> <l> <r>         one line per Y vertex
//   t x <positions...>     optional X terminals
//   t y <ids...>           optional Y terminals
//
//   ivl <n>                interval family
//   v <id> <left> <right>
//
//   g <n> <m>              general graph
//   e <u> <v>
//   t v <ids...>           optional terminals
//   cat <k>                optional caterpillar sidecar over vertex ids
//   bb <ids...>
//   pd <bb-id> <pendant ids...>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cbsteiner/graph.hpp"

namespace cbsteiner {

struct CbgInstance {
    ConvexBipartiteGraph graph;
    std::vector<Vertex> terminals;  // sorted; empty if the file has none
};

struct GeneralInstance {
    GeneralGraph graph;
    std::vector<int> terminals;
    std::optional<CaterpillarStructure> caterpillar;
};

using ParsedInstance = std::variant<CbgInstance, IntervalGraphModel, GeneralInstance>;

// Throws ParseError with line and column on malformed text, and
// InvalidInput / DisconnectedGraph when a well-formed file describes an
// invalid graph.
ParsedInstance parse_instance(std::string_view text);
CbgInstance parse_cbg(std::string_view text);
IntervalGraphModel parse_ivl(std::string_view text);
GeneralInstance parse_general(std::string_view text);

std::string serialize(const CbgInstance& instance);
std::string serialize(const IntervalGraphModel& intervals);
std::string serialize(const GeneralInstance& instance);
std::string serialize(const ParsedInstance& instance);

std::string canonical_form(std::string_view text);

// FNV-1a 64-bit over the canonical form, 16 lowercase hex digits.
std::string instance_digest(std::string_view canonical);

std::string read_file(const std::string& path);

// "all-x", "all-y", "all", or a comma list such as "x1,x3,y4".
std::vector<Vertex> parse_terminal_list(const ConvexBipartiteGraph& graph, std::string_view spec);
// Comma list of 1-based ids, or "all".
std::vector<int> parse_id_list(std::string_view spec, int upper);

// View of a general graph with a caterpillar sidecar as a bipartite graph:
// caterpillar vertices form X (renumbered in ascending id order), the rest
// form Y. Throws InvalidInput if either side is not independent.
struct CaterpillarView {
    BipartiteGraph graph;
    CaterpillarStructure structure;  // renumbered to X ids
};

CaterpillarView caterpillar_view(const GeneralInstance& instance);

}  // namespace cbsteiner
