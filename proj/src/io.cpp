#include "cbsteiner/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "cbsteiner/errors.hpp"

namespace cbsteiner {

namespace {

struct Token {
    std::string_view text;
    int line = 0;
    int col = 0;
};

using Line = std::vector<Token>;

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line tokens;
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            if (i > start) tokens.push_back({raw.substr(start, i - start), line_no, static_cast<int>(start) + 1});
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
        pos = end + 1;
    }
    return lines;
}

int to_int(const Token& t) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError(t.line, t.col, "expected an integer, got '" + std::string(t.text) + "'");
    }
    return value;
}

int to_int_in(const Token& t, int lo, int hi, const char* what) {
    int v = to_int(t);
    if (v < lo || v > hi) {
        throw ParseError(t.line, t.col,
                         std::string(what) + " " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
    }
    return v;
}

void expect_arity(const Line& line, std::size_t n) {
    if (line.size() != n) {
        const auto& t = line.size() > n ? line[n] : line.back();
        throw ParseError(t.line, t.col,
                         "'" + std::string(line.front().text) + "' takes " + std::to_string(n - 1) + " fields");
    }
}

ParseError missing(const std::vector<Line>& lines, const std::string& what) {
    const auto& last = lines.back().back();
    return ParseError(last.line, last.col + static_cast<int>(last.text.size()), "missing " + what);
}

std::vector<int> id_list(const Line& line, std::size_t from, int upper, std::set<int>& seen, const char* what) {
    std::vector<int> out;
    for (std::size_t i = from; i < line.size(); ++i) {
        int v = to_int_in(line[i], 1, upper, what);
        if (!seen.insert(v).second) throw ParseError(line[i].line, line[i].col, std::string("duplicate ") + what);
        out.push_back(v);
    }
    return out;
}

// Reads "<kw> <id> <a> <b>" records, returning intervals indexed by id.
std::vector<Interval> read_records(const std::vector<Line>& lines, std::size_t& next, std::string_view kw, int count,
                                   int lo, int hi, const char* what) {
    std::vector<std::optional<Interval>> slots(static_cast<std::size_t>(count));
    int filled = 0;
    while (next < lines.size() && lines[next].front().text == kw) {
        const auto& line = lines[next++];
        expect_arity(line, 4);
        int id = to_int_in(line[1], 1, count, "id");
        if (slots[static_cast<std::size_t>(id - 1)]) throw ParseError(line[1].line, line[1].col, "duplicate id");
        int l = to_int_in(line[2], lo, hi, what);
        int r = to_int_in(line[3], lo, hi, what);
        if (l > r) throw ParseError(line[2].line, line[2].col, "left end exceeds right end");
        slots[static_cast<std::size_t>(id - 1)] = Interval{l, r};
        ++filled;
    }
    if (filled != count) {
        if (next < lines.size()) {
            const auto& t = lines[next].front();
            throw ParseError(t.line, t.col, "expected " + std::to_string(count) + " '" + std::string(kw) + "' lines");
        }
        throw missing(lines, std::to_string(count - filled) + " '" + std::string(kw) + "' lines");
    }
    std::vector<Interval> out;
    for (auto& s : slots) out.push_back(*s);
    return out;
}

[[noreturn]] void unexpected(const Token& t) {
    throw ParseError(t.line, t.col, "unexpected '" + std::string(t.text) + "'");
}

CbgInstance parse_cbg_lines(const std::vector<Line>& lines) {
    const auto& head = lines.front();
    expect_arity(head, 3);
    const int m = to_int_in(head[1], 1, 1 << 24, "m");
    const int n = to_int_in(head[2], 0, 1 << 24, "n");
    std::size_t next = 1;
    auto intervals = read_records(lines, next, "y", n, 1, m, "position");
    std::vector<Vertex> terminals;
    std::set<int> seen_x;
    std::set<int> seen_y;
    for (; next < lines.size(); ++next) {
        const auto& line = lines[next];
        if (line.front().text != "t" || line.size() < 3) unexpected(line.front());
        if (line[1].text == "x") {
            for (int p : id_list(line, 2, m, seen_x, "terminal position")) terminals.push_back(xv(p));
        } else if (line[1].text == "y") {
            for (int y : id_list(line, 2, n, seen_y, "terminal Y index")) terminals.push_back(yv(y));
        } else {
            unexpected(line[1]);
        }
    }
    return CbgInstance{ConvexBipartiteGraph(m, std::move(intervals)), make_vertex_set(std::move(terminals))};
}

IntervalGraphModel parse_ivl_lines(const std::vector<Line>& lines) {
    const auto& head = lines.front();
    expect_arity(head, 2);
    const int n = to_int_in(head[1], 1, 1 << 24, "n");
    std::size_t next = 1;
    auto intervals = read_records(lines, next, "v", n, -(1 << 30), 1 << 30, "endpoint");
    if (next < lines.size()) unexpected(lines[next].front());
    return IntervalGraphModel(std::move(intervals));
}

GeneralInstance parse_general_lines(const std::vector<Line>& lines) {
    const auto& head = lines.front();
    expect_arity(head, 3);
    const int n = to_int_in(head[1], 1, 1 << 24, "n");
    const int m = to_int_in(head[2], 0, 1 << 24, "m");
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen_edges;
    std::vector<int> terminals;
    std::set<int> seen_terminals;
    std::optional<CaterpillarStructure> cat;
    std::set<int> seen_cat;
    std::size_t next = 1;
    for (; next < lines.size(); ++next) {
        const auto& line = lines[next];
        const auto kw = line.front().text;
        if (kw == "e") {
            expect_arity(line, 3);
            int u = to_int_in(line[1], 1, n, "vertex");
            int v = to_int_in(line[2], 1, n, "vertex");
            if (u == v) throw ParseError(line[2].line, line[2].col, "self-loop");
            if (!seen_edges.insert(std::minmax(u, v)).second) throw ParseError(line[1].line, line[1].col, "duplicate edge");
            edges.emplace_back(u, v);
        } else if (kw == "t") {
            if (line.size() < 3 || line[1].text != "v") unexpected(line.size() < 2 ? line[0] : line[1]);
            auto ids = id_list(line, 2, n, seen_terminals, "terminal");
            terminals.insert(terminals.end(), ids.begin(), ids.end());
        } else if (kw == "cat") {
            expect_arity(line, 2);
            if (cat) throw ParseError(line[0].line, line[0].col, "second caterpillar section");
            cat = CaterpillarStructure{};
            cat->k = to_int_in(line[1], 0, 1 << 20, "k");
        } else if (kw == "bb") {
            if (!cat || !cat->backbone.empty()) unexpected(line[0]);
            cat->backbone = id_list(line, 1, n, seen_cat, "caterpillar vertex");
        } else if (kw == "pd") {
            if (!cat || line.size() < 2) unexpected(line[0]);
            int bb = to_int_in(line[1], 1, n, "backbone vertex");
            if (std::find(cat->backbone.begin(), cat->backbone.end(), bb) == cat->backbone.end()) {
                throw ParseError(line[1].line, line[1].col, "pendants attached to a non-backbone vertex");
            }
            auto leaves = id_list(line, 2, n, seen_cat, "caterpillar vertex");
            auto& slot = cat->pendants[bb];
            slot.insert(slot.end(), leaves.begin(), leaves.end());
        } else {
            unexpected(line.front());
        }
    }
    if (static_cast<int>(edges.size()) != m) {
        throw missing(lines, std::to_string(m) + " edges (found " + std::to_string(edges.size()) + ")");
    }
    std::sort(terminals.begin(), terminals.end());
    return GeneralInstance{GeneralGraph(n, std::move(edges)), std::move(terminals), std::move(cat)};
}

template <typename T>
void join(std::ostringstream& out, const std::vector<T>& ids) {
    for (const auto& id : ids) out << ' ' << id;
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input");
    const auto& kw = lines.front().front();
    if (kw.text == "cbg") return parse_cbg_lines(lines);
    if (kw.text == "ivl") return parse_ivl_lines(lines);
    if (kw.text == "g") return parse_general_lines(lines);
    throw ParseError(kw.line, kw.col, "expected 'cbg', 'ivl' or 'g' header");
}

namespace {

template <typename T>
T parse_as(std::string_view text, const char* kind) {
    auto parsed = parse_instance(text);
    if (auto* p = std::get_if<T>(&parsed)) return std::move(*p);
    throw ParseError(1, 1, std::string("expected a '") + kind + "' instance");
}

}  // namespace

CbgInstance parse_cbg(std::string_view text) { return parse_as<CbgInstance>(text, "cbg"); }
IntervalGraphModel parse_ivl(std::string_view text) { return parse_as<IntervalGraphModel>(text, "ivl"); }
GeneralInstance parse_general(std::string_view text) { return parse_as<GeneralInstance>(text, "g"); }

std::string serialize(const CbgInstance& instance) {
    std::ostringstream out;
    const auto& g = instance.graph;
    out << "cbg " << g.m() << ' ' << g.n() << '\n';
    for (int y = 1; y <= g.n(); ++y) out << "y " << y << ' ' << g.interval(y).l << ' ' << g.interval(y).r << '\n';
    std::vector<int> xs;
    std::vector<int> ys;
    for (const auto& v : make_vertex_set(instance.terminals)) (v.side == Side::X ? xs : ys).push_back(v.id);
    if (!xs.empty()) {
        out << "t x";
        join(out, xs);
        out << '\n';
    }
    if (!ys.empty()) {
        out << "t y";
        join(out, ys);
        out << '\n';
    }
    return out.str();
}

std::string serialize(const IntervalGraphModel& intervals) {
    std::ostringstream out;
    out << "ivl " << intervals.size() << '\n';
    for (int v = 1; v <= intervals.size(); ++v) {
        out << "v " << v << ' ' << intervals.interval(v).l << ' ' << intervals.interval(v).r << '\n';
    }
    return out.str();
}

std::string serialize(const GeneralInstance& instance) {
    std::ostringstream out;
    out << "g " << instance.graph.vertex_count() << ' ' << instance.graph.edge_count() << '\n';
    for (const auto& [u, v] : instance.graph.edges()) out << "e " << u << ' ' << v << '\n';
    if (!instance.terminals.empty()) {
        auto ts = instance.terminals;
        std::sort(ts.begin(), ts.end());
        out << "t v";
        join(out, ts);
        out << '\n';
    }
    if (instance.caterpillar) {
        const auto& cat = *instance.caterpillar;
        out << "cat " << cat.k << '\n';
        if (!cat.backbone.empty()) {
            out << "bb";
            join(out, cat.backbone);
            out << '\n';
        }
        for (int bb : cat.backbone) {
            auto it = cat.pendants.find(bb);
            if (it == cat.pendants.end() || it->second.empty()) continue;
            out << "pd " << bb;
            join(out, it->second);
            out << '\n';
        }
    }
    return out.str();
}

std::string serialize(const ParsedInstance& instance) {
    return std::visit([](const auto& v) { return serialize(v); }, instance);
}

std::string canonical_form(std::string_view text) { return serialize(parse_instance(text)); }

std::string instance_digest(std::string_view canonical) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Vertex> parse_terminal_list(const ConvexBipartiteGraph& graph, std::string_view spec) {
    std::vector<Vertex> out;
    if (spec == "all-x" || spec == "all") {
        for (int p = 1; p <= graph.m(); ++p) out.push_back(xv(p));
    }
    if (spec == "all-y" || spec == "all") {
        for (int y = 1; y <= graph.n(); ++y) out.push_back(yv(y));
    }
    if (!out.empty()) return out;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t end = spec.find(',', pos);
        if (end == std::string_view::npos) end = spec.size();
        auto item = spec.substr(pos, end - pos);
        if (item.size() < 2 || (item[0] != 'x' && item[0] != 'y')) {
            throw InvalidInput("bad terminal '" + std::string(item) + "' (expected x<id> or y<id>)");
        }
        Token t{item.substr(1), 0, static_cast<int>(pos) + 2};
        int id = 0;
        try {
            id = to_int(t);
        } catch (const ParseError&) {
            throw InvalidInput("bad terminal '" + std::string(item) + "'");
        }
        Vertex v{item[0] == 'x' ? Side::X : Side::Y, id};
        if (!graph.contains(v)) throw InvalidInput("terminal not in graph: " + to_string(v));
        out.push_back(v);
        pos = end + 1;
    }
    if (out.empty()) throw InvalidInput("empty terminal list");
    auto sorted = make_vertex_set(out);
    if (sorted.size() != out.size()) throw InvalidInput("duplicate terminal in list");
    return sorted;
}

std::vector<int> parse_id_list(std::string_view spec, int upper) {
    std::vector<int> out;
    if (spec == "all") {
        for (int v = 1; v <= upper; ++v) out.push_back(v);
        return out;
    }
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t end = spec.find(',', pos);
        if (end == std::string_view::npos) end = spec.size();
        auto item = spec.substr(pos, end - pos);
        if (!item.empty() && (item[0] == 'v' || item[0] == 'x' || item[0] == 'y')) item.remove_prefix(1);
        int id = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), id);
        if (ec != std::errc() || ptr != item.data() + item.size() || id < 1 || id > upper) {
            throw InvalidInput("bad id '" + std::string(spec.substr(pos, end - pos)) + "'");
        }
        out.push_back(id);
        pos = end + 1;
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw InvalidInput("duplicate id in list");
    if (out.empty()) throw InvalidInput("empty id list");
    return out;
}

CaterpillarView caterpillar_view(const GeneralInstance& instance) {
    if (!instance.caterpillar) throw InvalidInput("instance has no caterpillar section");
    const auto& cat = *instance.caterpillar;
    const int n = instance.graph.vertex_count();
    std::vector<int> x_id(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> y_id(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> members(cat.backbone);
    for (const auto& [bb, leaves] : cat.pendants) members.insert(members.end(), leaves.begin(), leaves.end());
    std::sort(members.begin(), members.end());
    int xs = 0;
    for (int v : members) x_id[static_cast<std::size_t>(v)] = ++xs;
    int ys = 0;
    for (int v = 1; v <= n; ++v) {
        if (!x_id[static_cast<std::size_t>(v)]) y_id[static_cast<std::size_t>(v)] = ++ys;
    }
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(ys));
    for (const auto& [u, v] : instance.graph.edges()) {
        int xu = x_id[static_cast<std::size_t>(u)];
        int xw = x_id[static_cast<std::size_t>(v)];
        if ((xu != 0) == (xw != 0)) {
            throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " does not join a caterpillar vertex to a non-caterpillar vertex");
        }
        int x = xu ? xu : xw;
        int y = xu ? y_id[static_cast<std::size_t>(v)] : y_id[static_cast<std::size_t>(u)];
        lists[static_cast<std::size_t>(y - 1)].push_back(x);
    }
    CaterpillarStructure s;
    s.k = cat.k;
    for (int bb : cat.backbone) s.backbone.push_back(x_id[static_cast<std::size_t>(bb)]);
    for (const auto& [bb, leaves] : cat.pendants) {
        auto& slot = s.pendants[x_id[static_cast<std::size_t>(bb)]];
        for (int leaf : leaves) slot.push_back(x_id[static_cast<std::size_t>(leaf)]);
    }
    return CaterpillarView{BipartiteGraph(xs, std::move(lists)), std::move(s)};
}

}  // namespace cbsteiner
