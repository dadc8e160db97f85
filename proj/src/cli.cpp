#include "cbsteiner/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "cbsteiner/audit.hpp"
#include "cbsteiner/errors.hpp"
#include "cbsteiner/fixtures.hpp"
#include "cbsteiner/generators.hpp"
#include "cbsteiner/greedy.hpp"
#include "cbsteiner/io.hpp"

namespace cbsteiner {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Thrown by subcommands that finish with a non-zero status but still emit a
// report (trace diffs, oracle disagreement, failed audits).
struct SoftFailure {
    int code;
};

std::uint64_t effective_seed(std::uint64_t seed) {
    if (const char* env = std::getenv("CBSTEINER_SEED"); env && *env) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InvalidInput(std::string("CBSTEINER_SEED is not an unsigned integer: ") + env);
        }
    }
    return seed;
}

std::vector<int> y_ids(std::span<const Vertex> terminals) {
    std::vector<int> ys;
    for (const auto& v : terminals) {
        if (v.side != Side::Y) throw InvalidInput("this method needs Y-side terminals only");
        ys.push_back(v.id);
    }
    return ys;
}

Json cbg_shape(const ConvexBipartiteGraph& g) { return {{"m", g.m()}, {"n", g.n()}}; }

GeneralInstance vc_instance_as_general(const VcReductionInstance& inst) {
    const int xs = inst.star_graph.x_count();
    std::vector<std::pair<int, int>> edges;
    for (int y = 1; y <= inst.star_graph.y_count(); ++y) {
        for (int x : inst.star_graph.neighbors_of_y(y)) edges.emplace_back(x, xs + y);
    }
    std::vector<int> terminals;
    for (const auto& v : inst.terminals) terminals.push_back(v.id);
    return GeneralInstance{GeneralGraph(xs + inst.star_graph.y_count(), std::move(edges)), std::move(terminals),
                           inst.caterpillar};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + path);
    f << text;
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    Json report;
};

// ---------------------------------------------------------------- solve

struct SolveArgs {
    std::string graph;
    std::string terminals;
    std::string method = "auto";
    bool oracle = false;
    bool dump_table = false;
    std::string format = "json";
};

void cmd_solve(Context& ctx, const SolveArgs& a) {
    const auto text = read_file(a.graph);
    auto inst = parse_cbg(text);
    const auto& g = inst.graph;
    auto terminals = a.terminals.empty() ? inst.terminals : parse_terminal_list(g, a.terminals);
    if (terminals.empty()) throw InvalidInput("no terminals: pass --terminals or add 't' lines to the graph file");

    if (a.dump_table) {
        auto table = compute_table(g, y_ids(terminals));
        if (a.format == "tsv") {
            ctx.out << dump_table_tsv(table);
            ctx.report = nullptr;
            ctx.err << "table: " << table.entries.size() << " entries, class " << to_string(table.instance_class)
                    << '\n';
            return;
        }
        ctx.report["table"] = table_json(table);
    }

    auto t0 = Clock::now();
    SteinerResult result;
    if (a.method == "auto") {
        result = solve_general(g, terminals);
    } else if (a.method == "table-dp") {
        result = solve_subset_y_table(g, y_ids(terminals));
    } else {
        result = frontier_steiner(g, y_ids(terminals));
    }
    const double solve_ms = ms_since(t0);

    ctx.report["digest"] = instance_digest(canonical_form(text));
    ctx.report["instance"] = cbg_shape(g);
    ctx.report["terminals"] = vertex_list_json(terminals);
    ctx.report["result"] = result_json(result);
    Json timing = {{"solve_ms", solve_ms}};
    ctx.err << "size " << result.size() << " via " << result.method << " (" << to_string(result.terminal_case)
            << ")\n";

    bool disagree = false;
    if (a.oracle) {
        auto t1 = Clock::now();
        auto oracle = min_steiner_brute(g, terminals);
        timing["oracle_ms"] = ms_since(t1);
        auto o = oracle_json(oracle);
        o["agrees"] = oracle.optimum == result.size();
        disagree = oracle.optimum != result.size();
        ctx.report["oracle"] = o;
        ctx.err << "oracle optimum " << oracle.optimum << (disagree ? " (DISAGREES)" : " (agrees)") << '\n';
    }
    ctx.report["timing"] = timing;
    if (disagree && a.method != "table-dp") throw SoftFailure{kExitInternal};
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
    std::string graph;
    std::string terminals;
    std::string problem = "steiner";
};

void cmd_oracle(Context& ctx, const OracleArgs& a) {
    const auto text = read_file(a.graph);
    auto parsed = parse_instance(text);
    ctx.report["digest"] = instance_digest(serialize(parsed));
    ctx.report["problem"] = a.problem;
    Json answer;
    if (auto* cbg = std::get_if<CbgInstance>(&parsed)) {
        if (a.problem == "steiner") {
            auto terminals = a.terminals.empty() ? cbg->terminals : parse_terminal_list(cbg->graph, a.terminals);
            if (terminals.empty()) throw InvalidInput("no terminals given");
            answer = oracle_json(min_steiner_brute(cbg->graph, terminals));
        } else if (a.problem == "dominating") {
            answer = oracle_json(min_dominating_brute(cbg->graph));
        } else {
            throw InvalidInput("vertex-cover needs a 'g' instance");
        }
    } else if (auto* ivl = std::get_if<IntervalGraphModel>(&parsed)) {
        auto ig = ivl->intersection_graph();
        if (a.problem == "steiner") {
            if (a.terminals.empty()) throw InvalidInput("no terminals given");
            answer = oracle_json(min_steiner_brute(ig, parse_id_list(a.terminals, ivl->size())));
        } else if (a.problem == "dominating") {
            answer = oracle_json(min_dominating_brute(ig));
        } else {
            answer = oracle_json(min_vertex_cover_brute(ig));
        }
    } else {
        auto& gi = std::get<GeneralInstance>(parsed);
        if (a.problem == "steiner") {
            auto terminals = a.terminals.empty() ? gi.terminals : parse_id_list(a.terminals, gi.graph.vertex_count());
            if (terminals.empty()) throw InvalidInput("no terminals given");
            answer = oracle_json(min_steiner_brute(gi.graph, terminals));
        } else if (a.problem == "dominating") {
            answer = oracle_json(min_dominating_brute(gi.graph));
        } else {
            answer = oracle_json(min_vertex_cover_brute(gi.graph));
        }
    }
    ctx.report["oracle"] = answer;
    ctx.err << a.problem << " optimum " << answer["optimum"].get<int>() << " (" << answer["explored"].get<std::uint64_t>()
            << " sets explored)\n";
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::string kind = "cbg";
    int m = 8;
    int n = 6;
    double density = 0.4;
    std::uint64_t seed = 1;
    std::string terminal_case;
    double edge_probability = 0.5;
    std::string output;
    bool raw = false;
};

void cmd_gen(Context& ctx, const GenArgs& a) {
    const auto seed = effective_seed(a.seed);
    GenConfig cfg{seed, a.m, a.n, a.density, true};
    std::string text;
    if (a.kind == "cbg") {
        auto g = gen_convex_bipartite(cfg);
        std::vector<Vertex> terminals;
        if (!a.terminal_case.empty()) {
            terminals = gen_terminals(g, terminal_case_from_string(a.terminal_case), seed ^ 0x5bd1e995ull).terminals;
        }
        text = serialize(CbgInstance{std::move(g), std::move(terminals)});
    } else if (a.kind == "ivl") {
        text = serialize(gen_interval_family(cfg));
    } else {
        text = serialize(GeneralInstance{gen_general_graph(seed, a.n, a.edge_probability), {}, std::nullopt});
    }
    if (!a.output.empty()) write_text(a.output, text);
    if (a.raw) {
        ctx.out << text;
        ctx.report = nullptr;
    } else {
        ctx.report["kind"] = a.kind;
        ctx.report["seed"] = seed;
        ctx.report["digest"] = instance_digest(text);
        ctx.report["instance"] = text;
        if (!a.output.empty()) ctx.report["output"] = a.output;
    }
    ctx.err << "generated " << a.kind << " instance, seed " << seed << '\n';
}

// ---------------------------------------------------------------- reduce

struct ReduceArgs {
    std::string graph;
    std::string terminals;
    int k = -1;
    bool oracle = false;
    std::string output;
};

void cmd_reduce_vc(Context& ctx, const ReduceArgs& a) {
    auto gi = parse_general(read_file(a.graph));
    if (a.k < 0) throw InvalidInput("reduce vc needs --k");
    auto inst = vc_to_caterpillar_stree(gi.graph, a.k);
    const bool cat_ok = validate_k_star_caterpillar_convex(inst.star_graph, inst.caterpillar, 1);
    const auto text = serialize(vc_instance_as_general(inst));
    if (!a.output.empty()) write_text(a.output, text);
    ctx.report["v1"] = inst.star_graph.y_count();
    ctx.report["v2"] = 2 * inst.edge_count;
    ctx.report["v3"] = 2 * inst.edge_count;
    ctx.report["terminals"] = vertex_list_json(inst.terminals);
    ctx.report["budget"] = inst.budget;
    ctx.report["caterpillar_valid"] = cat_ok;
    ctx.report["instance"] = text;
    ctx.err << "reduced instance: |X*| = " << inst.star_graph.x_count() << ", |Y*| = " << inst.star_graph.y_count()
            << ", |R| = " << inst.terminals.size() << ", caterpillar " << (cat_ok ? "valid" : "INVALID") << '\n';
    bool mismatch = !cat_ok;
    if (a.oracle) {
        auto vc = min_vertex_cover_brute(gi.graph);
        auto st = min_steiner_brute(inst.star_graph, inst.terminals);
        ctx.report["oracle"] = {{"vertex_cover", oracle_json(vc)},
                                {"steiner", oracle_json(st)},
                                {"equal", vc.optimum == st.optimum},
                                {"yes_instance", st.optimum <= inst.budget}};
        mismatch = mismatch || vc.optimum != st.optimum;
        ctx.err << "min vertex cover " << vc.optimum << ", min Steiner set " << st.optimum << '\n';
    }
    if (mismatch) throw SoftFailure{kExitInternal};
}

void cmd_reduce_interval(Context& ctx, const ReduceArgs& a) {
    auto family = parse_ivl(read_file(a.graph));
    if (a.terminals.empty()) throw InvalidInput("reduce interval needs --terminals");
    auto ids = parse_id_list(a.terminals, family.size());
    auto image = interval_to_convex_bipartite(family);
    auto solved = solve_interval_steiner(family, ids);
    Json ivs = Json::array();
    for (const auto& iv : image.graph.intervals()) ivs.push_back({iv.l, iv.r});
    ctx.report["image"] = {{"x_values", image.x_values}, {"intervals", ivs}};
    ctx.report["terminals"] = ids;
    ctx.report["steiner_set"] = solved.steiner_set;
    ctx.report["size"] = solved.steiner_set.size();
    ctx.report["image_result"] = result_json(solved.image);
    ctx.err << "interval Steiner set size " << solved.steiner_set.size() << '\n';
    if (a.oracle) {
        auto o = min_steiner_brute(family.intersection_graph(), ids);
        auto j = oracle_json(o);
        j["agrees"] = o.optimum == static_cast<int>(solved.steiner_set.size());
        ctx.report["oracle"] = j;
        ctx.err << "oracle optimum " << o.optimum << '\n';
        if (!j["agrees"].get<bool>()) throw SoftFailure{kExitInternal};
    }
}

void cmd_reduce_dominate(Context& ctx, const ReduceArgs& a) {
    auto inst = parse_cbg(read_file(a.graph));
    auto d = dominating_set_via_stree(inst.graph);
    ctx.report["instance"] = cbg_shape(inst.graph);
    ctx.report["domination"] = domination_json(d);
    ctx.err << "dominating set size " << d.d.size() << (d.valid ? " (valid)" : " (INVALID)") << '\n';
    if (a.oracle) {
        auto o = min_dominating_brute(inst.graph);
        ctx.report["oracle"] = oracle_json(o);
        ctx.report["gap"] = static_cast<int>(d.d.size()) - o.optimum;
        ctx.err << "minimum dominating set " << o.optimum << ", gap " << static_cast<int>(d.d.size()) - o.optimum
                << '\n';
    }
}

// ---------------------------------------------------------------- validate

void cmd_validate(Context& ctx, const std::string& path) {
    const auto text = read_file(path);
    ParsedInstance parsed = [&]() -> ParsedInstance {
        try {
            return parse_instance(text);
        } catch (const ParseError&) {
            throw;
        } catch (const InvalidInput& e) {
            ctx.report["valid"] = false;
            ctx.report["reason"] = e.what();
            ctx.err << "invalid: " << e.what() << '\n';
            throw SoftFailure{kExitInvalid};
        }
    }();
    bool valid = true;
    if (auto* cbg = std::get_if<CbgInstance>(&parsed)) {
        auto rep = validate_convex(cbg->graph.m(), cbg->graph.intervals());
        ctx.report["kind"] = "cbg";
        ctx.report["intervals_ok"] = rep.intervals_ok;
        ctx.report["connected"] = rep.connected;
        ctx.report["path_caterpillar"] =
            validate_k_star_caterpillar_convex(to_bipartite(cbg->graph), path_caterpillar(cbg->graph.m()), 0);
        valid = rep.ok();
    } else if (auto* ivl = std::get_if<IntervalGraphModel>(&parsed)) {
        ctx.report["kind"] = "ivl";
        const bool connected = ivl->intersection_graph().to_simple().connected();
        ctx.report["connected"] = connected;
        if (connected) interval_to_convex_bipartite(*ivl);
        valid = connected;
    } else {
        auto& gi = std::get<GeneralInstance>(parsed);
        ctx.report["kind"] = "g";
        ctx.report["connected"] = gi.graph.to_simple().connected();
        if (gi.caterpillar) {
            auto view = caterpillar_view(gi);
            const bool ok = validate_k_star_caterpillar_convex(view.graph, view.structure, gi.caterpillar->k);
            ctx.report["caterpillar_k"] = gi.caterpillar->k;
            ctx.report["caterpillar_valid"] = ok;
            valid = ok;
        }
    }
    ctx.report["valid"] = valid;
    ctx.err << (valid ? "valid" : "INVALID") << '\n';
    if (!valid) throw SoftFailure{kExitInvalid};
}

// ---------------------------------------------------------------- paper-traces

void cmd_traces(Context& ctx) {
    Json fixtures = Json::array();
    bool all_ok = true;
    for (const auto& replay : replay_reference_traces()) {
        fixtures.push_back({{"name", replay.name}, {"ok", replay.ok()}, {"diffs", replay.diffs}, {"report", replay.report}});
        ctx.err << (replay.ok() ? "ok   " : "FAIL ") << replay.name << '\n';
        for (const auto& d : replay.diffs) ctx.err << "     " << d << '\n';
        all_ok = all_ok && replay.ok();
    }
    ctx.report["fixtures"] = fixtures;
    ctx.report["ok"] = all_ok;
    if (!all_ok) throw SoftFailure{kExitInternal};
}

// ---------------------------------------------------------------- audit

struct AuditArgs {
    int count = 0;
    std::uint64_t seed = 1;
    std::vector<int> sizes{64, 128, 256, 512};
    int repeats = 5;
};

void cmd_audit(Context& ctx, const std::string& which, const AuditArgs& a) {
    const auto seed = effective_seed(a.seed);
    auto pick = [&](int fallback) { return a.count > 0 ? a.count : fallback; };
    AuditReport r;
    if (which == "domination") {
        r = domination_audit(pick(500), seed);
    } else if (which == "table-dp") {
        r = table_dp_audit(pick(1000), seed);
    } else if (which == "oracle-sweep") {
        r = oracle_sweep(pick(1000), seed);
    } else if (which == "vc") {
        r = vc_sweep(pick(200), seed);
    } else if (which == "interval") {
        r = interval_sweep(pick(200), seed);
    } else {
        r = scaling_audit(a.sizes, a.repeats, seed);
    }
    ctx.report["audit"] = r.report;
    ctx.err << which << ": " << (r.pass ? "pass" : "FAIL") << '\n';
    if (!r.pass) throw SoftFailure{kExitInternal};
}

Json error_json(const std::string& kind, const std::string& message) {
    return {{"kind", kind}, {"message", message}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Steiner sets on convex bipartite graphs"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    std::function<void(Context&)> action;

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Solve a Steiner instance (any terminal case)");
    s->add_option("--graph", solve.graph, "cbg instance file")->required()->check(CLI::ExistingFile);
    s->add_option("--terminals", solve.terminals, "all-x | all-y | all | x1,x3,y4 (default: file's t lines)");
    s->add_option("--method", solve.method, "auto | table-dp | frontier")
        ->check(CLI::IsMember({"auto", "table-dp", "frontier"}));
    s->add_flag("--oracle", solve.oracle, "Compare against brute force");
    s->add_flag("--dump-table", solve.dump_table, "Include the F/f table (Y terminals only)");
    s->add_option("--format", solve.format, "json | tsv (table dump)")->check(CLI::IsMember({"json", "tsv"}));
    s->callback([&] { action = [&](Context& c) { cmd_solve(c, solve); }; });

    OracleArgs oracle;
    auto* o = app.add_subcommand("oracle", "Brute-force optimum");
    o->add_option("--graph", oracle.graph, "cbg, ivl or g instance file")->required()->check(CLI::ExistingFile);
    o->add_option("--terminals", oracle.terminals, "terminal list");
    o->add_option("--problem", oracle.problem, "steiner | dominating | vertex-cover")
        ->check(CLI::IsMember({"steiner", "dominating", "vertex-cover"}));
    o->callback([&] { action = [&](Context& c) { cmd_oracle(c, oracle); }; });

    GenArgs gen;
    auto* gcmd = app.add_subcommand("gen", "Generate a seeded random instance");
    gcmd->add_option("--kind", gen.kind, "cbg | ivl | g")->check(CLI::IsMember({"cbg", "ivl", "g"}));
    gcmd->add_option("--m", gen.m, "X size (cbg) or value range (ivl)")->check(CLI::PositiveNumber);
    gcmd->add_option("--n", gen.n, "Y size, interval count or vertex count")->check(CLI::PositiveNumber);
    gcmd->add_option("--density", gen.density, "mean interval length fraction in (0, 1]");
    gcmd->add_option("--seed", gen.seed, "RNG seed (CBSTEINER_SEED overrides)");
    gcmd->add_option("--case", gen.terminal_case, "terminal case for cbg: all_x | subset_x | all_y | subset_y | mixed");
    gcmd->add_option("--edge-probability", gen.edge_probability, "edge probability for g");
    gcmd->add_option("--output", gen.output, "write the instance to this file");
    gcmd->add_flag("--raw", gen.raw, "print the instance text instead of a JSON report");
    gcmd->callback([&] { action = [&](Context& c) { cmd_gen(c, gen); }; });

    ReduceArgs reduce;
    auto* r = app.add_subcommand("reduce", "Reductions");
    r->require_subcommand(1);
    auto* rvc = r->add_subcommand("vc", "Vertex cover -> Steiner on a 1-star caterpillar convex bipartite graph");
    rvc->add_option("--graph", reduce.graph, "g instance file")->required()->check(CLI::ExistingFile);
    rvc->add_option("--k", reduce.k, "vertex cover budget")->required()->check(CLI::NonNegativeNumber);
    rvc->add_flag("--oracle", reduce.oracle, "brute-force both sides");
    rvc->add_option("--output", reduce.output, "write the reduced instance to this file");
    rvc->callback([&] { action = [&](Context& c) { cmd_reduce_vc(c, reduce); }; });
    auto* riv = r->add_subcommand("interval", "Steiner set in an interval graph");
    riv->add_option("--graph", reduce.graph, "ivl instance file")->required()->check(CLI::ExistingFile);
    riv->add_option("--terminals", reduce.terminals, "interval ids, e.g. 1,3 or all")->required();
    riv->add_flag("--oracle", reduce.oracle, "compare against brute force on the intersection graph");
    riv->callback([&] { action = [&](Context& c) { cmd_reduce_interval(c, reduce); }; });
    auto* rdom = r->add_subcommand("dominate", "Dominating set from two Steiner calls");
    rdom->add_option("--graph", reduce.graph, "cbg instance file")->required()->check(CLI::ExistingFile);
    rdom->add_flag("--oracle", reduce.oracle, "report the gap to the minimum dominating set");
    rdom->callback([&] { action = [&](Context& c) { cmd_reduce_dominate(c, reduce); }; });

    std::string validate_path;
    auto* v = app.add_subcommand("validate", "Check convexity, connectivity or a caterpillar sidecar");
    v->add_option("--graph", validate_path, "instance file")->required()->check(CLI::ExistingFile);
    v->callback([&] { action = [&](Context& c) { cmd_validate(c, validate_path); }; });

    auto* pt = app.add_subcommand("paper-traces", "Replay the hand-traced reference instances");
    pt->callback([&] { action = [&](Context& c) { cmd_traces(c); }; });

    AuditArgs audit;
    std::string audit_kind;
    auto* au = app.add_subcommand("audit", "Randomised sweeps against the oracles");
    au->add_option("kind", audit_kind, "domination | table-dp | oracle-sweep | vc | interval | scaling")
        ->required()
        ->check(CLI::IsMember({"domination", "table-dp", "oracle-sweep", "vc", "interval", "scaling"}));
    au->add_option("--count", audit.count, "number of instances");
    au->add_option("--seed", audit.seed, "RNG seed (CBSTEINER_SEED overrides)");
    au->add_option("--sizes", audit.sizes, "sizes for the scaling audit");
    au->add_option("--repeats", audit.repeats, "repeats per size for the scaling audit")->check(CLI::PositiveNumber);
    au->callback([&] { action = [&](Context& c) { cmd_audit(c, audit_kind, audit); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Json command = Json::array();
    for (int i = 0; i < argc; ++i) command.push_back(i == 0 ? std::string("steiner") : std::string(argv[i]));
    Context ctx{out, err, Json::object()};
    ctx.report["command"] = command;
    int code = kExitOk;
    try {
        action(ctx);
    } catch (const SoftFailure& f) {
        code = f.code;
    } catch (const ParseError& e) {
        auto j = error_json("parse_error", e.what());
        j["line"] = e.line();
        j["column"] = e.column();
        ctx.report["error"] = j;
        err << "parse error: " << e.what() << '\n';
        code = kExitParse;
    } catch (const InvalidInput& e) {
        ctx.report["error"] = error_json("invalid_input", e.what());
        err << "invalid input: " << e.what() << '\n';
        code = kExitInvalid;
    } catch (const OracleScaleExceeded& e) {
        ctx.report["error"] = error_json("oracle_scale_exceeded", e.what());
        err << "oracle scale exceeded: " << e.what() << '\n';
        code = kExitOracleScale;
    } catch (const InternalInconsistency& e) {
        ctx.report["error"] = error_json("internal", e.what());
        err << "internal error: " << e.what() << '\n';
        code = kExitInternal;
    }
    if (!ctx.report.is_null()) {
        ctx.report["status"] = code;
        out << ctx.report.dump(2) << '\n';
    }
    return code;
}

}  // namespace cbsteiner
