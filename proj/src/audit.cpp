#include "cbsteiner/audit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>

#include "cbsteiner/errors.hpp"
#include "cbsteiner/generators.hpp"
#include "cbsteiner/greedy.hpp"

namespace cbsteiner {

namespace {

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return seed ^ (static_cast<std::uint64_t>(trial) + 1) * 0x9E3779B97F4A7C15ull;
}

int draw(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double draw_density(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.15, 0.9)(rng); }

Json instance_json(const ConvexBipartiteGraph& g) {
    Json ivs = Json::array();
    for (const auto& iv : g.intervals()) ivs.push_back({iv.l, iv.r});
    return {{"m", g.m()}, {"intervals", ivs}};
}

constexpr std::size_t kMaxExamples = 5;

}  // namespace

AuditReport oracle_sweep(int count, std::uint64_t seed) {
    const TerminalCase cases[] = {TerminalCase::AllX, TerminalCase::SubsetX, TerminalCase::AllY, TerminalCase::SubsetY,
                                  TerminalCase::Mixed};
    std::map<std::string, int> per_case;
    Json mismatches = Json::array();
    int failures = 0;
    for (int t = 0; t < count; ++t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        const TerminalCase tc = cases[t % 5];
        const int min_m = tc == TerminalCase::SubsetX ? 2 : 1;
        const int min_n = tc == TerminalCase::SubsetY ? 2 : 1;
        GenConfig cfg{rng(), draw(rng, min_m, 8), draw(rng, min_n, 6), draw_density(rng), true};
        const auto g = gen_convex_bipartite(cfg);
        const auto spec = gen_terminals(g, tc, rng());
        ++per_case[to_string(tc)];
        std::string error;
        int got = -1;
        try {
            got = solve_general(g, spec.terminals).size();
        } catch (const Error& e) {
            error = e.what();
        }
        const auto oracle = min_steiner_brute(g, spec.terminals);
        if (got != oracle.optimum) {
            ++failures;
            if (mismatches.size() < kMaxExamples) {
                mismatches.push_back({{"trial", t},
                                      {"instance", instance_json(g)},
                                      {"terminals", vertex_list_json(spec.terminals)},
                                      {"solver", got},
                                      {"oracle", oracle.optimum},
                                      {"error", error}});
            }
        }
    }
    const bool every_case = per_case.size() == 5;
    AuditReport out;
    out.pass = count >= 1000 && failures == 0 && every_case;
    out.report = {{"audit", "oracle_sweep"}, {"instances", count}, {"seed", seed},     {"per_case", per_case},
                  {"mismatches", failures},  {"examples", mismatches}, {"pass", out.pass}};
    return out;
}

AuditReport vc_sweep(int count, std::uint64_t seed) {
    int failures = 0;
    int caterpillar_failures = 0;
    int certificate_failures = 0;
    std::map<int, int> optimum_hist;
    Json examples = Json::array();
    for (int t = 0; t < count; ++t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        const int vertices = draw(rng, 2, 7);
        const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
        const auto g = gen_general_graph(rng(), vertices, p);
        const auto vc = min_vertex_cover_brute(g);
        const auto inst = vc_to_caterpillar_stree(g, vc.optimum);
        const bool cat_ok = validate_k_star_caterpillar_convex(inst.star_graph, inst.caterpillar, 1);
        const auto st = min_steiner_brute(inst.star_graph, inst.terminals);

        // forward: the optimal cover is a Steiner set
        auto forward = cover_to_steiner(inst, vc.witness);
        std::vector<Vertex> members(inst.terminals);
        members.insert(members.end(), forward.begin(), forward.end());
        bool cert_ok = induced_connected(inst.star_graph, members);
        // backward: the Steiner witness yields a cover of no larger size
        auto back = steiner_to_cover(inst, st.witness);
        for (const auto& [u, v] : g.edges()) {
            if (!std::binary_search(back.begin(), back.end(), u) && !std::binary_search(back.begin(), back.end(), v)) {
                cert_ok = false;
            }
        }
        cert_ok = cert_ok && static_cast<int>(back.size()) <= st.optimum;

        ++optimum_hist[vc.optimum];
        const bool ok = vc.optimum == st.optimum && cat_ok && cert_ok;
        failures += vc.optimum != st.optimum;
        caterpillar_failures += !cat_ok;
        certificate_failures += !cert_ok;
        if (!ok && examples.size() < kMaxExamples) {
            examples.push_back({{"trial", t}, {"vertices", vertices}, {"edges", g.edges()}, {"vc", vc.optimum},
                                {"steiner", st.optimum}, {"caterpillar", cat_ok}, {"certificates", cert_ok}});
        }
    }
    AuditReport out;
    out.pass = count >= 200 && failures == 0 && caterpillar_failures == 0 && certificate_failures == 0;
    Json hist = Json::object();
    for (const auto& [k, v] : optimum_hist) hist[std::to_string(k)] = v;
    out.report = {{"audit", "vc_sweep"},
                  {"instances", count},
                  {"seed", seed},
                  {"size_mismatches", failures},
                  {"caterpillar_failures", caterpillar_failures},
                  {"certificate_failures", certificate_failures},
                  {"vc_optimum_histogram", hist},
                  {"examples", examples},
                  {"pass", out.pass}};
    return out;
}

AuditReport interval_sweep(int count, std::uint64_t seed) {
    int failures = 0;
    Json examples = Json::array();
    for (int t = 0; t < count; ++t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        const int n = draw(rng, 1, 8);
        GenConfig cfg{rng(), draw(rng, 2, 16), n, draw_density(rng), true};
        const auto family = gen_interval_family(cfg);
        std::vector<int> ids(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(ids.begin(), ids.end(), rng);
        ids.resize(static_cast<std::size_t>(draw(rng, 1, n)));
        std::sort(ids.begin(), ids.end());

        int got = -1;
        std::string error;
        try {
            got = static_cast<int>(solve_interval_steiner(family, ids).steiner_set.size());
        } catch (const Error& e) {
            error = e.what();
        }
        const auto oracle = min_steiner_brute(family.intersection_graph(), ids);
        if (got != oracle.optimum) {
            ++failures;
            if (examples.size() < kMaxExamples) {
                Json ivs = Json::array();
                for (const auto& iv : family.intervals()) ivs.push_back({iv.l, iv.r});
                examples.push_back({{"trial", t}, {"intervals", ivs}, {"terminals", ids}, {"pipeline", got},
                                    {"oracle", oracle.optimum}, {"error", error}});
            }
        }
    }
    AuditReport out;
    out.pass = count >= 200 && failures == 0;
    out.report = {{"audit", "interval_sweep"}, {"instances", count}, {"seed", seed}, {"mismatches", failures},
                  {"examples", examples},      {"pass", out.pass}};
    return out;
}

AuditReport domination_audit(int count, std::uint64_t seed) {
    int invalid = 0;
    int patched = 0;
    std::map<int, int> gap_hist;
    Json worst = Json::array();
    int max_gap = 0;
    for (int t = 0; t < count; ++t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        GenConfig cfg{rng(), draw(rng, 1, 8), draw(rng, 1, 6), draw_density(rng), true};
        const auto g = gen_convex_bipartite(cfg);
        const auto d = dominating_set_via_stree(g);
        invalid += !is_dominating(g, d.d);
        patched += d.patched;
        const auto oracle = min_dominating_brute(g);
        const int gap = static_cast<int>(d.d.size()) - oracle.optimum;
        ++gap_hist[gap];
        if (gap > max_gap) {
            max_gap = gap;
            worst = Json::array();
        }
        if (gap == max_gap && gap > 0 && worst.size() < kMaxExamples) {
            worst.push_back({{"trial", t}, {"instance", instance_json(g)}, {"d", vertex_list_json(d.d)},
                             {"oracle", oracle_json(oracle)}});
        }
    }

    const ConvexBipartiteGraph example(3, {{1, 2}, {2, 3}});
    const auto d = dominating_set_via_stree(example);
    const auto oracle = min_dominating_brute(example);
    const bool reproduced = d.d.size() == 3 && oracle.optimum == 2 && is_dominating(example, d.d);

    Json hist = Json::object();
    int with_gap = 0;
    for (const auto& [k, v] : gap_hist) {
        hist[std::to_string(k)] = v;
        if (k > 0) with_gap += v;
    }
    AuditReport out;
    out.pass = count >= 500 && invalid == 0 && reproduced;
    out.report = {{"audit", "domination"},
                  {"instances", count},
                  {"seed", seed},
                  {"invalid", invalid},
                  {"patched", patched},
                  {"instances_with_gap", with_gap},
                  {"gap_histogram", hist},
                  {"max_gap", max_gap},
                  {"max_gap_examples", worst},
                  {"counterexample",
                   {{"instance", instance_json(example)},
                    {"result", domination_json(d)},
                    {"oracle", oracle_json(oracle)},
                    {"reproduced", reproduced}}},
                  {"pass", out.pass}};
    return out;
}

AuditReport table_dp_audit(int count, std::uint64_t seed) {
    int infeasible = 0;
    int suboptimal = 0;
    int errors = 0;
    Json examples = Json::array();
    for (int t = 0; t < count; ++t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        GenConfig cfg{rng(), draw(rng, 1, 8), draw(rng, 2, 6), draw_density(rng), true};
        const auto g = gen_convex_bipartite(cfg);
        const auto spec = gen_terminals(g, TerminalCase::SubsetY, rng());
        std::vector<int> ys;
        for (const auto& v : spec.terminals) ys.push_back(v.id);
        const auto oracle = min_steiner_brute(g, spec.terminals);
        std::string verdict;
        int got = -1;
        try {
            auto r = solve_subset_y_table(g, ys);
            got = r.size();
            std::vector<Vertex> all(spec.terminals);
            all.insert(all.end(), r.steiner_set.begin(), r.steiner_set.end());
            if (!induced_connected(g, all)) {
                ++infeasible;
                verdict = "disconnected";
            } else if (got != oracle.optimum) {
                ++suboptimal;
                verdict = "suboptimal";
            }
        } catch (const Error& e) {
            ++errors;
            verdict = e.what();
        }
        if (!verdict.empty() && examples.size() < kMaxExamples) {
            examples.push_back({{"trial", t}, {"instance", instance_json(g)}, {"terminals", ys}, {"table_dp", got},
                                {"oracle", oracle.optimum}, {"verdict", verdict}});
        }
    }
    AuditReport out;
    out.pass = true;
    out.report = {{"audit", "table_dp"}, {"instances", count}, {"seed", seed},     {"disconnected", infeasible},
                  {"suboptimal", suboptimal}, {"errors", errors}, {"examples", examples}, {"pass", true}};
    return out;
}

double fitted_exponent(const std::vector<int>& sizes, const std::vector<double>& times) {
    const auto k = static_cast<double>(sizes.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const double x = std::log(static_cast<double>(sizes[i]));
        const double y = std::log(std::max(times[i], 1e-9));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

AuditReport scaling_audit(const std::vector<int>& sizes, int repeats, std::uint64_t seed, double limit) {
    using clock = std::chrono::steady_clock;
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    std::vector<double> solve_times;
    std::vector<double> table_times;
    Json rows = Json::array();
    for (int size : sizes) {
        std::vector<double> solve_runs;
        std::vector<double> table_runs;
        for (int r = 0; r < repeats; ++r) {
            std::mt19937_64 rng(trial_seed(seed, size * 1000 + r));
            GenConfig cfg{rng(), size, size, 0.1, true};
            const auto g = gen_convex_bipartite(cfg);
            std::vector<int> ids(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
            std::shuffle(ids.begin(), ids.end(), rng);
            ids.resize(static_cast<std::size_t>(size / 2));
            std::sort(ids.begin(), ids.end());

            auto t0 = clock::now();
            auto result = solve_subset_y(g, ids);
            auto t1 = clock::now();
            auto table = compute_table(g, ids);
            auto t2 = clock::now();
            solve_runs.push_back(std::chrono::duration<double>(t1 - t0).count());
            table_runs.push_back(std::chrono::duration<double>(t2 - t1).count());
            (void)result;
            (void)table;
        }
        solve_times.push_back(median(solve_runs));
        table_times.push_back(median(table_runs));
        rows.push_back({{"m", size}, {"n", size}, {"solve_subset_y_s", solve_times.back()},
                        {"compute_table_s", table_times.back()}});
    }
    const double e_solve = fitted_exponent(sizes, solve_times);
    const double e_table = fitted_exponent(sizes, table_times);
    AuditReport out;
    out.pass = e_solve <= limit && e_table <= limit;
    out.report = {{"audit", "scaling"},
                  {"repeats", repeats},
                  {"seed", seed},
                  {"rows", rows},
                  {"exponent_solve_subset_y", e_solve},
                  {"exponent_compute_table", e_table},
                  {"limit", limit},
                  {"pass", out.pass}};
    return out;
}

}  // namespace cbsteiner
