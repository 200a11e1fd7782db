// acceptance.cpp - the acceptance checklist as an integration suite.
// Runs every criterion at its stated tolerance and prints one line each;
// exits nonzero if any required criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "constructive.hpp"
#include "graph.hpp"
#include "labeling.hpp"
#include "serialize.hpp"
#include "solver.hpp"

using namespace radiobook;

namespace {

struct Criterion {
    std::string name;
    double time_limit_seconds;  // 0 = untimed
    std::function<void(std::string& detail)> body;  // throws on failure
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw Failure(message);
}

std::string read_file(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    require(f != nullptr, "cannot open " + path);
    std::string text;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
    std::fclose(f);
    return text;
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return from_edges(n, edges);
}

// 1. The transcribed G_{5,5} labeling validates with zero violations and
//    span exactly 69.
void figure_fixture(std::string& detail) {
    const Graph g = build_stacked_book(5, 5);
    const DistanceMatrix dm = all_pairs_distances(g);
    const Labeling f = labeling_from_json(
        g, read_file(std::string(RADIOBOOK_DATA_DIR) + "/fig2_g55_labeling.json"));
    require(f.is_total(), "fixture must label all 25 vertices");
    const ValidationReport report = validate(dm, f);
    require(report.violations.empty(), "fixture labeling must have zero violations");
    require(report.valid, "fixture labeling must validate");
    require(report.span == 69, "fixture span must be exactly 69, got " +
                                   std::to_string(report.span));
    detail = "span 69, zero violations";
}

// 2. lower(5,5) = 68, upper(5,5) = 69, and upper - lower = 1 across the
//    sweep m in [5,12], n in {5,7,9,11}. Exact integers.
void bound_formulas(std::string& detail) {
    require(lower_bound_total({5, 5}) == 68, "lower bound at (5,5) must be 68");
    require(upper_bound_total({5, 5}) == 69, "upper bound at (5,5) must be 69");
    for (int m = 5; m <= 12; ++m)
        for (int n = 5; n <= 11; n += 2)
            require(upper_bound_total({m, n}) - lower_bound_total({m, n}) == 1,
                    "bounds must differ by 1 at m=" + std::to_string(m) +
                        " n=" + std::to_string(n));
    detail = "(5,5) = 68/69; gap 1 on all 32 sweep points";
}

// 3. label_stacked_book yields a validator-passing labeling with span at
//    most (mn^2 + 2n + m - 2)/2 for m in {5..8}, n in {5,7,9}.
void constructive_guarantee(std::string& detail) {
    int instances = 0;
    for (int m = 5; m <= 8; ++m) {
        for (int n = 5; n <= 9; n += 2) {
            const Graph g = build_stacked_book(m, n);
            const DistanceMatrix dm = all_pairs_distances(g);
            const Labeling f = label_stacked_book(m, n);
            const ValidationReport report = validate(dm, f);
            require(report.valid, "constructive labeling must validate at m=" +
                                      std::to_string(m) + " n=" + std::to_string(n));
            const long long bound =
                (static_cast<long long>(m) * n * n + 2 * n + m - 2) / 2;
            require(report.span <= bound,
                    "span " + std::to_string(report.span) + " exceeds bound " +
                        std::to_string(bound) + " at m=" + std::to_string(m) +
                        " n=" + std::to_string(n));
            ++instances;
        }
    }
    detail = std::to_string(instances) + " instances within bound";
}

// 4. solve_exact matches brute_force_oracle threshold behavior on every
//    connected corpus graph with at most 6 vertices.
void solver_vs_oracle(std::string& detail) {
    std::vector<Graph> corpus;
    for (int n = 2; n <= 6; ++n) corpus.push_back(build_path(n));
    for (int m = 3; m <= 6; ++m) corpus.push_back(build_star(m));
    for (int n = 3; n <= 6; ++n) corpus.push_back(cycle(n));
    corpus.push_back(build_stacked_book(3, 2));

    for (const Graph& g : corpus) {
        const DistanceMatrix dm = all_pairs_distances(g);
        const SolveResult r = solve_exact(dm);
        require(r.status == SolveStatus::optimal, "corpus solve must certify");
        const auto at_rn = brute_force_oracle(dm, r.radio_number);
        require(at_rn.has_value(), "oracle must find a labeling at rn");
        require(validate(dm, *at_rn).valid, "oracle labeling must validate");
        require(!brute_force_oracle(dm, r.radio_number - 1).has_value(),
                "oracle must find nothing below rn");
    }
    detail = std::to_string(corpus.size()) + " corpus graphs agree";
}

// 5. rn_span(P_4) = 5 and rn_span(P_6) = 2*3*2+1 = 13 match the printed
//    even-path formula; the P_3 discrepancy (exhaustive 3, printed 4) is
//    reproduced, not hidden.
void path_oracle(std::string& detail) {
    const auto span_of_path = [](int n) {
        return solve_exact(all_pairs_distances(build_path(n))).radio_number;
    };
    require(span_of_path(4) == 5, "rn_span(P_4) must be 5");
    require(path_radio_number(4) == 5, "printed rn(P_4) must be 5");
    require(span_of_path(6) == 13, "rn_span(P_6) must be 13");
    require(path_radio_number(6) == 2 * 3 * (3 - 1) + 1, "printed rn(P_6) must be 13");
    const long long p3_span = span_of_path(3);
    require(p3_span == 3, "rn_span(P_3) must be 3 under the min-label-0 convention");
    require(path_radio_number(3) == 4, "printed rn(P_3) must be 4");
    detail = "P_4 = 5, P_6 = 13; P_3 discrepancy reproduced (exhaustive 3 vs printed 4)";
}

// 6. stacked_book_distance equals BFS for all pairs, all m <= 8, n <= 9.
void distance_closed_form(std::string& detail) {
    long long pairs = 0;
    for (int m = 3; m <= 8; ++m) {
        for (int n = 2; n <= 9; ++n) {
            const Graph g = build_stacked_book(m, n);
            const DistanceMatrix dm = all_pairs_distances(g);
            for (int u = 0; u < g.num_vertices(); ++u) {
                for (int v = 0; v < g.num_vertices(); ++v) {
                    require(stacked_book_distance(m, n, g.coord_of(u), g.coord_of(v)) ==
                                dm.at(u, v),
                            "closed form must equal BFS");
                    ++pairs;
                }
            }
        }
    }
    detail = std::to_string(pairs) + " pairs checked";
}

// 7. Property suites: validator translation invariance over 1000 random
//    trials, greedy determinism, JSON round trips.
void property_suites(std::string& detail) {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uniform_int_distribution<int> size_dist(2, 10);
        const int size = size_dist(rng);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < size; ++v) {
            std::uniform_int_distribution<int> parent(0, v - 1);
            edges.push_back({parent(rng), v});
        }
        const Graph g = from_edges(size, edges);
        const DistanceMatrix dm = all_pairs_distances(g);
        Labeling f = Labeling::empty(size);
        std::uniform_int_distribution<long long> label_dist(0, 25);
        for (int v = 0; v < size; ++v) f[v] = label_dist(rng);
        std::uniform_int_distribution<long long> shift_dist(1, 17);
        const long long shift = shift_dist(rng);
        Labeling shifted = f;
        for (long long& x : shifted.labels) x += shift;
        const ValidationReport a = validate(dm, f);
        const ValidationReport b = validate(dm, shifted);
        require(a.valid == b.valid && a.span == b.span && a.violations == b.violations,
                "validation must be translation invariant");
    }

    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{5, 5}, {6, 7}}) {
        const DistanceMatrix dm = all_pairs_distances(build_stacked_book(m, n));
        const LabelOrder order = build_label_order(m, n);
        const Labeling once = greedy_label(dm, order.sequence);
        const Labeling twice = greedy_label(dm, order.sequence);
        require(once == twice, "greedy labeling must be deterministic");
        std::vector<int> by_label(dm.n);
        for (int v = 0; v < dm.n; ++v) by_label[v] = v;
        std::sort(by_label.begin(), by_label.end(),
                  [&](int a, int b) { return once[a] < once[b]; });
        require(greedy_label(dm, by_label) == once,
                "relabeling the greedy output's order must reproduce it");
    }

    for (const Graph& g : {build_stacked_book(4, 5), build_star(5), build_path(6)}) {
        const Graph back = graph_from_json(graph_to_json(g));
        require(back.adj == g.adj && back.coords == g.coords && back.kind == g.kind,
                "graph JSON must round trip");
    }
    {
        const Graph g = build_stacked_book(5, 5);
        const Labeling f = label_stacked_book(5, 5);
        require(labeling_from_json(g, labeling_to_json(g, f)) == f,
                "labeling JSON must round trip");
    }
    detail = "1000 invariance trials, determinism, round trips";
}

// 8. Stretch: certified optimum for G_{4,5} within a 1e8-node budget; when
//    achieved the sandwich lower <= rn <= incumbent span must hold. Not
//    achieving certification within the budget is a reported, passing
//    outcome: only the bounds and fixture criteria carry acceptance.
void stretch_exact_book(std::string& detail) {
    const Graph g = build_stacked_book(4, 5);
    const DistanceMatrix dm = all_pairs_distances(g);
    const Labeling incumbent = label_stacked_book(4, 5);
    const long long incumbent_span = span_of(incumbent);
    SolveConfig cfg;
    cfg.upper_start = incumbent_span;
    cfg.node_budget = 100'000'000;
    cfg.time_budget_seconds = 240;  // wall-clock guard for CI runs
    cfg.interchangeable_columns = spoke_columns(g);
    const SolveResult r = solve_exact(dm, cfg);
    std::ostringstream out;
    if (r.status == SolveStatus::optimal) {
        require(r.radio_number >= lower_bound_total({4, 5}),
                "certified rn must respect the lower bound");
        require(r.radio_number <= incumbent_span,
                "certified rn must not exceed the constructive span");
        out << "certified rn(G_{4,5}) = " << r.radio_number << " in " << r.nodes_explored
            << " nodes; sandwich 55 <= rn <= " << incumbent_span << " holds";
    } else {
        out << "not certified within budget (" << r.nodes_explored
            << " nodes); certified range stays [" << lower_bound_total({4, 5}) << ", "
            << incumbent_span << "]";
    }
    detail = out.str();
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 figure fixture: G_{5,5} labeling valid, span 69", 1.0, figure_fixture},
        {"2 bound formulas: 68/69 at (5,5), gap 1 on sweep", 0.0, bound_formulas},
        {"3 constructive guarantee on m in {5..8} x n in {5,7,9}", 10.0, constructive_guarantee},
        {"4 solver vs oracle on all corpus graphs (<= 6 vertices)", 300.0, solver_vs_oracle},
        {"5 path oracle: P_4, P_6 match formula; P_3 discrepancy", 0.0, path_oracle},
        {"6 closed-form distance equals BFS, m <= 8, n <= 9", 30.0, distance_closed_form},
        {"7 property suites: invariance, determinism, round trips", 0.0, property_suites},
        {"8 stretch: certify rn(G_{4,5}) in 1e8 nodes", 0.0, stretch_exact_book},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        std::string failure;
        try {
            criterion.body(detail);
        } catch (const std::exception& e) {
            failure = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && criterion.time_limit_seconds > 0 &&
            elapsed > criterion.time_limit_seconds)
            failure = "time limit " + std::to_string(criterion.time_limit_seconds) +
                      " s exceeded";
        if (failure.empty()) {
            std::printf("PASS  %-58s (%.2f s) %s\n", criterion.name.c_str(), elapsed,
                        detail.c_str());
        } else {
            std::printf("FAIL  %-58s (%.2f s) %s\n", criterion.name.c_str(), elapsed,
                        failure.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
