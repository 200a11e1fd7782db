// Shared helpers for the test binaries.
#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "labeling.hpp"

namespace testutil {

inline radiobook::Graph build_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return radiobook::from_edges(n, edges);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(static_cast<bool>(in), "cannot open " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string fixture_path(const std::string& name) {
    return std::string(RADIOBOOK_DATA_DIR) + "/" + name;
}

// Random connected graph: a random spanning tree plus extra edges.
inline radiobook::Graph random_connected_graph(std::mt19937& rng, int max_vertices) {
    std::uniform_int_distribution<int> size_dist(2, max_vertices);
    const int n = size_dist(rng);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.push_back({parent(rng), v});
    }
    std::uniform_int_distribution<int> extra_dist(0, n);
    const int extra = extra_dist(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < extra; ++i) {
        const int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        bool dup = false;
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u)) dup = true;
        if (!dup) edges.push_back({u, v});
    }
    return radiobook::from_edges(n, edges);
}

inline radiobook::Labeling random_labeling(std::mt19937& rng, int n, long long max_label) {
    radiobook::Labeling f = radiobook::Labeling::empty(n);
    std::uniform_int_distribution<long long> dist(0, max_label);
    for (int v = 0; v < n; ++v) f[v] = dist(rng);
    return f;
}

// Anchor-triple sub-instance of G(m,n): the vertices of pages 1, (n+1)/2
// and n with host distances. Returns the restricted matrix, the centers
// (page 1, page n, mid page) as restricted indices, and the spoke columns.
struct AnchorInstance {
    radiobook::DistanceMatrix dm;
    int center_page1 = -1;
    int center_pagen = -1;
    int center_mid = -1;
    std::vector<std::vector<int>> columns;
};

inline AnchorInstance anchor_instance(int m, int n) {
    using namespace radiobook;
    const Graph g = build_stacked_book(m, n);
    const DistanceMatrix dm = all_pairs_distances(g);
    const int mid = (n + 1) / 2;
    std::vector<int> sub;
    for (int page : {1, mid, n})
        for (int spoke = 1; spoke <= m; ++spoke) sub.push_back(g.vertex_at({spoke, page}));
    AnchorInstance inst;
    inst.dm = restrict_distances(dm, sub);
    std::vector<int> pos(g.num_vertices(), -1);
    for (size_t i = 0; i < sub.size(); ++i) pos[sub[i]] = static_cast<int>(i);
    inst.center_page1 = pos[g.vertex_at({1, 1})];
    inst.center_pagen = pos[g.vertex_at({1, n})];
    inst.center_mid = pos[g.vertex_at({1, mid})];
    for (int spoke = 2; spoke <= m; ++spoke) {
        std::vector<int> column;
        for (int v : sub)
            if (g.coord_of(v).spoke == spoke) column.push_back(pos[v]);
        inst.columns.push_back(std::move(column));
    }
    return inst;
}

}  // namespace testutil
