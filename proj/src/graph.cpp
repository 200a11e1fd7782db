#include "graph.hpp"

#include <algorithm>
#include <queue>

namespace radiobook {

std::string kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::star: return "star";
        case GraphKind::path: return "path";
        case GraphKind::product: return "product";
        case GraphKind::stacked_book: return "stacked_book";
        case GraphKind::generic: return "generic";
    }
    return "generic";
}

std::optional<GraphKind> kind_from_name(const std::string& name) {
    for (GraphKind k : {GraphKind::star, GraphKind::path, GraphKind::product,
                        GraphKind::stacked_book, GraphKind::generic}) {
        if (kind_name(k) == name) return k;
    }
    return std::nullopt;
}

int Graph::num_edges() const {
    size_t twice = 0;
    for (const auto& nbrs : adj) twice += nbrs.size();
    return static_cast<int>(twice / 2);
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::vertex_at(BookCoord c) const {
    if (kind != GraphKind::stacked_book)
        throw std::invalid_argument("vertex_at: graph has no book coordinates");
    if (c.spoke < 1 || c.spoke > m || c.page < 1 || c.page > n)
        throw std::invalid_argument("vertex_at: coordinate out of range");
    return (c.page - 1) * m + (c.spoke - 1);
}

BookCoord Graph::coord_of(int v) const {
    if (kind != GraphKind::stacked_book)
        throw std::invalid_argument("coord_of: graph has no book coordinates");
    if (v < 0 || v >= num_vertices()) throw std::invalid_argument("coord_of: vertex out of range");
    return coords[v];
}

namespace {

void add_edge(Graph& g, int u, int v) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
}

void finish(Graph& g) {
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
}

}  // namespace

Graph build_star(int m) {
    if (m < 3) throw std::invalid_argument("build_star: need m >= 3");
    Graph g;
    g.kind = GraphKind::star;
    g.m = m;
    g.adj.resize(m);
    for (int leaf = 1; leaf < m; ++leaf) add_edge(g, 0, leaf);
    finish(g);
    return g;
}

Graph build_path(int n) {
    if (n < 2) throw std::invalid_argument("build_path: need n >= 2");
    Graph g;
    g.kind = GraphKind::path;
    g.n = n;
    g.adj.resize(n);
    for (int i = 0; i + 1 < n; ++i) add_edge(g, i, i + 1);
    finish(g);
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.num_vertices() == 0 || h.num_vertices() == 0)
        throw std::invalid_argument("cartesian_product: graphs must be nonempty");
    const int ng = g.num_vertices();
    const int nh = h.num_vertices();
    Graph p;
    p.kind = GraphKind::product;
    p.adj.resize(static_cast<size_t>(ng) * nh);
    // (a,x) indexed as a*nh + x; adjacent iff one coordinate steps along an edge.
    for (int a = 0; a < ng; ++a) {
        for (int x = 0; x < nh; ++x) {
            const int u = a * nh + x;
            for (int y : h.adj[x])
                if (x < y) add_edge(p, u, a * nh + y);
            for (int b : g.adj[a])
                if (a < b) add_edge(p, u, b * nh + x);
        }
    }
    finish(p);
    return p;
}

Graph build_stacked_book(int m, int n) {
    if (m < 3) throw std::invalid_argument("build_stacked_book: need m >= 3");
    if (n < 2) throw std::invalid_argument("build_stacked_book: need n >= 2");
    // Path as the outer factor gives the (page-1)*m + (spoke-1) numbering.
    Graph g = cartesian_product(build_path(n), build_star(m));
    g.kind = GraphKind::stacked_book;
    g.m = m;
    g.n = n;
    g.coords.resize(g.num_vertices());
    for (int page = 1; page <= n; ++page)
        for (int spoke = 1; spoke <= m; ++spoke)
            g.coords[(page - 1) * m + (spoke - 1)] = BookCoord{spoke, page};
    return g;
}

Graph from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges, GraphKind kind) {
    if (num_vertices < 1) throw std::invalid_argument("from_edges: need at least one vertex");
    Graph g;
    g.kind = kind;
    g.adj.resize(num_vertices);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
            throw std::invalid_argument("from_edges: endpoint out of range");
        if (u == v) throw std::invalid_argument("from_edges: self-loop rejected");
        add_edge(g, u, v);
    }
    finish(g);
    for (int u = 0; u < num_vertices; ++u)
        if (std::adjacent_find(g.adj[u].begin(), g.adj[u].end()) != g.adj[u].end())
            throw std::invalid_argument("from_edges: parallel edge rejected");
    return g;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.num_vertices();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<size_t>(n) * n, -1);
    std::vector<int> queue_buf;
    queue_buf.reserve(n);
    for (int s = 0; s < n; ++s) {
        queue_buf.clear();
        queue_buf.push_back(s);
        dm.at(s, s) = 0;
        for (size_t head = 0; head < queue_buf.size(); ++head) {
            const int u = queue_buf[head];
            const int du = dm.at(s, u);
            for (int v : g.adj[u]) {
                if (dm.at(s, v) < 0) {
                    dm.at(s, v) = du + 1;
                    queue_buf.push_back(v);
                }
            }
        }
        if (static_cast<int>(queue_buf.size()) != n)
            throw DisconnectedError("all_pairs_distances: graph is disconnected (vertex " +
                                    std::to_string(s) + " does not reach all vertices)");
    }
    dm.diameter = *std::max_element(dm.d.begin(), dm.d.end());
    return dm;
}

DistanceMatrix restrict_distances(const DistanceMatrix& dm, const std::vector<int>& vertices) {
    const int k = static_cast<int>(vertices.size());
    if (k == 0) throw std::invalid_argument("restrict_distances: empty vertex set");
    std::vector<bool> seen(dm.n, false);
    for (int v : vertices) {
        if (v < 0 || v >= dm.n) throw std::invalid_argument("restrict_distances: vertex out of range");
        if (seen[v]) throw std::invalid_argument("restrict_distances: duplicate vertex");
        seen[v] = true;
    }
    DistanceMatrix sub;
    sub.n = k;
    sub.diameter = dm.diameter;  // radio condition keeps the host diameter
    sub.d.resize(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = dm.at(vertices[i], vertices[j]);
    return sub;
}

int stacked_book_distance(int m, int n, BookCoord a, BookCoord b) {
    if (m < 3 || n < 2) throw std::invalid_argument("stacked_book_distance: bad m or n");
    for (BookCoord c : {a, b})
        if (c.spoke < 1 || c.spoke > m || c.page < 1 || c.page > n)
            throw std::invalid_argument("stacked_book_distance: coordinate out of range");
    int hop = 0;
    if (a.spoke != b.spoke) hop = (a.spoke == 1 || b.spoke == 1) ? 1 : 2;
    return std::abs(a.page - b.page) + hop;
}

}  // namespace radiobook
