// graph.hpp - stacked-book graphs (star x path products), BFS distances and
// the closed-form distance for book coordinates.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radiobook {

enum class GraphKind { star, path, product, stacked_book, generic };

std::string kind_name(GraphKind k);
std::optional<GraphKind> kind_from_name(const std::string& name);

// (spoke, page) address of a stacked-book vertex. spoke 1 is the star center.
struct BookCoord {
    int spoke = 0;  // 1..m
    int page = 0;   // 1..n
    bool operator==(const BookCoord&) const = default;
};

// Immutable simple undirected graph. Stacked-book instances carry a
// (spoke, page) coordinate per vertex; vertex index is (page-1)*m + (spoke-1).
struct Graph {
    GraphKind kind = GraphKind::generic;
    int m = 0;  // star order when applicable, else 0
    int n = 0;  // path order when applicable, else 0
    std::vector<std::vector<int>> adj;  // sorted neighbor lists
    std::vector<BookCoord> coords;      // empty unless stacked_book

    int num_vertices() const { return static_cast<int>(adj.size()); }
    int num_edges() const;
    bool has_edge(int u, int v) const;
    bool has_coords() const { return !coords.empty(); }

    // stacked_book only; throw on out-of-range coordinates.
    int vertex_at(BookCoord c) const;
    BookCoord coord_of(int v) const;
};

// Thrown by all_pairs_distances when the input is not connected.
struct DisconnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph build_star(int m);  // m >= 3; vertex 0 is the center
Graph build_path(int n);  // n >= 2
Graph cartesian_product(const Graph& g, const Graph& h);
Graph build_stacked_book(int m, int n);
Graph from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                 GraphKind kind = GraphKind::generic);

// All-pairs shortest distances plus the diameter the radio condition uses.
// Views produced by restrict_distances keep the host graph's diameter, so
// `diameter` may exceed the largest entry there.
struct DistanceMatrix {
    int n = 0;
    int diameter = 0;
    std::vector<int> d;  // row-major n*n

    int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
    int& at(int u, int v) { return d[static_cast<size_t>(u) * n + v]; }
};

// BFS from every vertex; rejects disconnected input.
DistanceMatrix all_pairs_distances(const Graph& g);

// Sub-instance on `vertices` (row i of the result describes vertices[i]),
// keeping the host diameter.
DistanceMatrix restrict_distances(const DistanceMatrix& dm, const std::vector<int>& vertices);

// d(a,b) = |page difference| + s, where s is 0 for equal spokes, 1 when
// exactly one endpoint is a center, 2 otherwise. Must agree with BFS.
int stacked_book_distance(int m, int n, BookCoord a, BookCoord b);

}  // namespace radiobook
