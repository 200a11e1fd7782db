// solver.hpp - exact radio numbers of small instances by branch-and-bound
// over label-sorted vertex orderings.
//
// Any valid labeling, sorted by label, induces an ordering whose greedy
// relabeling (each vertex takes the smallest label consistent with all
// earlier ones) is pointwise no larger, so only orderings need exploring.
//
// Pruning uses two admissible estimates against the incumbent: the largest
// feasibility floor among unplaced vertices, and min-floor + (r-1) * g_min
// with g_min = diameter+1 minus the largest pairwise distance among the r
// unplaced vertices. The incumbent starts from a greedy labeling along a
// BFS order unless the search is pinned.
//
// Symmetry: vertices with identical distance rows are interchangeable and
// are placed in ascending index order. Callers may additionally declare
// interchangeable columns (vertex tuples whose wholesale permutation
// preserves distances, e.g. the spoke classes of a stacked book); the
// search touches columns in ascending order. Both claims are verified.
#pragma once

#include <optional>

#include "graph.hpp"
#include "labeling.hpp"

namespace radiobook {

struct SolveConfig {
    std::optional<long long> upper_start;      // span of a known valid labeling
    std::optional<long long> node_budget;      // max extensions to explore
    std::optional<double> time_budget_seconds;
    std::optional<int> forced_first;           // restrict the search root
    std::vector<int> required_last;            // accept only orders ending here (empty = any)
    std::vector<std::vector<int>> interchangeable_columns;
};

enum class SolveStatus { optimal, incumbent_only, infeasible_budget };

struct SolveResult {
    SolveStatus status = SolveStatus::infeasible_budget;
    long long radio_number = -1;  // certified span when optimal, best incumbent otherwise
    std::optional<Labeling> witness;
    long long nodes_explored = 0;
};

const char* solve_status_name(SolveStatus s);

// Exhaustive unless a budget interrupts; throws std::domain_error if
// upper_start is below the actual optimum (no witness can then be produced).
SolveResult solve_exact(const DistanceMatrix& dm, const SolveConfig& cfg = {});

// Spoke columns of a stacked-book graph: one column per spoke index 2..m,
// listing that spoke's vertex on every page. Suitable for
// SolveConfig::interchangeable_columns.
std::vector<std::vector<int>> spoke_columns(const Graph& g);

// Independent oracle: walk every assignment in {0..max_span}^V in
// lexicographic order and return the first one satisfying the radio
// condition. Guards: at most 6 vertices, max_span <= 16.
std::optional<Labeling> brute_force_oracle(const DistanceMatrix& dm, long long max_span);

// True iff some optimal labeling puts the extreme labels on the designated
// vertices: minimum on `low` and maximum on `high`, or the two roles
// swapped. Starts from the witness in `result`, then re-searches with the
// extremes pinned. Requires an optimal result.
bool check_center_extremal(const SolveResult& result, const DistanceMatrix& dm,
                           const std::vector<int>& low, const std::vector<int>& high);

// Worker cap from RADIOBOOK_THREADS; the search is sequential in this
// release, so the effective value is always 1.
int solver_worker_cap();

}  // namespace radiobook
