// constructive.hpp - bound-achieving radio labeling of stacked-book graphs
// with odd n >= 5.
//
// The order visits the inner page pairs {t, t+(n-1)/2} for t = (n-1)/2 down
// to 2: center of the low page first, then spokes alternating between the
// high and low page with offset index streams so consecutive spokes never
// share an index, center of the high page last; consecutive pairs chain
// through those centers. It then enters the anchor pages {1, (n+1)/2, n} at
// the center of page 1, cycles spokes page n -> mid -> page 1, places the
// center of page n early and ends at the center of the mid page.
//
// Labels are assigned by smallest-feasible greedy over that order, and the
// resulting span is checked against upper_bound_total for m >= 5. For m = 4
// the same order is used but only validity is guaranteed.
#pragma once

#include "bounds.hpp"
#include "graph.hpp"
#include "labeling.hpp"

namespace radiobook {

struct LabelOrder {
    std::vector<int> sequence;   // permutation of the graph's vertices
    std::vector<int> pair_page;  // per position: low page t of its pair, 0 in the anchor phase
    size_t anchor_begin = 0;     // first anchor-phase position
};

enum class OrderStrategy {
    pair_chain,     // the scheme above; CLI name "paper"
    farthest_next,  // repeatedly take the vertex farthest from the previous one; CLI name "greedy-distance"
};

// Thrown when no order within the bounded fallback meets the target span.
struct BoundExceededError : std::runtime_error {
    long long achieved;
    long long target;
    std::vector<int> order;  // the best order tried
    BoundExceededError(long long achieved_, long long target_, std::vector<int> order_)
        : std::runtime_error("constructive span " + std::to_string(achieved_) +
                             " exceeds target " + std::to_string(target_)),
          achieved(achieved_),
          target(target_),
          order(std::move(order_)) {}
};

// Pair-chain order for G(m,n); m >= 4, odd n >= 5 (the span guarantee needs m >= 5).
LabelOrder build_label_order(int m, int n);

// Farthest-next heuristic order for any instance.
std::vector<int> farthest_next_order(const DistanceMatrix& dm);

// Assign each vertex of `sequence` (a permutation) the smallest label that
// satisfies the radio condition against everything placed before it. Labels
// are strictly increasing along the sequence and start at 0; the result
// always passes validate().
Labeling greedy_label(const DistanceMatrix& dm, const std::vector<int>& sequence);

// greedy_label over the pair-chain order, then enforce span <= target: if the
// plain order overshoots, retry with single swaps of same-page non-center
// positions before giving up with BoundExceededError.
Labeling label_stacked_book_checked(int m, int n, long long target);

// Valid labeling of G(m,n); for the pair-chain strategy with m >= 5 the span
// is guaranteed <= upper_bound_total(m,n).
Labeling label_stacked_book(int m, int n, OrderStrategy strategy = OrderStrategy::pair_chain);

}  // namespace radiobook
