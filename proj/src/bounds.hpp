// bounds.hpp - closed-form radio-number bounds for stacked-book graphs
// G(m,n) = S_m x P_n with odd n, plus the cited path radio-number formula.
//
// All arithmetic is exact integer arithmetic; a formula whose numerator
// fails its divisibility check throws std::logic_error. Calls outside a
// formula's validity range throw std::domain_error.
#pragma once

#include <optional>
#include <string>

namespace radiobook {

struct BookParams {
    int m = 0;  // star order, m >= 3
    int n = 0;  // path order, n >= 2
    bool n_odd() const { return n % 2 == 1; }
};

// Whole-graph bounds, odd n >= 5. The lower bound needs m >= 4, the upper
// bound m >= 5. They differ by exactly 1 wherever both are defined.
long long lower_bound_total(BookParams p);  // (m*n^2 + m + 2n - 4) / 2
long long upper_bound_total(BookParams p);  // (m*n^2 + 2n + m - 2) / 2

// Bounds for the three anchor pages {1, (n+1)/2, n} labeled as a unit
// inside the host graph (distances and diameter taken from G(m,n)).
long long anchor_triple_lower(BookParams p);  // (2mn + 4m - n + 5) / 2, m >= 4
long long anchor_triple_upper(BookParams p);  // (2mn + 4m - n + 7) / 2, m >= 5

// Span bound for one inner page pair {t, t + (n-1)/2}, m >= 4.
long long star_pair_lower(BookParams p);  // mn + m - (n-3)/2

// The (n-3)/2 chained page pairs covering the non-anchor pages. The lower
// and upper expressions evaluate the identical polynomial.
long long inner_pages_lower(BookParams p);  // (m*n^2 - 2mn - 3m + 2n - 12) / 2
long long inner_pages_upper(BookParams p);

// Minimum label of a mid-page vertex that receives the largest label on one
// of the m end-mid-end paths through pages 1, (n+1)/2, n. class1 covers the
// three paths threading spoke indices {1,2,3}; class2 the rest.
enum class MidPathClass { class1, class2 };
long long mid_label_min(int n, MidPathClass c);  // (n+5)/2 resp. (n+3)/2

// Sum of those minima over all m paths: (mn + 3m + 6) / 2, m >= 4.
long long mid_label_sum(BookParams p);

// Liu-Zhu radio number of P_n as printed: 2k(k-1)+1 for n=2k, 2k^2+2 for
// n=2k+1. For n=3 this disagrees with exhaustive search under the
// min-label-0 span convention (span 3, printed 4); see
// path_radio_span_exhaustive for the solver-facing values.
long long path_radio_number(int n);  // n >= 3

// Exhaustively derived span values for small paths (min-label-0 convention),
// frozen from certified branch-and-bound runs; nullopt for n > 8.
std::optional<long long> path_radio_span_exhaustive(int n);

// Every formula above evaluated at (m,n), with out-of-range fields left
// empty and explained in the matching note.
struct BoundsReport {
    int m = 0;
    int n = 0;
    std::optional<long long> lower_total;
    std::optional<long long> upper_total;
    std::optional<long long> anchor_triple_lower;
    std::optional<long long> anchor_triple_upper;
    std::optional<long long> star_pair_lower;
    std::optional<long long> inner_pages_lower;
    std::optional<long long> inner_pages_upper;
    std::optional<long long> mid_label_class1;
    std::optional<long long> mid_label_class2;
    std::optional<long long> mid_label_sum;
    std::string note_lower_total, note_upper_total, note_anchor_triple_lower,
        note_anchor_triple_upper, note_star_pair_lower, note_inner_pages_lower,
        note_inner_pages_upper, note_mid_label_class1, note_mid_label_class2,
        note_mid_label_sum;
};

BoundsReport bounds_report(BookParams p);

}  // namespace radiobook
