#include "constructive.hpp"

#include <algorithm>

namespace radiobook {

namespace {

int book_vertex(int m, int spoke, int page) { return (page - 1) * m + (spoke - 1); }

}  // namespace

LabelOrder build_label_order(int m, int n) {
    if (m < 4) throw std::invalid_argument("build_label_order: need m >= 4");
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("build_label_order: need odd n >= 5");

    LabelOrder order;
    const int half = (n - 1) / 2;
    const int streams = m - 1;  // spoke indices 2..m, cycled with per-page offsets
    auto spoke_at = [&](int k, int offset) { return 2 + (k + offset) % streams; };

    auto push = [&](int spoke, int page, int pair_low_page) {
        order.sequence.push_back(book_vertex(m, spoke, page));
        order.pair_page.push_back(pair_low_page);
    };

    // Inner pairs, walked from t = (n-1)/2 down to 2.
    for (int t = half; t >= 2; --t) {
        const int low = t;
        const int high = t + half;
        push(1, low, t);
        for (int k = 0; k < streams; ++k) {
            push(spoke_at(k, 1), high, t);
            push(spoke_at(k, 0), low, t);
        }
        push(1, high, t);
    }

    // Anchor pages.
    order.anchor_begin = order.sequence.size();
    const int mid = (n + 1) / 2;
    int k1 = 0, kn = 0, km = 0;  // per-page stream positions
    auto push_p1 = [&] { push(spoke_at(k1++, 0), 1, 0); };
    auto push_pn = [&] { push(spoke_at(kn++, 1), n, 0); };
    auto push_pm = [&] { push(spoke_at(km++, 2), mid, 0); };

    push(1, 1, 0);
    push_pn();
    push_pm();
    push_p1();
    push(1, n, 0);
    push_pm();
    for (int j = 0; j < m - 3; ++j) {
        push_p1();
        push_pn();
        push_pm();
    }
    push_p1();
    push_pn();
    push(1, mid, 0);

    return order;
}

std::vector<int> farthest_next_order(const DistanceMatrix& dm) {
    const int n = dm.n;
    std::vector<int> sequence;
    sequence.reserve(n);
    std::vector<bool> placed(n, false);

    // Start at the lowest-index vertex of maximum eccentricity.
    int start = 0, best_ecc = -1;
    for (int v = 0; v < n; ++v) {
        int ecc = 0;
        for (int w = 0; w < n; ++w) ecc = std::max(ecc, dm.at(v, w));
        if (ecc > best_ecc) {
            best_ecc = ecc;
            start = v;
        }
    }
    sequence.push_back(start);
    placed[start] = true;
    while (static_cast<int>(sequence.size()) < n) {
        const int prev = sequence.back();
        int next = -1, best_d = -1;
        for (int w = 0; w < n; ++w)
            if (!placed[w] && dm.at(prev, w) > best_d) {
                best_d = dm.at(prev, w);
                next = w;
            }
        sequence.push_back(next);
        placed[next] = true;
    }
    return sequence;
}

Labeling greedy_label(const DistanceMatrix& dm, const std::vector<int>& sequence) {
    if (static_cast<int>(sequence.size()) != dm.n)
        throw std::invalid_argument("greedy_label: sequence length does not match instance");
    std::vector<bool> seen(dm.n, false);
    for (int v : sequence) {
        if (v < 0 || v >= dm.n || seen[v])
            throw std::invalid_argument("greedy_label: sequence is not a permutation");
        seen[v] = true;
    }
    Labeling f = Labeling::empty(dm.n);
    for (size_t i = 0; i < sequence.size(); ++i) {
        const int v = sequence[i];
        long long label = 0;
        for (size_t j = 0; j < i; ++j) {
            const int u = sequence[j];
            label = std::max(label, f[u] + dm.diameter + 1 - dm.at(u, v));
        }
        f[v] = label;
    }
    return f;
}

namespace {

long long greedy_span(const DistanceMatrix& dm, const std::vector<int>& sequence) {
    return span_of(greedy_label(dm, sequence));
}

}  // namespace

Labeling label_stacked_book_checked(int m, int n, long long target) {
    const Graph g = build_stacked_book(m, n);
    const DistanceMatrix dm = all_pairs_distances(g);
    LabelOrder order = build_label_order(m, n);

    Labeling f = greedy_label(dm, order.sequence);
    long long best_span = span_of(f);
    if (best_span <= target) return f;

    // Bounded fallback: single swaps of same-page non-center positions.
    std::vector<int> best_order = order.sequence;
    std::vector<std::vector<size_t>> positions_by_page(n + 1);
    for (size_t i = 0; i < order.sequence.size(); ++i) {
        const BookCoord c = g.coord_of(order.sequence[i]);
        if (c.spoke != 1) positions_by_page[c.page].push_back(i);
    }
    std::vector<int> trial = order.sequence;
    for (int page = 1; page <= n; ++page) {
        const auto& pos = positions_by_page[page];
        for (size_t a = 0; a < pos.size(); ++a) {
            for (size_t b = a + 1; b < pos.size(); ++b) {
                std::swap(trial[pos[a]], trial[pos[b]]);
                const long long s = greedy_span(dm, trial);
                if (s <= target) return greedy_label(dm, trial);
                if (s < best_span) {
                    best_span = s;
                    best_order = trial;
                }
                std::swap(trial[pos[a]], trial[pos[b]]);
            }
        }
    }
    throw BoundExceededError(best_span, target, best_order);
}

Labeling label_stacked_book(int m, int n, OrderStrategy strategy) {
    if (strategy == OrderStrategy::farthest_next) {
        const Graph g = build_stacked_book(m, n);
        const DistanceMatrix dm = all_pairs_distances(g);
        return greedy_label(dm, farthest_next_order(dm));
    }
    if (m >= 5) return label_stacked_book_checked(m, n, upper_bound_total({m, n}));
    // m = 4: the order is still defined but carries no span guarantee.
    const Graph g = build_stacked_book(m, n);
    const DistanceMatrix dm = all_pairs_distances(g);
    return greedy_label(dm, build_label_order(m, n).sequence);
}

}  // namespace radiobook
