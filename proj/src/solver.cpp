#include "solver.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <tuple>

#include "constructive.hpp"

namespace radiobook {

const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::incumbent_only: return "incumbent_only";
        case SolveStatus::infeasible_budget: return "infeasible_budget";
    }
    return "infeasible_budget";
}

int solver_worker_cap() {
    int requested = 1;
    if (const char* env = std::getenv("RADIOBOOK_THREADS")) {
        requested = std::atoi(env);
        if (requested < 1) requested = 1;
    }
    return std::min(requested, 1);
}

std::vector<std::vector<int>> spoke_columns(const Graph& g) {
    if (g.kind != GraphKind::stacked_book)
        throw std::invalid_argument("spoke_columns: graph is not a stacked book");
    std::vector<std::vector<int>> columns;
    for (int spoke = 2; spoke <= g.m; ++spoke) {
        std::vector<int> column;
        for (int page = 1; page <= g.n; ++page) column.push_back(g.vertex_at({spoke, page}));
        columns.push_back(std::move(column));
    }
    return columns;
}

namespace {

struct InternalResult {
    bool have_witness = false;
    long long span = -1;
    std::vector<long long> labels;
    long long nodes = 0;
    bool budget_hit = false;
};

class Search {
  public:
    Search(const DistanceMatrix& dm, const SolveConfig& cfg) : dm_(dm), n_(dm.n) {
        diameter_ = dm.diameter;
        lower_.assign(n_, 0);
        placed_.assign(n_, 0);
        order_.reserve(n_);
        labels_.reserve(n_);
        candidates_.resize(n_ + 1);
        allowed_last_.assign(n_, 1);
        pinned_ = !cfg.required_last.empty() || cfg.forced_first.has_value();
        if (!cfg.required_last.empty()) {
            allowed_last_.assign(n_, 0);
            for (int v : cfg.required_last) {
                if (v < 0 || v >= n_)
                    throw std::invalid_argument("required_last: vertex out of range");
                allowed_last_[v] = 1;
            }
        }
        forced_first_ = cfg.forced_first;
        if (forced_first_ && (*forced_first_ < 0 || *forced_first_ >= n_))
            throw std::invalid_argument("forced_first: vertex out of range");
        threshold_ = cfg.upper_start ? *cfg.upper_start + 1 : LLONG_MAX;
        if (cfg.node_budget) {
            if (*cfg.node_budget <= 0) throw std::invalid_argument("node_budget must be positive");
            node_budget_ = *cfg.node_budget;
        }
        if (cfg.time_budget_seconds) {
            if (*cfg.time_budget_seconds <= 0)
                throw std::invalid_argument("time_budget must be positive");
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(*cfg.time_budget_seconds));
            has_deadline_ = true;
        }
        setup_columns(cfg);
        build_twin_classes(cfg);
        if (!pinned_) seed_incumbent();
    }

    InternalResult run() {
        auto [a, b, d] = max_unplaced_pair();
        if (forced_first_) {
            extend(*forced_first_, 0, a, b, d);
        } else {
            for (int v = 0; v < n_ && !budget_hit_; ++v) {
                if (!twin_allowed(v) || !column_allowed(v)) continue;
                extend(v, 0, a, b, d);
            }
        }
        InternalResult r;
        r.have_witness = have_witness_;
        r.span = best_span_;
        r.labels = best_labels_;
        r.nodes = nodes_;
        r.budget_hit = budget_hit_;
        return r;
    }

  private:
    const DistanceMatrix& dm_;
    int n_;
    int diameter_;
    std::vector<long long> lower_;  // minimum feasible label per unplaced vertex
    std::vector<uint8_t> placed_;
    std::vector<int> order_;
    std::vector<long long> labels_;                // label per prefix position
    std::vector<std::vector<int>> candidates_;     // per-depth child buffers
    std::vector<std::pair<int, long long>> undo_;  // (vertex, previous floor)
    std::vector<uint8_t> allowed_last_;
    std::optional<int> forced_first_;
    bool pinned_ = false;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> class_members_;
    std::vector<size_t> class_next_;
    std::vector<int> column_of_;
    std::vector<int> column_count_;  // placed vertices per column
    int num_columns_ = 0;
    long long threshold_;  // accept completions with span strictly below this
    bool have_witness_ = false;
    long long best_span_ = -1;
    std::vector<long long> best_labels_;
    long long nodes_ = 0;
    long long node_budget_ = -1;
    bool budget_hit_ = false;
    bool has_deadline_ = false;
    std::chrono::steady_clock::time_point deadline_;

    long long required_gap(int u, int v) const {
        return static_cast<long long>(diameter_) + 1 - dm_.at(u, v);
    }

    // Columns are caller-declared interchangeable vertex tuples; verify that
    // swapping any two columns wholesale preserves every distance, then
    // restrict the search to orders that touch columns in ascending order.
    void setup_columns(const SolveConfig& cfg) {
        column_of_.assign(n_, -1);
        num_columns_ = static_cast<int>(cfg.interchangeable_columns.size());
        if (num_columns_ == 0) return;
        const size_t len = cfg.interchangeable_columns.front().size();
        for (int c = 0; c < num_columns_; ++c) {
            const auto& column = cfg.interchangeable_columns[c];
            if (column.size() != len || len == 0)
                throw std::invalid_argument("interchangeable_columns: ragged columns");
            for (int v : column) {
                if (v < 0 || v >= n_)
                    throw std::invalid_argument("interchangeable_columns: vertex out of range");
                if (column_of_[v] >= 0)
                    throw std::invalid_argument("interchangeable_columns: vertex listed twice");
                column_of_[v] = c;
            }
        }
        if (forced_first_ && column_of_[*forced_first_] >= 0)
            throw std::invalid_argument("interchangeable_columns: forced_first vertex in a column");
        // required_last must be invariant under column permutations: whether a
        // column's i-th vertex may come last cannot depend on the column.
        for (size_t i = 0; i < len; ++i)
            for (int c = 1; c < num_columns_; ++c)
                if (allowed_last_[cfg.interchangeable_columns[c][i]] !=
                    allowed_last_[cfg.interchangeable_columns[0][i]])
                    throw std::invalid_argument(
                        "interchangeable_columns: required_last must be column-invariant");
        std::vector<int> perm(n_);
        for (int c = 0; c + 1 < num_columns_; ++c) {
            for (int c2 = c + 1; c2 < num_columns_; ++c2) {
                for (int v = 0; v < n_; ++v) perm[v] = v;
                for (size_t i = 0; i < len; ++i) {
                    const int x = cfg.interchangeable_columns[c][i];
                    const int y = cfg.interchangeable_columns[c2][i];
                    perm[x] = y;
                    perm[y] = x;
                }
                for (int u = 0; u < n_; ++u)
                    for (int v = u + 1; v < n_; ++v)
                        if (dm_.at(u, v) != dm_.at(perm[u], perm[v]))
                            throw std::invalid_argument(
                                "interchangeable_columns: swap is not distance-preserving");
            }
        }
        column_count_.assign(num_columns_, 0);
    }

    bool column_allowed(int v) const {
        const int c = column_of_[v];
        if (c < 0 || column_count_[c] > 0) return true;
        for (int earlier = 0; earlier < c; ++earlier)
            if (column_count_[earlier] == 0) return false;
        return true;
    }

    // Vertices whose distance rows agree everywhere outside the pair are
    // interchangeable; the search keeps each class in ascending index order.
    // Vertices pinned by forced_first/required_last or sitting in a column
    // stay unclassed.
    void build_twin_classes(const SolveConfig& cfg) {
        std::vector<uint8_t> skip(n_, 0);
        if (cfg.forced_first) skip[*cfg.forced_first] = 1;
        for (int v : cfg.required_last) skip[v] = 1;
        for (int v = 0; v < n_; ++v)
            if (column_of_[v] >= 0) skip[v] = 1;
        class_of_.assign(n_, -1);
        for (int u = 0; u < n_; ++u) {
            if (skip[u] || class_of_[u] >= 0) continue;
            for (int v = u + 1; v < n_; ++v) {
                if (skip[v] || class_of_[v] >= 0) continue;
                bool twin = true;
                for (int w = 0; w < n_ && twin; ++w) {
                    if (w == u || w == v) continue;
                    twin = dm_.at(u, w) == dm_.at(v, w);
                }
                if (!twin) continue;
                if (class_of_[u] < 0) {
                    class_of_[u] = static_cast<int>(class_members_.size());
                    class_members_.push_back({u});
                }
                class_of_[v] = class_of_[u];
                class_members_[class_of_[u]].push_back(v);
            }
        }
        class_next_.assign(class_members_.size(), 0);
    }

    bool twin_allowed(int v) const {
        const int c = class_of_[v];
        if (c < 0) return true;
        return class_members_[c][class_next_[c]] == v;
    }

    // Greedy labeling along a BFS discovery order seeds the incumbent. In a
    // restricted view the distance-1 relation may not reach everything, so
    // the walk restarts from the next unseen vertex.
    void seed_incumbent() {
        std::vector<int> order;
        order.reserve(n_);
        std::vector<uint8_t> seen(n_, 0);
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            seen[s] = 1;
            order.push_back(s);
            for (size_t head = order.size() - 1; head < order.size(); ++head) {
                const int u = order[head];
                for (int v = 0; v < n_; ++v) {
                    if (!seen[v] && dm_.at(u, v) == 1) {
                        seen[v] = 1;
                        order.push_back(v);
                    }
                }
            }
        }
        const Labeling f = greedy_label(dm_, order);
        const long long span = span_of(f);
        if (span < threshold_) {
            threshold_ = span;
            best_span_ = span;
            have_witness_ = true;
            best_labels_ = f.labels;
        }
    }

    std::tuple<int, int, int> max_unplaced_pair() const {
        int a = -1, b = -1, best = -1;
        for (int u = 0; u < n_; ++u) {
            if (placed_[u]) continue;
            for (int v = u + 1; v < n_; ++v) {
                if (placed_[v]) continue;
                if (dm_.at(u, v) > best) {
                    best = dm_.at(u, v);
                    a = u;
                    b = v;
                }
            }
        }
        return {a, b, best};
    }

    bool out_of_budget() {
        if (node_budget_ >= 0 && nodes_ >= node_budget_) return true;
        if (has_deadline_ && (nodes_ & 0x1fff) == 0 &&
            std::chrono::steady_clock::now() >= deadline_)
            return true;
        return false;
    }

    void record_completion(long long span) {
        threshold_ = span;
        best_span_ = span;
        have_witness_ = true;
        best_labels_.assign(n_, 0);
        for (size_t i = 0; i < order_.size(); ++i) best_labels_[order_[i]] = labels_[i];
    }

    // Place v with `label`, explore extensions, undo. (max_a, max_b, max_d)
    // is the farthest still-unplaced pair before v is placed.
    void extend(int v, long long label, int max_a, int max_b, int max_d) {
        ++nodes_;
        if (out_of_budget()) {
            budget_hit_ = true;
            return;
        }

        placed_[v] = 1;
        order_.push_back(v);
        labels_.push_back(label);
        const int twin_class = class_of_[v];
        if (twin_class >= 0) ++class_next_[twin_class];
        const int column = column_of_[v];
        if (column >= 0) ++column_count_[column];

        const int remaining = n_ - static_cast<int>(order_.size());
        if (remaining == 0) {
            // Labels start at 0 and increase, so the span is the last label.
            if (allowed_last_[v] && label < threshold_) record_completion(label);
        } else {
            const size_t undo_mark = undo_.size();
            long long min_lower = LLONG_MAX, max_lower = 0;
            for (int u = 0; u < n_; ++u) {
                if (placed_[u]) continue;
                const long long cand = label + required_gap(v, u);
                if (cand > lower_[u]) {
                    undo_.push_back({u, lower_[u]});
                    lower_[u] = cand;
                }
                min_lower = std::min(min_lower, lower_[u]);
                max_lower = std::max(max_lower, lower_[u]);
            }

            int a = max_a, b = max_b, d = max_d;
            if (remaining >= 2 && (v == a || v == b)) std::tie(a, b, d) = max_unplaced_pair();
            const long long g_min = remaining >= 2 ? diameter_ + 1 - d : 0;

            if (max_lower < threshold_ && min_lower + (remaining - 1) * g_min < threshold_) {
                auto& kids = candidates_[order_.size()];
                kids.clear();
                for (int u = 0; u < n_; ++u) {
                    if (placed_[u] || !twin_allowed(u) || !column_allowed(u)) continue;
                    if (remaining == 1 && !allowed_last_[u]) continue;
                    kids.push_back(u);
                }
                std::sort(kids.begin(), kids.end(), [&](int x, int y) {
                    return lower_[x] != lower_[y] ? lower_[x] < lower_[y] : x < y;
                });
                for (int u : kids) {
                    if (budget_hit_) break;
                    if (lower_[u] + (remaining - 1) * g_min >= threshold_) continue;
                    extend(u, lower_[u], a, b, d);
                }
            }

            while (undo_.size() > undo_mark) {
                lower_[undo_.back().first] = undo_.back().second;
                undo_.pop_back();
            }
        }

        if (column >= 0) --column_count_[column];
        if (twin_class >= 0) --class_next_[twin_class];
        labels_.pop_back();
        order_.pop_back();
        placed_[v] = 0;
    }
};

InternalResult solve_internal(const DistanceMatrix& dm, const SolveConfig& cfg) {
    if (dm.n < 1) throw std::invalid_argument("solve_exact: empty instance");
    Search search(dm, cfg);
    return search.run();
}

}  // namespace

SolveResult solve_exact(const DistanceMatrix& dm, const SolveConfig& cfg) {
    InternalResult r = solve_internal(dm, cfg);
    SolveResult out;
    out.nodes_explored = r.nodes;
    if (r.have_witness) out.witness = Labeling::of(r.labels);
    if (r.budget_hit) {
        out.status = r.have_witness ? SolveStatus::incumbent_only : SolveStatus::infeasible_budget;
        out.radio_number = r.have_witness ? r.span : -1;
        return out;
    }
    if (!r.have_witness)
        throw std::domain_error(
            "solve_exact: no labeling with span <= upper_start exists; upper_start must come "
            "from a valid labeling");
    out.status = SolveStatus::optimal;
    out.radio_number = r.span;
    return out;
}

std::optional<Labeling> brute_force_oracle(const DistanceMatrix& dm, long long max_span) {
    if (dm.n > 6) throw std::invalid_argument("brute_force_oracle: at most 6 vertices");
    if (max_span < 0 || max_span > 16)
        throw std::invalid_argument("brute_force_oracle: max_span must be in [0, 16]");
    const int n = dm.n;
    std::vector<long long> req(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            req[static_cast<size_t>(u) * n + v] = dm.diameter + 1 - dm.at(u, v);

    std::vector<long long> f(n, 0);
    while (true) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const long long gap = f[u] >= f[v] ? f[u] - f[v] : f[v] - f[u];
                if (gap < req[static_cast<size_t>(u) * n + v]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return Labeling::of(f);
        int i = n - 1;
        while (i >= 0 && ++f[i] > max_span) f[i--] = 0;
        if (i < 0) return std::nullopt;
    }
}

bool check_center_extremal(const SolveResult& result, const DistanceMatrix& dm,
                           const std::vector<int>& low, const std::vector<int>& high) {
    if (result.status != SolveStatus::optimal)
        throw std::invalid_argument("check_center_extremal: requires an optimal result");
    if (!result.witness)
        throw std::invalid_argument("check_center_extremal: result has no witness");
    const long long rn = result.radio_number;

    const auto member = [](const std::vector<int>& set, int v) {
        return std::find(set.begin(), set.end(), v) != set.end();
    };

    const Labeling& w = *result.witness;
    int amin = 0, amax = 0;
    for (int v = 1; v < w.size(); ++v) {
        if (w[v] < w[amin]) amin = v;
        if (w[v] > w[amax]) amax = v;
    }
    if ((member(low, amin) && member(high, amax)) || (member(high, amin) && member(low, amax)))
        return true;

    // Re-search with the extremes pinned to the designated vertices; any
    // completion found necessarily has span == rn.
    const auto pinned_search = [&](const std::vector<int>& firsts, const std::vector<int>& lasts) {
        for (int v : firsts) {
            SolveConfig cfg;
            cfg.upper_start = rn;
            cfg.forced_first = v;
            cfg.required_last = lasts;
            if (solve_internal(dm, cfg).have_witness) return true;
        }
        return false;
    };
    return pinned_search(low, high) || pinned_search(high, low);
}

}  // namespace radiobook
