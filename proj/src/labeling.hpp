// labeling.hpp - radio labelings: span, normalization, radio-condition validation.
#pragma once

#include "graph.hpp"

namespace radiobook {

inline constexpr long long kUnlabeled = -1;

// Map vertex -> non-negative label. Entries read from disk may be missing
// (kUnlabeled); validation rejects partial labelings as malformed input.
struct Labeling {
    std::vector<long long> labels;

    static Labeling empty(int num_vertices) {
        Labeling f;
        f.labels.assign(num_vertices, kUnlabeled);
        return f;
    }
    static Labeling of(std::vector<long long> values) {
        Labeling f;
        f.labels = std::move(values);
        return f;
    }

    int size() const { return static_cast<int>(labels.size()); }
    bool is_total() const;
    long long& operator[](int v) { return labels[v]; }
    long long operator[](int v) const { return labels[v]; }
    bool operator==(const Labeling&) const = default;
};

struct Violation {
    int u = 0;
    int v = 0;
    int distance = 0;
    long long required_gap = 0;
    long long actual_gap = 0;
    bool operator==(const Violation&) const = default;
};

// valid iff violations is empty; span is f_max - f_min either way.
struct ValidationReport {
    bool valid = false;
    long long span = 0;
    std::vector<Violation> violations;
};

long long span_of(const Labeling& f);    // f_max - f_min over present labels
Labeling normalized(const Labeling& f);  // shift so the minimum label is 0

// Checks |f(u)-f(v)| >= diameter+1-d(u,v) for every vertex pair and lists
// every violating pair. A labeling with missing entries is reported by
// throwing std::invalid_argument, not as a violation.
ValidationReport validate(const DistanceMatrix& dm, const Labeling& f);

}  // namespace radiobook
