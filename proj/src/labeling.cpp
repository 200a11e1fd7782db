#include "labeling.hpp"

#include <algorithm>
#include <cstdlib>

namespace radiobook {

bool Labeling::is_total() const {
    if (labels.empty()) return false;
    return std::none_of(labels.begin(), labels.end(),
                        [](long long x) { return x == kUnlabeled; });
}

namespace {

std::pair<long long, long long> min_max_present(const Labeling& f) {
    long long lo = 0, hi = 0;
    bool any = false;
    for (long long x : f.labels) {
        if (x == kUnlabeled) continue;
        if (!any) {
            lo = hi = x;
            any = true;
        } else {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    }
    if (!any) throw std::invalid_argument("labeling is empty");
    return {lo, hi};
}

}  // namespace

long long span_of(const Labeling& f) {
    auto [lo, hi] = min_max_present(f);
    return hi - lo;
}

Labeling normalized(const Labeling& f) {
    auto [lo, hi] = min_max_present(f);
    (void)hi;
    Labeling out = f;
    for (long long& x : out.labels)
        if (x != kUnlabeled) x -= lo;
    return out;
}

ValidationReport validate(const DistanceMatrix& dm, const Labeling& f) {
    if (f.size() != dm.n)
        throw std::invalid_argument("validate: labeling size " + std::to_string(f.size()) +
                                    " does not match instance size " + std::to_string(dm.n));
    for (int v = 0; v < dm.n; ++v)
        if (f[v] == kUnlabeled)
            throw std::invalid_argument("validate: vertex " + std::to_string(v) + " has no label");

    ValidationReport report;
    report.span = span_of(f);
    for (int u = 0; u < dm.n; ++u) {
        for (int v = u + 1; v < dm.n; ++v) {
            const long long required = static_cast<long long>(dm.diameter) + 1 - dm.at(u, v);
            if (required <= 0) continue;
            const long long actual = std::llabs(f[u] - f[v]);
            if (actual < required) report.violations.push_back({u, v, dm.at(u, v), required, actual});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

}  // namespace radiobook
