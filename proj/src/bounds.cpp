#include "bounds.hpp"

#include <stdexcept>

namespace radiobook {

namespace {

long long half_exact(long long numerator, const char* what) {
    if (numerator % 2 != 0)
        throw std::logic_error(std::string(what) + ": numerator " + std::to_string(numerator) +
                               " is odd; formula transcription error");
    return numerator / 2;
}

void require(bool ok, const char* what, const char* range) {
    if (!ok) throw std::domain_error(std::string(what) + ": requires " + range);
}

long long sq(long long x) { return x * x; }

}  // namespace

long long lower_bound_total(BookParams p) {
    require(p.n_odd() && p.n >= 5 && p.m >= 4, "lower_bound_total", "odd n >= 5 and m >= 4");
    return half_exact(p.m * sq(p.n) + p.m + 2LL * p.n - 4, "lower_bound_total");
}

long long upper_bound_total(BookParams p) {
    require(p.n_odd() && p.n >= 5 && p.m >= 5, "upper_bound_total", "odd n >= 5 and m >= 5");
    return half_exact(p.m * sq(p.n) + 2LL * p.n + p.m - 2, "upper_bound_total");
}

long long anchor_triple_lower(BookParams p) {
    require(p.n_odd() && p.n >= 5 && p.m >= 4, "anchor_triple_lower", "odd n >= 5 and m >= 4");
    return half_exact(2LL * p.m * p.n + 4LL * p.m - p.n + 5, "anchor_triple_lower");
}

long long anchor_triple_upper(BookParams p) {
    require(p.n_odd() && p.n >= 5 && p.m >= 5, "anchor_triple_upper", "odd n >= 5 and m >= 5");
    return half_exact(2LL * p.m * p.n + 4LL * p.m - p.n + 7, "anchor_triple_upper");
}

long long star_pair_lower(BookParams p) {
    require(p.n_odd() && p.n >= 5 && p.m >= 4, "star_pair_lower", "odd n >= 5 and m >= 4");
    if ((p.n - 3) % 2 != 0) throw std::logic_error("star_pair_lower: (n-3) must be even");
    return static_cast<long long>(p.m) * p.n + p.m - (p.n - 3) / 2;
}

long long inner_pages_lower(BookParams p) {
    require(p.n_odd() && p.n >= 5 && p.m >= 4, "inner_pages_lower", "odd n >= 5 and m >= 4");
    return half_exact(p.m * sq(p.n) - 2LL * p.m * p.n - 3LL * p.m + 2LL * p.n - 12,
                      "inner_pages_lower");
}

long long inner_pages_upper(BookParams p) {
    require(p.n_odd() && p.n >= 5 && p.m >= 4, "inner_pages_upper", "odd n >= 5 and m >= 4");
    // Printed with the terms reordered, but the same polynomial as the lower form.
    return half_exact(p.m * sq(p.n) - 2LL * p.m * p.n + 2LL * p.n - 3LL * p.m - 12,
                      "inner_pages_upper");
}

long long mid_label_min(int n, MidPathClass c) {
    require(n % 2 == 1 && n >= 5, "mid_label_min", "odd n >= 5");
    return c == MidPathClass::class1 ? (n + 5) / 2 : (n + 3) / 2;
}

long long mid_label_sum(BookParams p) {
    require(p.n_odd() && p.n >= 5 && p.m >= 4, "mid_label_sum", "odd n >= 5 and m >= 4");
    return half_exact(static_cast<long long>(p.m) * p.n + 3LL * p.m + 6, "mid_label_sum");
}

long long path_radio_number(int n) {
    if (n < 3) throw std::domain_error("path_radio_number: requires n >= 3");
    const long long k = n / 2;
    if (n % 2 == 0) return 2 * k * (k - 1) + 1;
    return 2 * k * k + 2;
}

std::optional<long long> path_radio_span_exhaustive(int n) {
    // Certified by solve_exact; regression-checked against it in the tests.
    switch (n) {
        case 2: return 1;
        case 3: return 3;  // printed formula gives 4
        case 4: return 5;
        case 5: return 10;
        case 6: return 13;
        case 7: return 20;
        case 8: return 25;
        default: return std::nullopt;
    }
}

namespace {

template <typename Fn>
void fill_field(std::optional<long long>& value, std::string& note, Fn&& fn) {
    try {
        value = fn();
    } catch (const std::domain_error& e) {
        value = std::nullopt;
        note = std::string("not applicable: ") + e.what();
    }
}

}  // namespace

BoundsReport bounds_report(BookParams p) {
    if (p.m < 3 || p.n < 2) throw std::domain_error("bounds_report: requires m >= 3 and n >= 2");
    BoundsReport r;
    r.m = p.m;
    r.n = p.n;
    fill_field(r.lower_total, r.note_lower_total, [&] { return lower_bound_total(p); });
    fill_field(r.upper_total, r.note_upper_total, [&] { return upper_bound_total(p); });
    fill_field(r.anchor_triple_lower, r.note_anchor_triple_lower,
               [&] { return anchor_triple_lower(p); });
    fill_field(r.anchor_triple_upper, r.note_anchor_triple_upper,
               [&] { return anchor_triple_upper(p); });
    fill_field(r.star_pair_lower, r.note_star_pair_lower, [&] { return star_pair_lower(p); });
    fill_field(r.inner_pages_lower, r.note_inner_pages_lower, [&] { return inner_pages_lower(p); });
    fill_field(r.inner_pages_upper, r.note_inner_pages_upper, [&] { return inner_pages_upper(p); });
    if (r.inner_pages_lower && r.inner_pages_upper)
        r.note_inner_pages_upper = "coincides with inner_pages_lower: both printed forms "
                                   "evaluate the same polynomial";
    fill_field(r.mid_label_class1, r.note_mid_label_class1,
               [&] { return mid_label_min(p.n, MidPathClass::class1); });
    fill_field(r.mid_label_class2, r.note_mid_label_class2,
               [&] { return mid_label_min(p.n, MidPathClass::class2); });
    fill_field(r.mid_label_sum, r.note_mid_label_sum, [&] { return mid_label_sum(p); });
    return r;
}

}  // namespace radiobook
