// capi.cpp - extern "C" surface over the core library. Exceptions are
// converted to status codes; the message lands in a thread-local slot.
#include "radiobook.h"

#include <cstring>
#include <string>

#include "bounds.hpp"
#include "constructive.hpp"
#include "graph.hpp"
#include "labeling.hpp"
#include "serialize.hpp"
#include "solver.hpp"

using namespace radiobook;

struct rb_graph {
    Graph g;
};
struct rb_distances {
    DistanceMatrix dm;
};
struct rb_labeling {
    Labeling f;
};
struct rb_validation {
    ValidationReport report;
};
struct rb_solve_result {
    SolveResult result;
};

namespace {

thread_local std::string g_last_error;

rb_status fail(rb_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
rb_status guarded(Fn&& fn) {
    try {
        fn();
        return RB_OK;
    } catch (const ParseError& e) {
        return fail(RB_ERR_PARSE, e.what());
    } catch (const DisconnectedError& e) {
        return fail(RB_ERR_DISCONNECTED, e.what());
    } catch (const BoundExceededError& e) {
        return fail(RB_ERR_BOUND_EXCEEDED, e.what());
    } catch (const std::domain_error& e) {
        return fail(RB_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(RB_ERR_INVALID_ARG, e.what());
    } catch (const std::exception& e) {
        return fail(RB_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

rb_status require_arg(bool ok, const char* message) {
    return ok ? RB_OK : fail(RB_ERR_INVALID_ARG, message);
}

}  // namespace

extern "C" {

const char* rb_status_name(rb_status status) {
    switch (status) {
        case RB_OK: return "RB_OK";
        case RB_ERR_INVALID_ARG: return "RB_ERR_INVALID_ARG";
        case RB_ERR_PARSE: return "RB_ERR_PARSE";
        case RB_ERR_DISCONNECTED: return "RB_ERR_DISCONNECTED";
        case RB_ERR_OUT_OF_RANGE: return "RB_ERR_OUT_OF_RANGE";
        case RB_ERR_BOUND_EXCEEDED: return "RB_ERR_BOUND_EXCEEDED";
        case RB_ERR_STATE: return "RB_ERR_STATE";
        case RB_ERR_INTERNAL: return "RB_ERR_INTERNAL";
    }
    return "RB_ERR_INTERNAL";
}

const char* rb_last_error(void) { return g_last_error.c_str(); }

void rb_string_free(char* text) { delete[] text; }

rb_status rb_graph_star(int m, rb_graph** out) {
    if (rb_status s = require_arg(out != nullptr, "out is null")) return s;
    return guarded([&] { *out = new rb_graph{build_star(m)}; });
}

rb_status rb_graph_path(int n, rb_graph** out) {
    if (rb_status s = require_arg(out != nullptr, "out is null")) return s;
    return guarded([&] { *out = new rb_graph{build_path(n)}; });
}

rb_status rb_graph_stacked_book(int m, int n, rb_graph** out) {
    if (rb_status s = require_arg(out != nullptr, "out is null")) return s;
    return guarded([&] { *out = new rb_graph{build_stacked_book(m, n)}; });
}

rb_status rb_graph_cartesian_product(const rb_graph* g, const rb_graph* h, rb_graph** out) {
    if (rb_status s = require_arg(g && h && out, "null argument")) return s;
    return guarded([&] { *out = new rb_graph{cartesian_product(g->g, h->g)}; });
}

rb_status rb_graph_from_json(const char* text, rb_graph** out) {
    if (rb_status s = require_arg(text && out, "null argument")) return s;
    return guarded([&] { *out = new rb_graph{graph_from_json(text)}; });
}

rb_status rb_graph_to_json(const rb_graph* g, char** out_text) {
    if (rb_status s = require_arg(g && out_text, "null argument")) return s;
    return guarded([&] { *out_text = copy_string(graph_to_json(g->g)); });
}

rb_status rb_graph_to_dot(const rb_graph* g, const rb_labeling* f, char** out_text) {
    if (rb_status s = require_arg(g && out_text, "null argument")) return s;
    return guarded([&] {
        *out_text = copy_string(export_dot(g->g, f != nullptr ? &f->f : nullptr));
    });
}

void rb_graph_free(rb_graph* g) { delete g; }

int rb_graph_num_vertices(const rb_graph* g) { return g != nullptr ? g->g.num_vertices() : 0; }

int rb_graph_num_edges(const rb_graph* g) { return g != nullptr ? g->g.num_edges() : 0; }

const char* rb_graph_kind(const rb_graph* g) {
    static const char* names[] = {"star", "path", "product", "stacked_book", "generic"};
    if (g == nullptr) return "generic";
    return names[static_cast<int>(g->g.kind)];
}

rb_status rb_distances_compute(const rb_graph* g, rb_distances** out) {
    if (rb_status s = require_arg(g && out, "null argument")) return s;
    return guarded([&] { *out = new rb_distances{all_pairs_distances(g->g)}; });
}

void rb_distances_free(rb_distances* dm) { delete dm; }

int rb_distances_diameter(const rb_distances* dm) { return dm != nullptr ? dm->dm.diameter : 0; }

rb_status rb_distances_get(const rb_distances* dm, int u, int v, int* out) {
    if (rb_status s = require_arg(dm && out, "null argument")) return s;
    if (u < 0 || u >= dm->dm.n || v < 0 || v >= dm->dm.n)
        return fail(RB_ERR_INVALID_ARG, "vertex out of range");
    *out = dm->dm.at(u, v);
    return RB_OK;
}

rb_status rb_stacked_book_distance(int m, int n, int spoke_a, int page_a, int spoke_b, int page_b,
                                   int* out) {
    if (rb_status s = require_arg(out != nullptr, "out is null")) return s;
    return guarded([&] {
        *out = stacked_book_distance(m, n, BookCoord{spoke_a, page_a}, BookCoord{spoke_b, page_b});
    });
}

rb_status rb_labeling_from_json(const rb_graph* g, const char* text, rb_labeling** out) {
    if (rb_status s = require_arg(g && text && out, "null argument")) return s;
    return guarded([&] { *out = new rb_labeling{labeling_from_json(g->g, text)}; });
}

rb_status rb_labeling_to_json(const rb_graph* g, const rb_labeling* f, char** out_text) {
    if (rb_status s = require_arg(g && f && out_text, "null argument")) return s;
    return guarded([&] { *out_text = copy_string(labeling_to_json(g->g, f->f)); });
}

void rb_labeling_free(rb_labeling* f) { delete f; }

rb_status rb_labeling_span(const rb_labeling* f, long long* out) {
    if (rb_status s = require_arg(f && out, "null argument")) return s;
    return guarded([&] { *out = span_of(f->f); });
}

rb_status rb_labeling_normalize(const rb_labeling* f, rb_labeling** out) {
    if (rb_status s = require_arg(f && out, "null argument")) return s;
    return guarded([&] { *out = new rb_labeling{normalized(f->f)}; });
}

rb_status rb_labeling_get(const rb_labeling* f, int vertex, long long* out) {
    if (rb_status s = require_arg(f && out, "null argument")) return s;
    if (vertex < 0 || vertex >= f->f.size()) return fail(RB_ERR_INVALID_ARG, "vertex out of range");
    if (f->f[vertex] == kUnlabeled) return fail(RB_ERR_STATE, "vertex has no label");
    *out = f->f[vertex];
    return RB_OK;
}

rb_status rb_validate(const rb_distances* dm, const rb_labeling* f, rb_validation** out) {
    if (rb_status s = require_arg(dm && f && out, "null argument")) return s;
    return guarded([&] { *out = new rb_validation{validate(dm->dm, f->f)}; });
}

void rb_validation_free(rb_validation* report) { delete report; }

int rb_validation_valid(const rb_validation* report) {
    return report != nullptr && report->report.valid ? 1 : 0;
}

long long rb_validation_span(const rb_validation* report) {
    return report != nullptr ? report->report.span : 0;
}

int rb_validation_num_violations(const rb_validation* report) {
    return report != nullptr ? static_cast<int>(report->report.violations.size()) : 0;
}

rb_status rb_validation_violation(const rb_validation* report, int index, int* u, int* v,
                                  int* distance, long long* required_gap, long long* actual_gap) {
    if (rb_status s = require_arg(report != nullptr, "report is null")) return s;
    if (index < 0 || index >= static_cast<int>(report->report.violations.size()))
        return fail(RB_ERR_INVALID_ARG, "violation index out of range");
    const Violation& viol = report->report.violations[index];
    if (u) *u = viol.u;
    if (v) *v = viol.v;
    if (distance) *distance = viol.distance;
    if (required_gap) *required_gap = viol.required_gap;
    if (actual_gap) *actual_gap = viol.actual_gap;
    return RB_OK;
}

rb_status rb_validation_to_json(const rb_validation* report, char** out_text) {
    if (rb_status s = require_arg(report && out_text, "null argument")) return s;
    return guarded([&] { *out_text = copy_string(validation_to_json(report->report)); });
}

rb_status rb_bound_lower_total(int m, int n, long long* out) {
    if (rb_status s = require_arg(out != nullptr, "out is null")) return s;
    return guarded([&] { *out = lower_bound_total({m, n}); });
}

rb_status rb_bound_upper_total(int m, int n, long long* out) {
    if (rb_status s = require_arg(out != nullptr, "out is null")) return s;
    return guarded([&] { *out = upper_bound_total({m, n}); });
}

rb_status rb_path_radio_number(int n, long long* out) {
    if (rb_status s = require_arg(out != nullptr, "out is null")) return s;
    return guarded([&] { *out = path_radio_number(n); });
}

rb_status rb_bounds_report_json(int m, int n, char** out_text) {
    if (rb_status s = require_arg(out_text != nullptr, "out is null")) return s;
    return guarded([&] { *out_text = copy_string(bounds_report_to_json(bounds_report({m, n}))); });
}

rb_status rb_bounds_report_text(int m, int n, char** out_text) {
    if (rb_status s = require_arg(out_text != nullptr, "out is null")) return s;
    return guarded([&] { *out_text = copy_string(bounds_report_to_text(bounds_report({m, n}))); });
}

rb_status rb_label_stacked_book(int m, int n, const char* strategy, rb_labeling** out) {
    if (rb_status s = require_arg(strategy && out, "null argument")) return s;
    const std::string name = strategy;
    OrderStrategy chosen;
    if (name == "paper")
        chosen = OrderStrategy::pair_chain;
    else if (name == "greedy-distance")
        chosen = OrderStrategy::farthest_next;
    else
        return fail(RB_ERR_INVALID_ARG, "strategy must be \"paper\" or \"greedy-distance\"");
    return guarded([&] { *out = new rb_labeling{label_stacked_book(m, n, chosen)}; });
}

namespace {

SolveConfig config_from_options(const rb_solve_options* options) {
    SolveConfig cfg;
    if (options != nullptr) {
        if (options->node_budget > 0) cfg.node_budget = options->node_budget;
        if (options->time_budget_seconds > 0) cfg.time_budget_seconds = options->time_budget_seconds;
        if (options->upper_start >= 0) cfg.upper_start = options->upper_start;
    }
    return cfg;
}

}  // namespace

rb_status rb_solve_exact(const rb_distances* dm, const rb_solve_options* options,
                         rb_solve_result** out) {
    if (rb_status s = require_arg(dm && out, "null argument")) return s;
    return guarded(
        [&] { *out = new rb_solve_result{solve_exact(dm->dm, config_from_options(options))}; });
}

rb_status rb_solve_graph(const rb_graph* g, const rb_solve_options* options,
                         rb_solve_result** out) {
    if (rb_status s = require_arg(g && out, "null argument")) return s;
    return guarded([&] {
        SolveConfig cfg = config_from_options(options);
        if (g->g.kind == GraphKind::stacked_book) cfg.interchangeable_columns = spoke_columns(g->g);
        *out = new rb_solve_result{solve_exact(all_pairs_distances(g->g), cfg)};
    });
}

void rb_solve_result_free(rb_solve_result* result) { delete result; }

const char* rb_solve_result_status(const rb_solve_result* result) {
    return result != nullptr ? solve_status_name(result->result.status) : "infeasible_budget";
}

long long rb_solve_result_radio_number(const rb_solve_result* result) {
    return result != nullptr ? result->result.radio_number : -1;
}

long long rb_solve_result_nodes(const rb_solve_result* result) {
    return result != nullptr ? result->result.nodes_explored : 0;
}

rb_status rb_solve_result_witness(const rb_solve_result* result, rb_labeling** out) {
    if (rb_status s = require_arg(result && out, "null argument")) return s;
    if (!result->result.witness) return fail(RB_ERR_STATE, "result has no witness");
    *out = new rb_labeling{*result->result.witness};
    return RB_OK;
}

rb_status rb_solve_result_to_json(const rb_solve_result* result, const rb_graph* g,
                                  char** out_text) {
    if (rb_status s = require_arg(result && out_text, "null argument")) return s;
    return guarded([&] {
        *out_text = copy_string(solve_result_to_json(result->result, g != nullptr ? &g->g : nullptr));
    });
}

}  // extern "C"
