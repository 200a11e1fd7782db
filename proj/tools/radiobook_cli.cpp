// radiobook_cli.cpp - command-line front end over the radiobook C API.
//
// Exit codes: 0 success (verify: labeling valid), 1 domain failure (verify:
// labeling invalid; label: span bound exceeded), 2 malformed input or usage.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radiobook.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitMalformed = 2;

struct CliError {
    int exit_code;
    std::string message;
};

void check(rb_status status) {
    if (status == RB_OK) return;
    const int code = status == RB_ERR_BOUND_EXCEEDED ? kExitDomain : kExitMalformed;
    throw CliError{code, std::string(rb_status_name(status)) + ": " + rb_last_error()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitMalformed, "cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{kExitMalformed, "cannot write " + path};
    out << text;
}

// RAII wrappers around the opaque handles.
using GraphPtr = std::unique_ptr<rb_graph, decltype(&rb_graph_free)>;
using DistPtr = std::unique_ptr<rb_distances, decltype(&rb_distances_free)>;
using LabelingPtr = std::unique_ptr<rb_labeling, decltype(&rb_labeling_free)>;
using ValidationPtr = std::unique_ptr<rb_validation, decltype(&rb_validation_free)>;
using SolvePtr = std::unique_ptr<rb_solve_result, decltype(&rb_solve_result_free)>;

std::string take_string(char* text) {
    std::string out = text != nullptr ? text : "";
    rb_string_free(text);
    return out;
}

GraphPtr make_graph(const std::string& kind, int m, int n) {
    rb_graph* g = nullptr;
    if (kind == "stacked_book") {
        check(rb_graph_stacked_book(m, n, &g));
    } else if (kind == "star") {
        check(rb_graph_star(m, &g));
    } else if (kind == "path") {
        check(rb_graph_path(n, &g));
    } else {
        throw CliError{kExitMalformed, "kind must be stacked_book, star or path"};
    }
    return GraphPtr(g, rb_graph_free);
}

GraphPtr load_graph(const std::string& path) {
    rb_graph* g = nullptr;
    check(rb_graph_from_json(read_file(path).c_str(), &g));
    return GraphPtr(g, rb_graph_free);
}

DistPtr compute_distances(const rb_graph* g) {
    rb_distances* dm = nullptr;
    check(rb_distances_compute(g, &dm));
    return DistPtr(dm, rb_distances_free);
}

long long labeling_span(const rb_labeling* f) {
    long long span = 0;
    check(rb_labeling_span(f, &span));
    return span;
}

// ---- subcommand payloads ----

struct ConstructArgs {
    std::string kind = "stacked_book";
    int m = 0, n = 0;
    std::string out_path, dot_path;
    bool json = false;
};

int run_construct(const ConstructArgs& a) {
    GraphPtr g = make_graph(a.kind, a.m, a.n);
    char* text = nullptr;
    check(rb_graph_to_json(g.get(), &text));
    const std::string graph_json = take_string(text);
    if (!a.out_path.empty()) write_file(a.out_path, graph_json);
    if (!a.dot_path.empty()) {
        check(rb_graph_to_dot(g.get(), nullptr, &text));
        write_file(a.dot_path, take_string(text));
    }
    if (a.json) {
        std::cout << graph_json;
    } else {
        std::cout << rb_graph_kind(g.get());
        if (a.m > 0) std::cout << " m=" << a.m;
        if (a.n > 0) std::cout << " n=" << a.n;
        std::cout << ": " << rb_graph_num_vertices(g.get()) << " vertices, "
                  << rb_graph_num_edges(g.get()) << " edges\n";
        if (!a.out_path.empty()) std::cout << "wrote " << a.out_path << "\n";
        if (!a.dot_path.empty()) std::cout << "wrote " << a.dot_path << "\n";
    }
    return kExitOk;
}

struct BoundsArgs {
    int m = 0, n = 0;
    bool json = false;
};

int run_bounds(const BoundsArgs& a) {
    char* text = nullptr;
    if (a.json)
        check(rb_bounds_report_json(a.m, a.n, &text));
    else
        check(rb_bounds_report_text(a.m, a.n, &text));
    std::cout << take_string(text);
    return kExitOk;
}

struct LabelArgs {
    int m = 0, n = 0;
    std::string strategy = "paper";
    std::string out_path;
    bool json = false;
};

int run_label(const LabelArgs& a) {
    rb_labeling* raw = nullptr;
    check(rb_label_stacked_book(a.m, a.n, a.strategy.c_str(), &raw));
    LabelingPtr f(raw, rb_labeling_free);
    GraphPtr g = make_graph("stacked_book", a.m, a.n);
    DistPtr dm = compute_distances(g.get());

    rb_validation* vraw = nullptr;
    check(rb_validate(dm.get(), f.get(), &vraw));
    ValidationPtr report(vraw, rb_validation_free);
    const long long span = rb_validation_span(report.get());

    long long upper = -1;
    const bool has_upper = rb_bound_upper_total(a.m, a.n, &upper) == RB_OK;
    const bool within = has_upper && span <= upper;

    char* text = nullptr;
    check(rb_labeling_to_json(g.get(), f.get(), &text));
    const std::string labeling_json = take_string(text);
    if (!a.out_path.empty()) write_file(a.out_path, labeling_json);

    if (a.json) {
        std::ostringstream out;
        out << "{\n  \"span\": " << span << ",\n  \"valid\": "
            << (rb_validation_valid(report.get()) ? "true" : "false") << ",\n  \"upper_bound\": ";
        if (has_upper)
            out << upper;
        else
            out << "null";
        out << ",\n  \"within_bound\": " << (within ? "true" : "false") << ",\n  \"labeling\": ";
        std::string body = labeling_json;
        while (!body.empty() && (body.back() == '\n' || body.back() == ' ')) body.pop_back();
        out << body << "\n}\n";
        std::cout << out.str();
    } else {
        std::cout << "span " << span << " (valid: "
                  << (rb_validation_valid(report.get()) ? "yes" : "no") << ")\n";
        if (has_upper)
            std::cout << "upper bound " << upper << ": " << (within ? "satisfied" : "EXCEEDED")
                      << "\n";
        else
            std::cout << "upper bound: not applicable for m=" << a.m << ", n=" << a.n << "\n";
        if (!a.out_path.empty()) std::cout << "wrote " << a.out_path << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string graph_path, labeling_path;
    bool json = false;
};

int run_verify(const VerifyArgs& a) {
    GraphPtr g = load_graph(a.graph_path);
    DistPtr dm = compute_distances(g.get());
    rb_labeling* raw = nullptr;
    check(rb_labeling_from_json(g.get(), read_file(a.labeling_path).c_str(), &raw));
    LabelingPtr f(raw, rb_labeling_free);

    rb_validation* vraw = nullptr;
    check(rb_validate(dm.get(), f.get(), &vraw));  // missing labels -> malformed, exit 2
    ValidationPtr report(vraw, rb_validation_free);

    if (a.json) {
        char* text = nullptr;
        check(rb_validation_to_json(report.get(), &text));
        std::cout << take_string(text);
    } else if (rb_validation_valid(report.get())) {
        std::cout << "valid, span " << rb_validation_span(report.get()) << "\n";
    } else {
        const int count = rb_validation_num_violations(report.get());
        std::cout << "INVALID: " << count << " violation(s), span "
                  << rb_validation_span(report.get()) << "\n";
        for (int i = 0; i < count && i < 10; ++i) {
            int u, v, d;
            long long need, got;
            check(rb_validation_violation(report.get(), i, &u, &v, &d, &need, &got));
            std::cout << "  vertices " << u << "," << v << ": distance " << d << ", need gap >= "
                      << need << ", got " << got << "\n";
        }
        if (count > 10) std::cout << "  ... " << count - 10 << " more\n";
    }
    return rb_validation_valid(report.get()) ? kExitOk : kExitDomain;
}

struct SolveArgs {
    std::string graph_path;
    int m = 0, n = 0;
    long long node_budget = 0;
    double time_budget = 0;
    long long upper_start = -1;
    std::string out_path;
    bool json = false;
};

int run_solve(const SolveArgs& a) {
    GraphPtr g = !a.graph_path.empty() ? load_graph(a.graph_path)
                                       : make_graph("stacked_book", a.m, a.n);
    rb_solve_options options{a.node_budget, a.time_budget, a.upper_start};
    rb_solve_result* raw = nullptr;
    check(rb_solve_graph(g.get(), &options, &raw));
    SolvePtr result(raw, rb_solve_result_free);

    char* text = nullptr;
    check(rb_solve_result_to_json(result.get(), g.get(), &text));
    const std::string result_json = take_string(text);
    if (!a.out_path.empty()) write_file(a.out_path, result_json);

    if (a.json) {
        std::cout << result_json;
    } else {
        const std::string status = rb_solve_result_status(result.get());
        if (status == "optimal")
            std::cout << "radio number " << rb_solve_result_radio_number(result.get());
        else if (status == "incumbent_only")
            std::cout << "incumbent span " << rb_solve_result_radio_number(result.get())
                      << " (budget exhausted before certification)";
        else
            std::cout << "no labeling found within budget";
        std::cout << ", " << rb_solve_result_nodes(result.get()) << " nodes\n";
        if (!a.out_path.empty()) std::cout << "wrote " << a.out_path << "\n";
    }
    return kExitOk;
}

struct TableArgs {
    int m_from = 5, m_to = 8;
    int n_from = 5, n_to = 9;
    std::string format = "csv";
    bool exact = false;
    long long node_budget = 0;
    std::string out_path;
    bool json = false;
};

struct TableRow {
    int m, n;
    std::optional<long long> lower, upper, constructive_span, exact;
    std::optional<long long> nodes;
};

int run_table(const TableArgs& a) {
    if (a.m_from > a.m_to || a.n_from > a.n_to)
        throw CliError{kExitMalformed, "empty m or n range"};
    std::vector<TableRow> rows;
    for (int m = a.m_from; m <= a.m_to; ++m) {
        for (int n = a.n_from; n <= a.n_to; ++n) {
            if (n % 2 == 0) continue;  // bounds are defined for odd paths only
            TableRow row{m, n, {}, {}, {}, {}, {}};
            long long value = 0;
            if (rb_bound_lower_total(m, n, &value) == RB_OK) row.lower = value;
            if (rb_bound_upper_total(m, n, &value) == RB_OK) row.upper = value;
            rb_labeling* raw = nullptr;
            if (rb_label_stacked_book(m, n, "paper", &raw) == RB_OK) {
                LabelingPtr f(raw, rb_labeling_free);
                row.constructive_span = labeling_span(f.get());
            }
            if (a.exact) {
                GraphPtr g = make_graph("stacked_book", m, n);
                rb_solve_options options{a.node_budget, 0.0,
                                         row.constructive_span.value_or(-1)};
                rb_solve_result* sraw = nullptr;
                if (rb_solve_graph(g.get(), &options, &sraw) == RB_OK) {
                    SolvePtr result(sraw, rb_solve_result_free);
                    row.nodes = rb_solve_result_nodes(result.get());
                    if (std::string(rb_solve_result_status(result.get())) == "optimal")
                        row.exact = rb_solve_result_radio_number(result.get());
                }
            }
            rows.push_back(row);
        }
    }

    const auto cell = [](const std::optional<long long>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    std::ostringstream out;
    if (a.json) {
        out << "[\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            const TableRow& r = rows[i];
            const auto field = [](const std::optional<long long>& v) {
                return v ? std::to_string(*v) : std::string("null");
            };
            out << "  {\"m\": " << r.m << ", \"n\": " << r.n << ", \"lower\": " << field(r.lower)
                << ", \"upper\": " << field(r.upper)
                << ", \"constructive_span\": " << field(r.constructive_span)
                << ", \"exact\": " << field(r.exact) << ", \"nodes_explored\": " << field(r.nodes)
                << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
        }
        out << "]\n";
    } else if (a.format == "markdown") {
        out << "| m | n | lower | upper | constructive_span | exact | nodes_explored |\n";
        out << "|---|---|-------|-------|-------------------|-------|----------------|\n";
        for (const TableRow& r : rows)
            out << "| " << r.m << " | " << r.n << " | " << cell(r.lower) << " | " << cell(r.upper)
                << " | " << cell(r.constructive_span) << " | " << cell(r.exact) << " | "
                << cell(r.nodes) << " |\n";
    } else if (a.format == "csv") {
        out << "m,n,lower,upper,constructive_span,exact,nodes_explored\n";
        for (const TableRow& r : rows)
            out << r.m << "," << r.n << "," << cell(r.lower) << "," << cell(r.upper) << ","
                << cell(r.constructive_span) << "," << cell(r.exact) << "," << cell(r.nodes)
                << "\n";
    } else {
        throw CliError{kExitMalformed, "format must be csv or markdown"};
    }
    if (!a.out_path.empty()) {
        write_file(a.out_path, out.str());
        std::cout << "wrote " << a.out_path << "\n";
    } else {
        std::cout << out.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radio labelings of stacked-book graphs"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    CLI::App* construct = app.add_subcommand("construct", "build a graph, write JSON/DOT");
    construct->add_option("--kind", construct_args.kind, "stacked_book | star | path");
    construct->add_option("--m", construct_args.m, "star order");
    construct->add_option("--n", construct_args.n, "path order");
    construct->add_option("--out", construct_args.out_path, "graph JSON output path");
    construct->add_option("--dot", construct_args.dot_path, "DOT output path");
    construct->add_flag("--json", construct_args.json, "print graph JSON to stdout");

    BoundsArgs bounds_args;
    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the bound formulas");
    bounds->add_option("--m", bounds_args.m, "star order")->required();
    bounds->add_option("--n", bounds_args.n, "path order")->required();
    bounds->add_flag("--json", bounds_args.json, "machine-readable output");

    LabelArgs label_args;
    CLI::App* label = app.add_subcommand("label", "construct a valid radio labeling");
    label->add_option("--m", label_args.m, "star order")->required();
    label->add_option("--n", label_args.n, "path order")->required();
    label->add_option("--strategy", label_args.strategy, "paper | greedy-distance");
    label->add_option("--out", label_args.out_path, "labeling JSON output path");
    label->add_flag("--json", label_args.json, "machine-readable output");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "validate a labeling file against a graph");
    verify->add_option("--graph", verify_args.graph_path, "graph JSON path")->required();
    verify->add_option("--labeling", verify_args.labeling_path, "labeling JSON path")->required();
    verify->add_flag("--json", verify_args.json, "machine-readable output");

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "exact radio number by branch and bound");
    solve->add_option("--graph", solve_args.graph_path, "graph JSON path");
    solve->add_option("--m", solve_args.m, "star order (with --n, instead of --graph)");
    solve->add_option("--n", solve_args.n, "path order");
    solve->add_option("--node-budget", solve_args.node_budget, "max search nodes");
    solve->add_option("--time-budget", solve_args.time_budget, "max seconds");
    solve->add_option("--upper-start", solve_args.upper_start, "span of a known valid labeling");
    solve->add_option("--out", solve_args.out_path, "result JSON output path");
    solve->add_flag("--json", solve_args.json, "machine-readable output");

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "sweep bounds and spans over (m, n)");
    table->add_option("--m-from", table_args.m_from, "first star order");
    table->add_option("--m-to", table_args.m_to, "last star order");
    table->add_option("--n-from", table_args.n_from, "first path order");
    table->add_option("--n-to", table_args.n_to, "last path order (odd n are used)");
    table->add_option("--format", table_args.format, "csv | markdown");
    table->add_flag("--exact", table_args.exact, "also run the exact solver per instance");
    table->add_option("--node-budget", table_args.node_budget, "solver node budget per instance");
    table->add_option("--out", table_args.out_path, "output path");
    table->add_flag("--json", table_args.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitMalformed;
    }

    try {
        if (*construct) return run_construct(construct_args);
        if (*bounds) return run_bounds(bounds_args);
        if (*label) return run_label(label_args);
        if (*verify) return run_verify(verify_args);
        if (*solve) return run_solve(solve_args);
        if (*table) return run_table(table_args);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitMalformed;
}
