// Exercises the shared-library surface the way an external client would:
// only radiobook.h, opaque handles and status codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "radiobook.h"

namespace {

std::string take(char* text) {
    std::string out = text != nullptr ? text : "";
    rb_string_free(text);
    return out;
}

}  // namespace

TEST_CASE("graph lifecycle and queries") {
    rb_graph* g = nullptr;
    REQUIRE(rb_graph_stacked_book(5, 5, &g) == RB_OK);
    CHECK(rb_graph_num_vertices(g) == 25);
    CHECK(rb_graph_num_edges(g) == 40);
    CHECK(std::string(rb_graph_kind(g)) == "stacked_book");

    char* text = nullptr;
    REQUIRE(rb_graph_to_json(g, &text) == RB_OK);
    const std::string json_text = take(text);
    CHECK(json_text.find("\"stacked_book\"") != std::string::npos);

    rb_graph* back = nullptr;
    REQUIRE(rb_graph_from_json(json_text.c_str(), &back) == RB_OK);
    CHECK(rb_graph_num_vertices(back) == 25);
    rb_graph_free(back);
    rb_graph_free(g);
}

TEST_CASE("error codes carry messages") {
    rb_graph* g = nullptr;
    CHECK(rb_graph_star(2, &g) == RB_ERR_INVALID_ARG);
    CHECK(std::strlen(rb_last_error()) > 0);

    CHECK(rb_graph_from_json("{bad", &g) == RB_ERR_PARSE);

    long long value = 0;
    CHECK(rb_bound_lower_total(5, 4, &value) == RB_ERR_OUT_OF_RANGE);
    CHECK(rb_bound_upper_total(4, 5, &value) == RB_ERR_OUT_OF_RANGE);

    // disconnected graphs are reported as such
    rb_graph* disconnected = nullptr;
    REQUIRE(rb_graph_from_json(
                R"({"kind":"generic","m":null,"n":null,"num_vertices":4,"edges":[[0,1],[2,3]],"coords":null})",
                &disconnected) == RB_OK);
    rb_distances* dm = nullptr;
    CHECK(rb_distances_compute(disconnected, &dm) == RB_ERR_DISCONNECTED);
    rb_graph_free(disconnected);

    CHECK(std::string(rb_status_name(RB_ERR_PARSE)) == "RB_ERR_PARSE");
    CHECK(rb_graph_star(3, nullptr) == RB_ERR_INVALID_ARG);
}

TEST_CASE("distances and the closed form") {
    rb_graph* g = nullptr;
    REQUIRE(rb_graph_stacked_book(5, 5, &g) == RB_OK);
    rb_distances* dm = nullptr;
    REQUIRE(rb_distances_compute(g, &dm) == RB_OK);
    CHECK(rb_distances_diameter(dm) == 6);

    int d = -1;
    REQUIRE(rb_distances_get(dm, 0, 1, &d) == RB_OK);
    CHECK(d == 1);
    CHECK(rb_distances_get(dm, 0, 99, &d) == RB_ERR_INVALID_ARG);

    REQUIRE(rb_stacked_book_distance(5, 5, 2, 1, 3, 5, &d) == RB_OK);
    CHECK(d == 6);
    CHECK(rb_stacked_book_distance(5, 5, 9, 1, 1, 1, &d) == RB_ERR_INVALID_ARG);

    rb_distances_free(dm);
    rb_graph_free(g);
}

TEST_CASE("bounds through the C surface") {
    long long lower = 0, upper = 0;
    REQUIRE(rb_bound_lower_total(5, 5, &lower) == RB_OK);
    REQUIRE(rb_bound_upper_total(5, 5, &upper) == RB_OK);
    CHECK(lower == 68);
    CHECK(upper == 69);

    long long printed = 0;
    REQUIRE(rb_path_radio_number(5, &printed) == RB_OK);
    CHECK(printed == 10);

    char* text = nullptr;
    REQUIRE(rb_bounds_report_json(5, 5, &text) == RB_OK);
    const std::string report = take(text);
    CHECK(report.find("\"lower_total\": 68") != std::string::npos);
    CHECK(report.find("\"upper_total\": 69") != std::string::npos);

    REQUIRE(rb_bounds_report_text(4, 5, &text) == RB_OK);
    CHECK(take(text).find("not applicable") != std::string::npos);
}

TEST_CASE("constructive labeling, validation and span") {
    rb_labeling* f = nullptr;
    REQUIRE(rb_label_stacked_book(5, 5, "paper", &f) == RB_OK);

    long long span = 0;
    REQUIRE(rb_labeling_span(f, &span) == RB_OK);
    CHECK(span == 69);

    rb_graph* g = nullptr;
    REQUIRE(rb_graph_stacked_book(5, 5, &g) == RB_OK);
    rb_distances* dm = nullptr;
    REQUIRE(rb_distances_compute(g, &dm) == RB_OK);

    rb_validation* report = nullptr;
    REQUIRE(rb_validate(dm, f, &report) == RB_OK);
    CHECK(rb_validation_valid(report) == 1);
    CHECK(rb_validation_span(report) == 69);
    CHECK(rb_validation_num_violations(report) == 0);
    rb_validation_free(report);

    char* text = nullptr;
    REQUIRE(rb_labeling_to_json(g, f, &text) == RB_OK);
    const std::string labeling_json = take(text);
    rb_labeling* back = nullptr;
    REQUIRE(rb_labeling_from_json(g, labeling_json.c_str(), &back) == RB_OK);
    long long label = -1;
    REQUIRE(rb_labeling_get(back, 0, &label) == RB_OK);
    CHECK(label >= 0);
    rb_labeling_free(back);

    CHECK(rb_label_stacked_book(5, 5, "annealing", &f) == RB_ERR_INVALID_ARG);

    rb_labeling* heuristic = nullptr;
    REQUIRE(rb_label_stacked_book(5, 5, "greedy-distance", &heuristic) == RB_OK);
    rb_validation* hreport = nullptr;
    REQUIRE(rb_validate(dm, heuristic, &hreport) == RB_OK);
    CHECK(rb_validation_valid(hreport) == 1);
    rb_validation_free(hreport);
    rb_labeling_free(heuristic);

    rb_distances_free(dm);
    rb_graph_free(g);
    rb_labeling_free(f);
}

TEST_CASE("violations are enumerable") {
    rb_graph* g = nullptr;
    REQUIRE(rb_graph_path(3, &g) == RB_OK);
    rb_distances* dm = nullptr;
    REQUIRE(rb_distances_compute(g, &dm) == RB_OK);
    rb_labeling* f = nullptr;
    REQUIRE(rb_labeling_from_json(
                g,
                R"({"labels":[{"vertex":0,"label":0},{"vertex":1,"label":0},{"vertex":2,"label":0}]})",
                &f) == RB_OK);
    rb_validation* report = nullptr;
    REQUIRE(rb_validate(dm, f, &report) == RB_OK);
    CHECK(rb_validation_valid(report) == 0);
    REQUIRE(rb_validation_num_violations(report) == 3);
    int u, v, d;
    long long need, got;
    REQUIRE(rb_validation_violation(report, 0, &u, &v, &d, &need, &got) == RB_OK);
    CHECK(need > got);
    CHECK(rb_validation_violation(report, 99, &u, &v, &d, &need, &got) == RB_ERR_INVALID_ARG);

    char* text = nullptr;
    REQUIRE(rb_validation_to_json(report, &text) == RB_OK);
    CHECK(take(text).find("\"valid\": false") != std::string::npos);

    // a labeling missing a vertex is malformed, not merely invalid
    rb_labeling* partial = nullptr;
    REQUIRE(rb_labeling_from_json(g, R"({"labels":[{"vertex":0,"label":0}]})", &partial) == RB_OK);
    rb_validation* ignored = nullptr;
    CHECK(rb_validate(dm, partial, &ignored) == RB_ERR_INVALID_ARG);
    rb_labeling_free(partial);

    rb_validation_free(report);
    rb_labeling_free(f);
    rb_distances_free(dm);
    rb_graph_free(g);
}

TEST_CASE("normalize shifts the minimum to zero") {
    rb_graph* g = nullptr;
    REQUIRE(rb_graph_path(3, &g) == RB_OK);
    rb_labeling* f = nullptr;
    REQUIRE(rb_labeling_from_json(
                g,
                R"({"labels":[{"vertex":0,"label":5},{"vertex":1,"label":8},{"vertex":2,"label":6}]})",
                &f) == RB_OK);
    rb_labeling* norm = nullptr;
    REQUIRE(rb_labeling_normalize(f, &norm) == RB_OK);
    long long label = -1;
    REQUIRE(rb_labeling_get(norm, 0, &label) == RB_OK);
    CHECK(label == 0);
    REQUIRE(rb_labeling_get(norm, 1, &label) == RB_OK);
    CHECK(label == 3);
    rb_labeling_free(norm);
    rb_labeling_free(f);
    rb_graph_free(g);
}

TEST_CASE("solver through the C surface") {
    rb_graph* g = nullptr;
    REQUIRE(rb_graph_path(3, &g) == RB_OK);
    rb_distances* dm = nullptr;
    REQUIRE(rb_distances_compute(g, &dm) == RB_OK);

    rb_solve_result* result = nullptr;
    REQUIRE(rb_solve_exact(dm, nullptr, &result) == RB_OK);
    CHECK(std::string(rb_solve_result_status(result)) == "optimal");
    CHECK(rb_solve_result_radio_number(result) == 3);
    CHECK(rb_solve_result_nodes(result) > 0);

    rb_labeling* witness = nullptr;
    REQUIRE(rb_solve_result_witness(result, &witness) == RB_OK);
    rb_validation* report = nullptr;
    REQUIRE(rb_validate(dm, witness, &report) == RB_OK);
    CHECK(rb_validation_valid(report) == 1);
    rb_validation_free(report);
    rb_labeling_free(witness);

    char* text = nullptr;
    REQUIRE(rb_solve_result_to_json(result, g, &text) == RB_OK);
    CHECK(take(text).find("\"radio_number\": 3") != std::string::npos);
    rb_solve_result_free(result);

    rb_solve_options budget{1, 0.0, -1};
    rb_solve_result* interrupted = nullptr;
    REQUIRE(rb_solve_exact(dm, &budget, &interrupted) == RB_OK);
    CHECK(std::string(rb_solve_result_status(interrupted)) != "optimal");
    rb_solve_result_free(interrupted);

    rb_distances_free(dm);
    rb_graph_free(g);
}

TEST_CASE("dot export through the C surface") {
    rb_graph* g = nullptr;
    REQUIRE(rb_graph_stacked_book(3, 2, &g) == RB_OK);
    char* text = nullptr;
    REQUIRE(rb_graph_to_dot(g, nullptr, &text) == RB_OK);
    const std::string dot = take(text);
    CHECK(dot.find("s1p1") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    rb_graph_free(g);
}
