/* radiobook.h - C API for the radiobook shared library.
 *
 * Radio labelings of stacked-book graphs (star x path Cartesian products):
 * construction, distances, bound formulas, a bound-achieving labeling
 * scheme, a radio-condition validator and an exact branch-and-bound solver.
 *
 * All objects are opaque handles released with the matching _free function.
 * Calls return RB_OK or an error code; rb_last_error() describes the most
 * recent failure on the calling thread. Strings returned through char**
 * belong to the caller and are released with rb_string_free().
 */
#ifndef RADIOBOOK_H
#define RADIOBOOK_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rb_graph rb_graph;
typedef struct rb_distances rb_distances;
typedef struct rb_labeling rb_labeling;
typedef struct rb_validation rb_validation;
typedef struct rb_solve_result rb_solve_result;

typedef enum rb_status {
    RB_OK = 0,
    RB_ERR_INVALID_ARG = 1,
    RB_ERR_PARSE = 2,
    RB_ERR_DISCONNECTED = 3,
    RB_ERR_OUT_OF_RANGE = 4,
    RB_ERR_BOUND_EXCEEDED = 5,
    RB_ERR_STATE = 6,
    RB_ERR_INTERNAL = 7
} rb_status;

const char* rb_status_name(rb_status status);
const char* rb_last_error(void);
void rb_string_free(char* text);

/* ---- graphs ---- */
rb_status rb_graph_star(int m, rb_graph** out);
rb_status rb_graph_path(int n, rb_graph** out);
rb_status rb_graph_stacked_book(int m, int n, rb_graph** out);
rb_status rb_graph_cartesian_product(const rb_graph* g, const rb_graph* h, rb_graph** out);
rb_status rb_graph_from_json(const char* text, rb_graph** out);
rb_status rb_graph_to_json(const rb_graph* g, char** out_text);
rb_status rb_graph_to_dot(const rb_graph* g, const rb_labeling* f /* nullable */, char** out_text);
void rb_graph_free(rb_graph* g);
int rb_graph_num_vertices(const rb_graph* g);
int rb_graph_num_edges(const rb_graph* g);
/* "star", "path", "product", "stacked_book" or "generic" (static string). */
const char* rb_graph_kind(const rb_graph* g);

/* ---- distances ---- */
rb_status rb_distances_compute(const rb_graph* g, rb_distances** out);
void rb_distances_free(rb_distances* dm);
int rb_distances_diameter(const rb_distances* dm);
rb_status rb_distances_get(const rb_distances* dm, int u, int v, int* out);
/* Closed-form distance between (spoke_a, page_a) and (spoke_b, page_b). */
rb_status rb_stacked_book_distance(int m, int n, int spoke_a, int page_a, int spoke_b,
                                   int page_b, int* out);

/* ---- labelings ---- */
rb_status rb_labeling_from_json(const rb_graph* g, const char* text, rb_labeling** out);
rb_status rb_labeling_to_json(const rb_graph* g, const rb_labeling* f, char** out_text);
void rb_labeling_free(rb_labeling* f);
rb_status rb_labeling_span(const rb_labeling* f, long long* out);
rb_status rb_labeling_normalize(const rb_labeling* f, rb_labeling** out);
rb_status rb_labeling_get(const rb_labeling* f, int vertex, long long* out);

/* ---- validation ---- */
rb_status rb_validate(const rb_distances* dm, const rb_labeling* f, rb_validation** out);
void rb_validation_free(rb_validation* report);
int rb_validation_valid(const rb_validation* report);
long long rb_validation_span(const rb_validation* report);
int rb_validation_num_violations(const rb_validation* report);
rb_status rb_validation_violation(const rb_validation* report, int index, int* u, int* v,
                                  int* distance, long long* required_gap, long long* actual_gap);
rb_status rb_validation_to_json(const rb_validation* report, char** out_text);

/* ---- bound formulas (odd n >= 5; see the JSON report for validity notes) ---- */
rb_status rb_bound_lower_total(int m, int n, long long* out);
rb_status rb_bound_upper_total(int m, int n, long long* out);
rb_status rb_path_radio_number(int n, long long* out);
rb_status rb_bounds_report_json(int m, int n, char** out_text);
rb_status rb_bounds_report_text(int m, int n, char** out_text);

/* ---- constructive labeling ----
 * strategy: "paper" (pair-chain order whose span is guaranteed to stay
 * within rb_bound_upper_total for m >= 5) or "greedy-distance"
 * (farthest-next heuristic, validity only). */
rb_status rb_label_stacked_book(int m, int n, const char* strategy, rb_labeling** out);

/* ---- exact solver ----
 * Budgets <= 0 mean unlimited; upper_start < 0 means none. */
typedef struct rb_solve_options {
    long long node_budget;
    double time_budget_seconds;
    long long upper_start;
} rb_solve_options;

rb_status rb_solve_exact(const rb_distances* dm, const rb_solve_options* options /* nullable */,
                         rb_solve_result** out);
/* Like rb_solve_exact, but computes distances itself and, for stacked-book
 * graphs, prunes the interchangeable spoke classes. */
rb_status rb_solve_graph(const rb_graph* g, const rb_solve_options* options /* nullable */,
                         rb_solve_result** out);
void rb_solve_result_free(rb_solve_result* result);
/* "optimal", "incumbent_only" or "infeasible_budget" (static string). */
const char* rb_solve_result_status(const rb_solve_result* result);
long long rb_solve_result_radio_number(const rb_solve_result* result);
long long rb_solve_result_nodes(const rb_solve_result* result);
rb_status rb_solve_result_witness(const rb_solve_result* result, rb_labeling** out);
rb_status rb_solve_result_to_json(const rb_solve_result* result, const rb_graph* g /* nullable */,
                                  char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* RADIOBOOK_H */
