#include "serialize.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace radiobook {

using nlohmann::json;

namespace {

json require_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

long long int_field(const json& j, const char* key) {
    const json v = require_field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<long long>();
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("not valid JSON");
    return j;
}

std::vector<std::pair<int, int>> sorted_edges(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.adj[u])
            if (u < v) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::string node_text(const Graph& g, int v, const Labeling* f) {
    std::string text;
    if (g.has_coords()) {
        const BookCoord c = g.coords[v];
        text = "s" + std::to_string(c.spoke) + "p" + std::to_string(c.page);
    } else {
        text = std::to_string(v);
    }
    if (f != nullptr) text += ":" + std::to_string((*f)[v]);
    return text;
}

}  // namespace

std::string graph_to_json(const Graph& g) {
    json j;
    j["kind"] = kind_name(g.kind);
    j["m"] = g.m > 0 ? json(g.m) : json(nullptr);
    j["n"] = g.n > 0 ? json(g.n) : json(nullptr);
    j["num_vertices"] = g.num_vertices();
    json edges = json::array();
    for (auto [u, v] : sorted_edges(g)) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_coords()) {
        json coords = json::array();
        for (const BookCoord& c : g.coords) coords.push_back({c.spoke, c.page});
        j["coords"] = std::move(coords);
    } else {
        j["coords"] = nullptr;
    }
    return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
    const json j = parse(text);
    const std::string kind_str = require_field(j, "kind").get<std::string>();
    const auto kind = kind_from_name(kind_str);
    if (!kind) throw ParseError("unknown graph kind \"" + kind_str + "\"");
    const long long num_vertices = int_field(j, "num_vertices");
    if (num_vertices < 1 || num_vertices > 1'000'000) throw ParseError("num_vertices out of range");

    std::vector<std::pair<int, int>> edges;
    for (const json& e : require_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    Graph g;
    try {
        g = from_edges(static_cast<int>(num_vertices), edges, *kind);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    const json m = require_field(j, "m");
    const json n = require_field(j, "n");
    if (m.is_number_integer()) g.m = m.get<int>();
    if (n.is_number_integer()) g.n = n.get<int>();

    if (*kind == GraphKind::stacked_book) {
        if (g.m < 3 || g.n < 2) throw ParseError("stacked_book graph needs integer m >= 3 and n >= 2");
        const json coords = require_field(j, "coords");
        if (!coords.is_array() || coords.size() != static_cast<size_t>(num_vertices))
            throw ParseError("stacked_book graph needs one [spoke, page] per vertex");
        g.coords.resize(num_vertices);
        std::vector<bool> seen(static_cast<size_t>(g.m) * g.n, false);
        for (size_t v = 0; v < coords.size(); ++v) {
            const json& c = coords[v];
            if (!c.is_array() || c.size() != 2) throw ParseError("coord entries must be [spoke, page]");
            const int spoke = c[0].get<int>();
            const int page = c[1].get<int>();
            if (spoke < 1 || spoke > g.m || page < 1 || page > g.n)
                throw ParseError("coordinate out of range");
            const size_t slot = static_cast<size_t>(page - 1) * g.m + (spoke - 1);
            if (seen[slot]) throw ParseError("duplicate coordinate");
            seen[slot] = true;
            g.coords[v] = BookCoord{spoke, page};
        }
        if (num_vertices != static_cast<long long>(g.m) * g.n)
            throw ParseError("stacked_book graph must have m*n vertices");
        // Structural check: star edges within a page, path edges along a spoke.
        long long edge_count = 0;
        for (int u = 0; u < g.num_vertices(); ++u) {
            for (int v : g.adj[u]) {
                if (u > v) continue;
                ++edge_count;
                const BookCoord a = g.coords[u], b = g.coords[v];
                const bool star_edge = a.page == b.page && (a.spoke == 1 || b.spoke == 1);
                const bool path_edge = a.spoke == b.spoke && std::abs(a.page - b.page) == 1;
                if (!star_edge && !path_edge)
                    throw ParseError("edge inconsistent with stacked_book coordinates");
            }
        }
        if (edge_count != static_cast<long long>(g.n) * (g.m - 1) + static_cast<long long>(g.m) * (g.n - 1))
            throw ParseError("stacked_book graph has wrong edge count");
    }
    return g;
}

std::string labeling_to_json(const Graph& g, const Labeling& f) {
    if (f.size() != g.num_vertices())
        throw std::invalid_argument("labeling_to_json: size mismatch");
    json j;
    if (g.kind == GraphKind::stacked_book)
        j["graph_ref"] = "stacked_book_" + std::to_string(g.m) + "_" + std::to_string(g.n);
    json labels = json::array();
    for (int v = 0; v < f.size(); ++v) {
        if (f[v] == kUnlabeled) continue;
        json entry;
        if (g.has_coords()) {
            entry["spoke"] = g.coords[v].spoke;
            entry["page"] = g.coords[v].page;
        } else {
            entry["vertex"] = v;
        }
        entry["label"] = f[v];
        labels.push_back(std::move(entry));
    }
    j["labels"] = std::move(labels);
    return j.dump(2) + "\n";
}

Labeling labeling_from_json(const Graph& g, const std::string& text) {
    const json j = parse(text);
    const json labels = require_field(j, "labels");
    if (!labels.is_array()) throw ParseError("\"labels\" must be an array");
    Labeling f = Labeling::empty(g.num_vertices());
    for (const json& entry : labels) {
        int v;
        if (entry.contains("vertex")) {
            v = static_cast<int>(int_field(entry, "vertex"));
            if (v < 0 || v >= g.num_vertices()) throw ParseError("vertex out of range");
        } else {
            const int spoke = static_cast<int>(int_field(entry, "spoke"));
            const int page = static_cast<int>(int_field(entry, "page"));
            try {
                v = g.vertex_at(BookCoord{spoke, page});
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
        const long long label = int_field(entry, "label");
        if (label < 0) throw ParseError("labels must be non-negative");
        if (f[v] != kUnlabeled) throw ParseError("vertex labeled twice");
        f[v] = label;
    }
    return f;
}

std::string export_dot(const Graph& g, const Labeling* f) {
    // An all-holes labeling is treated as no labeling.
    if (f != nullptr && std::none_of(f->labels.begin(), f->labels.end(),
                                     [](long long x) { return x != kUnlabeled; }))
        f = nullptr;
    std::ostringstream out;
    out << "graph radiobook {\n  node [shape=circle];\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        out << "  v" << v << " [label=\"" << node_text(g, v, f) << "\"];\n";
    for (auto [u, v] : sorted_edges(g)) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string validation_to_json(const ValidationReport& report) {
    json j;
    j["valid"] = report.valid;
    j["span"] = report.span;
    json violations = json::array();
    for (const Violation& v : report.violations) {
        violations.push_back({{"u", v.u},
                              {"v", v.v},
                              {"distance", v.distance},
                              {"required_gap", v.required_gap},
                              {"actual_gap", v.actual_gap}});
    }
    j["violations"] = std::move(violations);
    return j.dump(2) + "\n";
}

namespace {

void put_bound(json& j, const char* key, const std::optional<long long>& value,
               const std::string& note, json& notes) {
    j[key] = value ? json(*value) : json(nullptr);
    if (!note.empty()) notes[key] = note;
}

}  // namespace

std::string bounds_report_to_json(const BoundsReport& r) {
    json j;
    j["m"] = r.m;
    j["n"] = r.n;
    json notes = json::object();
    put_bound(j, "lower_total", r.lower_total, r.note_lower_total, notes);
    put_bound(j, "upper_total", r.upper_total, r.note_upper_total, notes);
    put_bound(j, "anchor_triple_lower", r.anchor_triple_lower, r.note_anchor_triple_lower, notes);
    put_bound(j, "anchor_triple_upper", r.anchor_triple_upper, r.note_anchor_triple_upper, notes);
    put_bound(j, "star_pair_lower", r.star_pair_lower, r.note_star_pair_lower, notes);
    put_bound(j, "inner_pages_lower", r.inner_pages_lower, r.note_inner_pages_lower, notes);
    put_bound(j, "inner_pages_upper", r.inner_pages_upper, r.note_inner_pages_upper, notes);
    put_bound(j, "mid_label_class1", r.mid_label_class1, r.note_mid_label_class1, notes);
    put_bound(j, "mid_label_class2", r.mid_label_class2, r.note_mid_label_class2, notes);
    put_bound(j, "mid_label_sum", r.mid_label_sum, r.note_mid_label_sum, notes);
    j["notes"] = std::move(notes);
    return j.dump(2) + "\n";
}

std::string bounds_report_to_text(const BoundsReport& r) {
    const std::pair<const char*, std::pair<const std::optional<long long>*, const std::string*>> rows[] = {
        {"lower_total", {&r.lower_total, &r.note_lower_total}},
        {"upper_total", {&r.upper_total, &r.note_upper_total}},
        {"anchor_triple_lower", {&r.anchor_triple_lower, &r.note_anchor_triple_lower}},
        {"anchor_triple_upper", {&r.anchor_triple_upper, &r.note_anchor_triple_upper}},
        {"star_pair_lower", {&r.star_pair_lower, &r.note_star_pair_lower}},
        {"inner_pages_lower", {&r.inner_pages_lower, &r.note_inner_pages_lower}},
        {"inner_pages_upper", {&r.inner_pages_upper, &r.note_inner_pages_upper}},
        {"mid_label_class1", {&r.mid_label_class1, &r.note_mid_label_class1}},
        {"mid_label_class2", {&r.mid_label_class2, &r.note_mid_label_class2}},
        {"mid_label_sum", {&r.mid_label_sum, &r.note_mid_label_sum}},
    };
    std::ostringstream out;
    out << "bounds for stacked-book graph m=" << r.m << " n=" << r.n << "\n";
    for (const auto& [name, cell] : rows) {
        out << "  " << name;
        for (size_t i = std::string(name).size(); i < 22; ++i) out << ' ';
        if (cell.first->has_value())
            out << **cell.first;
        else
            out << "-";
        if (!cell.second->empty()) out << "    (" << *cell.second << ")";
        out << "\n";
    }
    return out.str();
}

std::string solve_result_to_json(const SolveResult& r, const Graph* g) {
    json j;
    j["status"] = solve_status_name(r.status);
    j["radio_number"] = r.status == SolveStatus::infeasible_budget ? json(nullptr) : json(r.radio_number);
    j["nodes_explored"] = r.nodes_explored;
    if (r.witness) {
        json labels = json::array();
        const Labeling& f = *r.witness;
        for (int v = 0; v < f.size(); ++v) {
            json entry;
            if (g != nullptr && g->has_coords()) {
                entry["spoke"] = g->coords[v].spoke;
                entry["page"] = g->coords[v].page;
            } else {
                entry["vertex"] = v;
            }
            entry["label"] = f[v];
            labels.push_back(std::move(entry));
        }
        j["witness"] = {{"labels", std::move(labels)}};
    } else {
        j["witness"] = nullptr;
    }
    return j.dump(2) + "\n";
}

}  // namespace radiobook
