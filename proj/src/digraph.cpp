#include "hforest/digraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <utility>

namespace hforest {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string vertex_label(const Digraph& g, int32_t v) {
    if (!g.labels.empty()) return g.labels[static_cast<size_t>(v)];
    return std::to_string(v);
}

}  // namespace

Digraph complete_graph(int p, int weight_index) {
    if (p < 1) throw InvalidSize("complete_graph: p must be >= 1");
    Digraph g;
    g.n_vertices = p;
    g.labels.reserve(static_cast<size_t>(p));
    for (int v = 0; v < p; ++v) g.labels.push_back(std::to_string(v));
    for (int u = 0; u < p; ++u) {
        for (int v = 0; v < p; ++v) {
            if (u == v) continue;
            Arc a;
            a.from = u;
            a.to = v;
            a.weight = Polynomial::variable(VarId::x(weight_index, v));
            a.tags.direction = weight_index;
            a.tags.spin = v;
            g.arcs.push_back(std::move(a));
        }
    }
    return g;
}

Digraph hypercube(int n) {
    if (n < 0) throw InvalidSize("hypercube: n must be >= 0");
    Digraph g;
    const int32_t size = 1 << n;
    g.n_vertices = size;
    g.labels.reserve(static_cast<size_t>(size));
    for (int32_t v = 0; v < size; ++v) {
        std::string label;
        for (int i = 0; i < n; ++i) label += char('0' + ((v >> i) & 1));
        g.labels.push_back(std::move(label));
    }
    for (int32_t u = 0; u < size; ++u) {
        for (int i = 1; i <= n; ++i) {
            const int32_t v = u ^ (1 << (i - 1));
            const int spin = (v >> (i - 1)) & 1;
            Arc a;
            a.from = u;
            a.to = v;
            a.weight = Polynomial::variable(VarId::x(i, spin));
            a.tags.direction = i;
            a.tags.spin = spin;
            g.arcs.push_back(std::move(a));
        }
    }
    return g;
}

Digraph add_diagonals(const Digraph& g) {
    int n = 0;
    while ((1 << n) < g.n_vertices) ++n;
    if ((1 << n) != g.n_vertices || !(g == hypercube(n))) {
        throw NotAHypercube("add_diagonals: input is not hypercube(n)");
    }
    Digraph out = g;
    const int32_t mask = g.n_vertices - 1;
    for (int32_t v = 0; v < g.n_vertices; ++v) {
        Arc a;
        a.from = v;
        a.to = v ^ mask;
        a.weight = Polynomial::variable(VarId::y());
        a.tags.direction = 0;
        a.tags.diagonal = true;
        out.arcs.push_back(std::move(a));
    }
    return out;
}

Digraph cartesian_product(const Digraph& g, const Digraph& h, bool mark_right_vertical) {
    Digraph out;
    out.n_vertices = g.n_vertices * h.n_vertices;
    out.labels.reserve(static_cast<size_t>(out.n_vertices));
    for (int32_t u = 0; u < g.n_vertices; ++u) {
        for (int32_t v = 0; v < h.n_vertices; ++v) {
            out.labels.push_back("(" + vertex_label(g, u) + "," + vertex_label(h, v) + ")");
        }
    }
    for (size_t id = 0; id < g.arcs.size(); ++id) {
        const Arc& a = g.arcs[id];
        for (int32_t w = 0; w < h.n_vertices; ++w) {
            Arc copy = a;
            copy.from = a.from * h.n_vertices + w;
            copy.to = a.to * h.n_vertices + w;
            copy.tags.base_arc = static_cast<int32_t>(id);
            out.arcs.push_back(std::move(copy));
        }
    }
    for (size_t id = 0; id < h.arcs.size(); ++id) {
        const Arc& a = h.arcs[id];
        for (int32_t w = 0; w < g.n_vertices; ++w) {
            Arc copy = a;
            copy.from = w * h.n_vertices + a.from;
            copy.to = w * h.n_vertices + a.to;
            copy.tags.base_arc = static_cast<int32_t>(id);
            copy.tags.vertical = copy.tags.vertical || mark_right_vertical;
            out.arcs.push_back(std::move(copy));
        }
    }
    return out;
}

Digraph strong_product_k2(const Digraph& g) {
    Digraph out;
    out.n_vertices = 2 * g.n_vertices;
    out.labels.reserve(static_cast<size_t>(out.n_vertices));
    for (int32_t u = 0; u < g.n_vertices; ++u) {
        for (int e = 0; e < 2; ++e) {
            out.labels.push_back("(" + vertex_label(g, u) + "," + std::to_string(e) + ")");
        }
    }
    const int32_t m = static_cast<int32_t>(g.arcs.size());
    for (int32_t id = 0; id < m; ++id) {
        const Arc& a = g.arcs[static_cast<size_t>(id)];
        for (int e = 0; e < 2; ++e) {
            Arc straight;
            straight.from = 2 * a.from + e;
            straight.to = 2 * a.to + e;
            straight.weight = Polynomial::variable(VarId::w(id));
            straight.tags.base_arc = id;
            out.arcs.push_back(std::move(straight));
        }
        for (int e = 0; e < 2; ++e) {
            Arc diag;
            diag.from = 2 * a.from + e;
            diag.to = 2 * a.to + (1 - e);
            diag.weight = Polynomial::variable(VarId::w(m + id));
            diag.tags.base_arc = id;
            diag.tags.diagonal = true;
            out.arcs.push_back(std::move(diag));
        }
    }
    for (int32_t u = 0; u < g.n_vertices; ++u) {
        for (int e = 0; e < 2; ++e) {
            // Spin e: the arc pointing into copy e.
            Arc vert;
            vert.from = 2 * u + (1 - e);
            vert.to = 2 * u + e;
            vert.weight = Polynomial::variable(VarId::x(0, e));
            vert.tags.direction = 0;
            vert.tags.spin = e;
            vert.tags.vertical = true;
            out.arcs.push_back(std::move(vert));
        }
    }
    return out;
}

BipartiteStrong complete_bipartite_strong(int p, int m) {
    if (p < 1) throw InvalidSize("complete_bipartite_strong: p must be >= 1");
    if (m < 0 || m >= p) throw InvalidSize("complete_bipartite_strong: m must satisfy 0 <= m < p");
    Digraph full = strong_product_k2(complete_graph(p, 1));
    BipartiteStrong out;
    out.graph.n_vertices = full.n_vertices;
    out.graph.labels = full.labels;
    for (const Arc& a : full.arcs) {
        if (a.tags.vertical || a.tags.diagonal) out.graph.arcs.push_back(a);
    }
    for (int i = 0; i < m; ++i) out.forced_base_vertices.push_back(i);
    return out;
}

Digraph single_vertex() {
    Digraph g;
    g.n_vertices = 1;
    return g;
}

Digraph single_arc() {
    Digraph g;
    g.n_vertices = 2;
    Arc a;
    a.from = 0;
    a.to = 1;
    a.weight = Polynomial::variable(VarId::w(0));
    g.arcs.push_back(std::move(a));
    return g;
}

Digraph double_arc() {
    Digraph g;
    g.n_vertices = 2;
    for (int i = 0; i < 2; ++i) {
        Arc a;
        a.from = 0;
        a.to = 1;
        a.weight = Polynomial::variable(VarId::w(i));
        g.arcs.push_back(std::move(a));
    }
    return g;
}

Digraph path3() {
    Digraph g;
    g.n_vertices = 3;
    const std::pair<int, int> ends[] = {{0, 1}, {1, 0}, {1, 2}, {2, 1}};
    for (int i = 0; i < 4; ++i) {
        Arc a;
        a.from = ends[i].first;
        a.to = ends[i].second;
        a.weight = Polynomial::variable(VarId::w(i));
        g.arcs.push_back(std::move(a));
    }
    return g;
}

Digraph directed_triangle() {
    Digraph g;
    g.n_vertices = 3;
    for (int i = 0; i < 3; ++i) {
        Arc a;
        a.from = i;
        a.to = (i + 1) % 3;
        a.weight = Polynomial::variable(VarId::w(i));
        g.arcs.push_back(std::move(a));
    }
    return g;
}

Digraph unit_weights(const Digraph& g) {
    Digraph out = g;
    for (Arc& a : out.arcs) a.weight = Polynomial(1);
    return out;
}

namespace {

std::string weight_to_string(const Polynomial& w) {
    if (w.is_zero()) return "0";
    if (w.term_count() == 1) {
        const auto& [m, c] = *w.terms().begin();
        if (m.is_unit()) return c.get_str();
        if (c == 1 && m.exponents().size() == 1 && m.exponents()[0].second == 1) {
            return m.exponents()[0].first.name();
        }
    }
    throw Error("graph_to_json: arc weight is neither a variable nor an integer: " +
                w.canonical_string());
}

Polynomial weight_from_string(const std::string& text) {
    if (auto v = VarId::parse(text)) return Polynomial::variable(*v);
    bool numeric = !text.empty();
    for (size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-'))) {
            numeric = false;
            break;
        }
    }
    if (numeric && text != "-") return Polynomial(BigInt(text));
    throw ParseError("unrecognized arc weight \"" + text + "\"");
}

}  // namespace

std::string graph_to_json(const Digraph& g) {
    ordered_json j;
    j["n_vertices"] = g.n_vertices;
    j["arcs"] = ordered_json::array();
    for (const Arc& a : g.arcs) {
        ordered_json ja;
        ja["from"] = a.from;
        ja["to"] = a.to;
        ja["weight"] = weight_to_string(a.weight);
        ordered_json tags;
        if (a.tags.direction >= 0) tags["direction"] = a.tags.direction; else tags["direction"] = nullptr;
        if (a.tags.spin >= 0) tags["spin"] = a.tags.spin; else tags["spin"] = nullptr;
        tags["diagonal"] = a.tags.diagonal;
        tags["vertical"] = a.tags.vertical;
        if (a.tags.base_arc >= 0) tags["base_arc"] = a.tags.base_arc; else tags["base_arc"] = nullptr;
        ja["tags"] = std::move(tags);
        j["arcs"].push_back(std::move(ja));
    }
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j.dump(2) + "\n";
}

Digraph graph_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("graph JSON: top level must be an object");
    if (!j.contains("n_vertices") || !j["n_vertices"].is_number_integer()) {
        throw ParseError("graph JSON: missing integer field \"n_vertices\"");
    }
    Digraph g;
    g.n_vertices = j["n_vertices"].get<int32_t>();
    if (g.n_vertices < 1) throw ParseError("graph JSON: n_vertices must be >= 1");
    if (!j.contains("arcs") || !j["arcs"].is_array()) {
        throw ParseError("graph JSON: missing array field \"arcs\"");
    }
    size_t idx = 0;
    for (const auto& ja : j["arcs"]) {
        const std::string where = "graph JSON: arcs[" + std::to_string(idx) + "]";
        if (!ja.is_object()) throw ParseError(where + " must be an object");
        if (!ja.contains("from") || !ja.contains("to") || !ja.contains("weight")) {
            throw ParseError(where + " needs \"from\", \"to\" and \"weight\"");
        }
        Arc a;
        if (!ja["from"].is_number_integer() || !ja["to"].is_number_integer()) {
            throw ParseError(where + ": endpoints must be integers");
        }
        a.from = ja["from"].get<int32_t>();
        a.to = ja["to"].get<int32_t>();
        if (a.from < 0 || a.from >= g.n_vertices || a.to < 0 || a.to >= g.n_vertices) {
            throw ParseError(where + ": endpoint out of range");
        }
        if (!ja["weight"].is_string()) throw ParseError(where + ": weight must be a string");
        try {
            a.weight = weight_from_string(ja["weight"].get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
        if (ja.contains("tags")) {
            const auto& tags = ja["tags"];
            if (!tags.is_object()) throw ParseError(where + ": tags must be an object");
            auto get_int = [&](const char* key, int32_t& out) {
                if (!tags.contains(key) || tags[key].is_null()) return;
                if (!tags[key].is_number_integer()) {
                    throw ParseError(where + ": tags." + key + " must be an integer or null");
                }
                out = tags[key].get<int32_t>();
            };
            auto get_bool = [&](const char* key, bool& out) {
                if (!tags.contains(key) || tags[key].is_null()) return;
                if (!tags[key].is_boolean()) {
                    throw ParseError(where + ": tags." + key + " must be a boolean");
                }
                out = tags[key].get<bool>();
            };
            get_int("direction", a.tags.direction);
            get_int("spin", a.tags.spin);
            get_bool("diagonal", a.tags.diagonal);
            get_bool("vertical", a.tags.vertical);
            get_int("base_arc", a.tags.base_arc);
        }
        g.arcs.push_back(std::move(a));
        ++idx;
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw ParseError("graph JSON: labels must be an array");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw ParseError("graph JSON: labels must be strings");
            g.labels.push_back(l.get<std::string>());
        }
        if (g.labels.size() != static_cast<size_t>(g.n_vertices)) {
            throw ParseError("graph JSON: labels must have one entry per vertex");
        }
    }
    return g;
}

}  // namespace hforest
