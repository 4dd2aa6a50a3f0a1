#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hforest/poly.hpp"

namespace hforest {

struct ArcTags {
    int32_t direction = -1;  // -1 = unset; 0 is reserved for fiber/diagonal arcs
    int32_t spin = -1;       // -1 = unset
    bool diagonal = false;
    bool vertical = false;
    int32_t base_arc = -1;   // -1 = none

    friend bool operator==(const ArcTags&, const ArcTags&) = default;
};

struct Arc {
    int32_t from = 0;
    int32_t to = 0;
    Polynomial weight;
    ArcTags tags;

    friend bool operator==(const Arc&, const Arc&) = default;
};

// Weighted digraph. Parallel arcs are kept distinct by arc id (their index
// in `arcs`); arc ordering is part of the value.
struct Digraph {
    int32_t n_vertices = 0;
    std::vector<Arc> arcs;
    std::vector<std::string> labels;  // empty, or one label per vertex

    friend bool operator==(const Digraph&, const Digraph&) = default;
};

// Complete digraph on p vertices; the arc into vertex e is weighted
// x(weight_index, e) and tagged {direction: weight_index, spin: e}.
Digraph complete_graph(int p, int weight_index);

// 2^n vertices labeled by bitstrings (coordinate i lives in bit i-1); the arc
// flipping coordinate i to value e is weighted x(i, e), tags {direction: i,
// spin: e}. n = 0 yields the single-vertex graph.
Digraph hypercube(int n);

// Adds one arc from every vertex to its antipode, weighted y and tagged
// {direction: 0, diagonal: true}. The input must be exactly hypercube(n).
Digraph add_diagonals(const Digraph& g);

// Cartesian product with vertex order row-major, g-major: (u, u') -> u*|h|+u'.
// Every replicated arc carries base_arc = its source arc id and keeps the
// source arc's weight and tags. With mark_right_vertical set the h-side
// replicas are additionally tagged vertical (the fiber arcs of a product with
// a complete-graph factor).
Digraph cartesian_product(const Digraph& g, const Digraph& h,
                          bool mark_right_vertical = false);

// Strong product with K_2: per base arc a, two straight copies (weight w(a)),
// two diagonal copies (weight w(|A|+a)); per base vertex, two vertical arcs
// where spin e means the arc points into copy e, weight x(0, e).
Digraph strong_product_k2(const Digraph& g);

struct BipartiteStrong {
    Digraph graph;
    std::vector<int32_t> forced_base_vertices;  // the fibers {i, i'}, i in [m]
};

// Complete bipartite graph on p+p vertices, built as strong_product_k2(K_p)
// with all straight arcs erased, plus the list of m fibers whose presence
// downstream checks condition on. Requires 0 <= m < p.
BipartiteStrong complete_bipartite_strong(int p, int m);

// Convenience families for catalogs and the CLI.
Digraph single_vertex();
Digraph single_arc();      // 2 vertices, one arc 0->1, weight w0
Digraph double_arc();      // 2 vertices, two parallel arcs 0->1, weights w0, w1
Digraph path3();           // undirected path on 3 vertices as 4 arcs
Digraph directed_triangle();

// Copy with every arc weight replaced by 1.
Digraph unit_weights(const Digraph& g);

// Lossless JSON round-trip. Weights serialize as a variable name or a decimal
// integer; anything else is rejected.
std::string graph_to_json(const Digraph& g);
Digraph graph_from_json(const std::string& text);

}  // namespace hforest
