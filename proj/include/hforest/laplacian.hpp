#pragma once

#include <vector>

#include "hforest/digraph.hpp"
#include "hforest/poly.hpp"

namespace hforest {

struct PolyMatrix {
    int32_t dim = 0;
    std::vector<Polynomial> entries;  // row-major, dim*dim

    static PolyMatrix zero(int32_t dim);
    static PolyMatrix identity(int32_t dim);

    Polynomial& at(int32_t i, int32_t j);
    const Polynomial& at(int32_t i, int32_t j) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
};

// L[i][j] = -w_{i,j} for i != j (parallel arcs summed), L[i][i] = sum of the
// weights of the non-loop arcs leaving i. Loops cancel against their own
// diagonal contribution and are skipped entirely.
PolyMatrix laplacian(const Digraph& g);

// Exact fraction-free determinant.
Polynomial det_bareiss(const PolyMatrix& m);

// det(L(g) + t*I): the rooted-forest enumerator sum_F t^{k(F)} w(F).
Polynomial forest_enumerator_det(const Digraph& g);

// True iff L(g x h) equals L(g) (x) I + I (x) L(h) entry for entry under the
// row-major product vertex order.
bool kronecker_sum_check(const Digraph& g, const Digraph& h);

// Checks that the enumerator of g x h factors through the roots of the factor
// enumerators: det route vs resultant_s((-1)^p F_g(-s), F_h(t+s)).
bool product_resultant_check(const Digraph& g, const Digraph& h);

}  // namespace hforest
