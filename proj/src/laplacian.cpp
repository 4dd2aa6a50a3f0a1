#include "hforest/laplacian.hpp"

namespace hforest {

PolyMatrix PolyMatrix::zero(int32_t dim) {
    PolyMatrix m;
    m.dim = dim;
    m.entries.resize(static_cast<size_t>(dim) * static_cast<size_t>(dim));
    return m;
}

PolyMatrix PolyMatrix::identity(int32_t dim) {
    PolyMatrix m = zero(dim);
    for (int32_t i = 0; i < dim; ++i) m.at(i, i) = Polynomial(1);
    return m;
}

Polynomial& PolyMatrix::at(int32_t i, int32_t j) {
    return entries[static_cast<size_t>(i) * static_cast<size_t>(dim) + static_cast<size_t>(j)];
}

const Polynomial& PolyMatrix::at(int32_t i, int32_t j) const {
    return entries[static_cast<size_t>(i) * static_cast<size_t>(dim) + static_cast<size_t>(j)];
}

PolyMatrix laplacian(const Digraph& g) {
    PolyMatrix m = PolyMatrix::zero(g.n_vertices);
    for (const Arc& a : g.arcs) {
        if (a.from == a.to) continue;
        m.at(a.from, a.to) -= a.weight;
        m.at(a.from, a.from) += a.weight;
    }
    return m;
}

Polynomial det_bareiss(const PolyMatrix& m) {
    std::vector<std::vector<Polynomial>> rows(static_cast<size_t>(m.dim));
    for (int32_t i = 0; i < m.dim; ++i) {
        rows[static_cast<size_t>(i)].assign(m.entries.begin() + static_cast<size_t>(i) * m.dim,
                                            m.entries.begin() + static_cast<size_t>(i + 1) * m.dim);
    }
    return determinant(std::move(rows));
}

Polynomial forest_enumerator_det(const Digraph& g) {
    PolyMatrix m = laplacian(g);
    const Polynomial t = Polynomial::variable(VarId::t());
    for (int32_t i = 0; i < m.dim; ++i) m.at(i, i) += t;
    return det_bareiss(m);
}

bool kronecker_sum_check(const Digraph& g, const Digraph& h) {
    const PolyMatrix lg = laplacian(g);
    const PolyMatrix lh = laplacian(h);
    const int32_t p = lg.dim;
    const int32_t q = lh.dim;
    PolyMatrix expected = PolyMatrix::zero(p * q);
    for (int32_t i = 0; i < p; ++i) {
        for (int32_t j = 0; j < p; ++j) {
            for (int32_t k = 0; k < q; ++k) {
                for (int32_t l = 0; l < q; ++l) {
                    Polynomial e;
                    if (k == l) e += lg.at(i, j);
                    if (i == j) e += lh.at(k, l);
                    expected.at(i * q + k, j * q + l) = std::move(e);
                }
            }
        }
    }
    return laplacian(cartesian_product(g, h)) == expected;
}

bool product_resultant_check(const Digraph& g, const Digraph& h) {
    const VarId t = VarId::t();
    const VarId s = VarId::s();
    const Polynomial fg = forest_enumerator_det(g);
    const Polynomial fh = forest_enumerator_det(h);

    Polynomial a = fg.substitute({{t, -Polynomial::variable(s)}});
    if (g.n_vertices % 2 != 0) a = -a;
    const Polynomial b =
        fh.substitute({{t, Polynomial::variable(t) + Polynomial::variable(s)}});

    const Polynomial via_resultant = resultant(a, b, s);
    const Polynomial direct = forest_enumerator_det(cartesian_product(g, h));
    return via_resultant == direct;
}

}  // namespace hforest
