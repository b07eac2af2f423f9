#pragma once
// Linear algebra over the dual numbers R = k[eps]/(eps^2), done by
// realification: an R-module map is a k-map commuting with the eps action.
// A finitely presented R-module is free of rank r iff its k-dimension is 2r
// and the eps-multiplication kernel equals the eps image.

#include "zalg/matrix.hpp"

#include <optional>
#include <vector>

namespace zalg {

// realified coordinates of R^k: (base parts ..., eps parts ...)
template <class F>
std::vector<F> realify(const std::vector<Dual<F>>& v) {
    std::vector<F> out(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].a;
        out[v.size() + i] = v[i].b;
    }
    return out;
}

template <class F>
std::vector<Dual<F>> unrealify(const std::vector<F>& v) {
    std::size_t k = v.size() / 2;
    std::vector<Dual<F>> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = Dual<F>(v[i], v[k + i]);
    return out;
}

// rank of the module R^k / <relations> when it is free, nullopt otherwise
template <class F>
std::optional<std::size_t> free_rank_dual(std::size_t gens,
                                          const std::vector<std::vector<Dual<F>>>& relations) {
    const std::size_t k = gens;
    Subspace<F> rel(2 * k);
    for (const auto& r : relations) {
        if (r.size() != k) throw std::invalid_argument("free_rank_dual: relation length mismatch");
        rel.add(realify(r));
        // eps * relation
        std::vector<F> er(2 * k, F(0));
        for (std::size_t i = 0; i < k; ++i) er[k + i] = r[i].a;
        rel.add(er);
    }
    const std::size_t dim_v = 2 * k - rel.dim();
    if (dim_v % 2 != 0) return std::nullopt;

    // induced eps action on the quotient: eps * (a, b) = (0, a)
    auto comp = rel.complement_coords();
    Matrix<F> ebar(comp.size(), comp.size());
    for (std::size_t j = 0; j < comp.size(); ++j) {
        std::vector<F> e(2 * k, F(0));
        e[comp[j]] = F(1);
        std::vector<F> img(2 * k, F(0));
        for (std::size_t i = 0; i < k; ++i) img[k + i] = e[i];
        // reduce modulo relations, read complement coordinates
        for (std::size_t r = 0; r < rel.dim(); ++r) {
            auto row = rel.basis_row(r);
            std::size_t piv = 0;
            while (piv < row.size() && row[piv] == F(0)) ++piv;
            F f = img[piv];
            if (f == F(0)) continue;
            for (std::size_t q = 0; q < img.size(); ++q) img[q] = img[q] - f * row[q];
        }
        for (std::size_t i = 0; i < comp.size(); ++i) ebar(i, j) = img[comp[i]];
    }
    // eps^2 = 0 gives im <= ker; freeness is exactly rank = dim/2
    if (2 * rank(ebar) != dim_v) return std::nullopt;
    return dim_v / 2;
}

// Solve M x = b over R via realification; M is given row-major.
template <class F>
std::optional<std::vector<Dual<F>>> solve_dual(const Matrix<Dual<F>>& m,
                                               const std::vector<Dual<F>>& b) {
    // realified system: [A 0; B A] (x_a, x_b)^T = (b_a, b_b)^T
    Matrix<F> rm(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            rm(i, j) = m(i, j).a;
            rm(m.rows() + i, m.cols() + j) = m(i, j).a;
            rm(m.rows() + i, j) = m(i, j).b;
        }
    std::vector<F> rb(2 * m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rb[i] = b[i].a;
        rb[m.rows() + i] = b[i].b;
    }
    auto x = solve(rm, rb);
    if (!x) return std::nullopt;
    std::vector<Dual<F>> out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = Dual<F>((*x)[j], (*x)[m.cols() + j]);
    return out;
}

} // namespace zalg
