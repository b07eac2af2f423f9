#pragma once
// Test-only oracle: the full (unnormalized) bar complex of a thread algebra,
// tuples ranging over all basis elements including identities, assembled
// densely. Independent of the normalized sparse path in the library; both
// compute Hochschild cohomology, so their dimensions must agree exactly.

#include "zalg/thread_algebra.hpp"
#include "zalg/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace zalg_test {

struct FullBar {
    const zalg::ThreadAlgebra<zalg::Rational>* alg;
    using Ref = std::tuple<int, int, std::size_t>;
    std::vector<std::vector<std::vector<Ref>>> tuples;
    std::vector<std::vector<std::size_t>> offsets;
    std::vector<std::size_t> dims;

    explicit FullBar(const zalg::ThreadAlgebra<zalg::Rational>& a, int max_arity) : alg(&a) {
        using zalg::Rational;
        std::vector<Ref> all;
        for (int m = a.lo(); m <= a.hi(); ++m)
            for (int n = m; n <= a.hi(); ++n)
                for (std::size_t i = 0; i < a.dim(n, m); ++i) all.emplace_back(n, m, i);
        std::sort(all.begin(), all.end()); // tuple lists must be lex-sorted for lookup
        tuples.resize(static_cast<std::size_t>(max_arity) + 1);
        tuples[0].push_back({});
        for (int p = 1; p <= max_arity; ++p) {
            if (p == 1) {
                for (auto& r : all) tuples[1].push_back({r});
            } else {
                for (auto& t : tuples[static_cast<std::size_t>(p - 1)])
                    for (auto& r : all)
                        if (std::get<1>(t.back()) == std::get<0>(r)) {
                            auto nt = t;
                            nt.push_back(r);
                            tuples[static_cast<std::size_t>(p)].push_back(std::move(nt));
                        }
            }
        }
        offsets.resize(tuples.size());
        dims.resize(tuples.size());
        for (int o = a.lo(); o <= a.hi(); ++o) offsets[0].push_back(dims[0]++);
        for (std::size_t p = 1; p < tuples.size(); ++p) {
            std::size_t off = 0;
            for (auto& t : tuples[p]) {
                offsets[p].push_back(off);
                off += a.dim(std::get<0>(t.front()), std::get<1>(t.back()));
            }
            dims[p] = off;
        }
    }

    zalg::Matrix<zalg::Rational> differential(int p) const {
        using zalg::Matrix;
        using zalg::Rational;
        const auto& a = *alg;
        if (p == 0) {
            Matrix<Rational> m(dims[1], dims[0]);
            for (std::size_t t = 0; t < tuples[1].size(); ++t) {
                auto [n, mm, i] = tuples[1][t][0];
                auto e = a.basis_element(n, mm, i);
                for (std::size_t q = 0; q < e.coords.size(); ++q) {
                    m(offsets[1][t] + q, static_cast<std::size_t>(mm - a.lo())) += e.coords[q];
                    m(offsets[1][t] + q, static_cast<std::size_t>(n - a.lo())) -= e.coords[q];
                }
            }
            return m;
        }
        Matrix<Rational> m(dims[static_cast<std::size_t>(p + 1)],
                           dims[static_cast<std::size_t>(p)]);
        const auto& outs = tuples[static_cast<std::size_t>(p + 1)];
        for (std::size_t ot = 0; ot < outs.size(); ++ot) {
            const auto& tup = outs[ot];
            auto add_block = [&](std::size_t t_in, const Matrix<Rational>& valmap,
                                 const Rational& s) {
                for (std::size_t r = 0; r < valmap.rows(); ++r)
                    for (std::size_t c = 0; c < valmap.cols(); ++c)
                        if (valmap(r, c) != 0)
                            m(offsets[static_cast<std::size_t>(p + 1)][ot] + r,
                              offsets[static_cast<std::size_t>(p)][t_in] + c) += s * valmap(r, c);
            };
            {
                std::vector<Ref> rest(tup.begin() + 1, tup.end());
                std::size_t rt = index_of(p, rest);
                auto [bn, bm, bi] = tup[0];
                std::size_t vin = alg->dim(std::get<0>(rest.front()), std::get<1>(rest.back()));
                std::size_t vout = alg->dim(bn, std::get<1>(rest.back()));
                Matrix<Rational> vm(vout, vin);
                for (std::size_t w = 0; w < vin; ++w) {
                    auto img = a.compose(a.basis_element(bn, bm, bi),
                                         a.basis_element(std::get<0>(rest.front()),
                                                         std::get<1>(rest.back()), w));
                    for (std::size_t q = 0; q < vout; ++q) vm(q, w) = img.coords[q];
                }
                add_block(rt, vm, Rational(1));
            }
            for (int t = 1; t <= p; ++t) {
                auto [xn, xm, xi] = tup[static_cast<std::size_t>(t - 1)];
                auto [yn, ym, yi] = tup[static_cast<std::size_t>(t)];
                auto prod = a.compose(a.basis_element(xn, xm, xi), a.basis_element(yn, ym, yi));
                Rational s = (t % 2 == 0) ? Rational(1) : Rational(-1);
                for (std::size_t k = 0; k < prod.coords.size(); ++k) {
                    if (prod.coords[k] == 0) continue;
                    auto nt = tup;
                    nt.erase(nt.begin() + (t - 1), nt.begin() + (t + 1));
                    nt.insert(nt.begin() + (t - 1), Ref{xn, ym, k});
                    std::size_t rt = index_of(p, nt);
                    std::size_t vd = alg->dim(std::get<0>(tup.front()), std::get<1>(tup.back()));
                    Matrix<Rational> vm(vd, vd);
                    for (std::size_t q = 0; q < vd; ++q) vm(q, q) = prod.coords[k];
                    add_block(rt, vm, s);
                }
            }
            {
                std::vector<Ref> rest(tup.begin(), tup.end() - 1);
                std::size_t rt = index_of(p, rest);
                auto [bn, bm, bi] = tup.back();
                std::size_t vin = alg->dim(std::get<0>(rest.front()), std::get<1>(rest.back()));
                std::size_t vout = alg->dim(std::get<0>(rest.front()), bm);
                Matrix<Rational> vm(vout, vin);
                for (std::size_t w = 0; w < vin; ++w) {
                    auto img = a.compose(a.basis_element(std::get<0>(rest.front()),
                                                         std::get<1>(rest.back()), w),
                                         a.basis_element(bn, bm, bi));
                    for (std::size_t q = 0; q < vout; ++q) vm(q, w) = img.coords[q];
                }
                add_block(rt, vm, (p % 2 == 0) ? zalg::Rational(-1) : zalg::Rational(1));
            }
        }
        return m;
    }

    std::size_t index_of(int p, const std::vector<Ref>& t) const {
        const auto& ts = tuples[static_cast<std::size_t>(p)];
        auto it = std::lower_bound(ts.begin(), ts.end(), t);
        if (it == ts.end() || *it != t) throw std::logic_error("bar oracle: tuple not found");
        return static_cast<std::size_t>(it - ts.begin());
    }

    std::vector<std::size_t> cohomology(int maxdeg) const {
        std::vector<std::size_t> ranks;
        for (int p = 0; p <= maxdeg; ++p) ranks.push_back(zalg::rank(differential(p)));
        std::vector<std::size_t> h;
        for (int p = 0; p <= maxdeg; ++p) {
            std::size_t rin = (p == 0) ? 0 : ranks[static_cast<std::size_t>(p - 1)];
            h.push_back(dims[static_cast<std::size_t>(p)] - rin -
                        ranks[static_cast<std::size_t>(p)]);
        }
        return h;
    }
};

} // namespace zalg_test
