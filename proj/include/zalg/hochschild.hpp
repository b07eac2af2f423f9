#pragma once
// Normalized Hochschild cochain complex of a connected thread algebra (a
// window algebra is handled by restriction to a thread over its own object
// range). Cochains assign to composable tuples of non-identity basis
// elements a value in the composite hom-space; all differentials are
// assembled sparsely so the interior-window computations stay tractable.

#include "zalg/sparse.hpp"
#include "zalg/thread_algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zalg {

template <class S>
class HochschildComplex {
public:
    using Arrow = typename ThreadAlgebra<S>::BasisRef;

    HochschildComplex(const ThreadAlgebra<S>& alg, int max_arity) : alg_(&alg) {
        for (int o = alg.lo(); o <= alg.hi(); ++o)
            if (alg.dim(o, o) != 1)
                throw std::invalid_argument("HochschildComplex: connected algebras only");
        // arity 0: one value per object
        tuples_.push_back({});
        for (int o = alg.lo(); o <= alg.hi(); ++o) tuples_[0].push_back({});
        // composable tuples of non-identity arrows
        for (int p = 1; p <= max_arity; ++p) {
            std::vector<std::vector<std::size_t>> out;
            if (p == 1) {
                for (std::size_t a = 0; a < alg.arrows().size(); ++a) out.push_back({a});
            } else {
                for (const auto& t : tuples_[static_cast<std::size_t>(p - 1)]) {
                    int src_last = alg.arrows()[t.back()].src;
                    for (std::size_t a = 0; a < alg.arrows().size(); ++a)
                        if (alg.arrows()[a].tgt == src_last) {
                            auto nt = t;
                            nt.push_back(a);
                            out.push_back(std::move(nt));
                        }
                }
            }
            tuples_.push_back(std::move(out));
        }
        // variable offsets: per arity, per tuple, a block of value coordinates
        offsets_.resize(tuples_.size());
        dims_.resize(tuples_.size());
        for (std::size_t p = 0; p < tuples_.size(); ++p) {
            std::size_t off = 0;
            for (std::size_t t = 0; t < tuples_[p].size(); ++t) {
                offsets_[p].push_back(off);
                off += value_dim(static_cast<int>(p), t);
            }
            dims_[p] = off;
        }
    }

    const ThreadAlgebra<S>& algebra() const { return *alg_; }
    int max_arity() const { return static_cast<int>(tuples_.size()) - 1; }
    std::size_t dim(int p) const { return dims_.at(static_cast<std::size_t>(p)); }
    const std::vector<std::vector<std::size_t>>& tuples(int p) const {
        return tuples_[static_cast<std::size_t>(p)];
    }

    // (target, source) pair of the composite hom-space of a tuple
    std::pair<int, int> value_pair(int p, std::size_t t) const {
        if (p == 0) {
            int o = alg_->lo() + static_cast<int>(t);
            return {o, o};
        }
        const auto& tup = tuples_[static_cast<std::size_t>(p)][t];
        return {alg_->arrows()[tup.front()].tgt, alg_->arrows()[tup.back()].src};
    }

    std::size_t value_dim(int p, std::size_t t) const {
        auto [n, m] = value_pair(p, t);
        return alg_->dim(n, m);
    }

    std::size_t var(int p, std::size_t t, std::size_t v) const {
        return offsets_[static_cast<std::size_t>(p)][t] + v;
    }

    std::optional<std::size_t> tuple_index(int p, const std::vector<std::size_t>& tup) const {
        const auto& ts = tuples_[static_cast<std::size_t>(p)];
        auto it = std::lower_bound(ts.begin(), ts.end(), tup);
        if (it == ts.end() || *it != tup) return std::nullopt;
        return static_cast<std::size_t>(it - ts.begin());
    }

    // rows of the differential d^p : C^p -> C^{p+1}, one sparse row per
    // output coordinate (tuple of arity p+1, value index)
    std::vector<SparseVec<S>> differential_rows(int p) const {
        const auto& alg = *alg_;
        std::vector<SparseVec<S>> rows;
        if (p + 1 > max_arity()) throw std::invalid_argument("differential beyond max arity");
        const auto& outs = tuples_[static_cast<std::size_t>(p + 1)];
        for (std::size_t ot = 0; ot < outs.size(); ++ot) {
            const auto& tup = outs[ot];
            std::size_t vd = value_dim(p + 1, ot);
            std::vector<SparseVec<S>> block(vd);
            auto add = [&](std::size_t invar_base, const std::vector<std::vector<S>>& valmap) {
                // valmap[w] = coordinates of the image of input value-basis w
                for (std::size_t w = 0; w < valmap.size(); ++w)
                    for (std::size_t q = 0; q < valmap[w].size(); ++q)
                        if (valmap[w][q] != S(0))
                            block[q].emplace_back(static_cast<std::uint32_t>(invar_base + w),
                                                  valmap[w][q]);
            };
            if (p == 0) {
                // (dc)(a) = a o c_src - c_tgt o a
                const Arrow& a = alg.arrows()[tup[0]];
                auto ea = alg.basis_element(a.tgt, a.src, a.idx);
                {
                    auto img = alg.compose(ea, alg.unit(a.src));
                    std::vector<std::vector<S>> vm{img.coords};
                    add(var(0, static_cast<std::size_t>(a.src - alg.lo()), 0), vm);
                }
                {
                    auto img = alg.compose(alg.unit(a.tgt), ea);
                    for (auto& x : img.coords) x = -x;
                    std::vector<std::vector<S>> vm{img.coords};
                    add(var(0, static_cast<std::size_t>(a.tgt - alg.lo()), 0), vm);
                }
            } else {
                // leading term: b0 o phi(b1..bp)
                {
                    std::vector<std::size_t> rest(tup.begin() + 1, tup.end());
                    auto rt = tuple_index(p, rest);
                    const Arrow& b0 = alg.arrows()[tup[0]];
                    auto [vn, vm_] = value_pair(p, *rt);
                    std::vector<std::vector<S>> vm(alg.dim(vn, vm_));
                    for (std::size_t w = 0; w < vm.size(); ++w)
                        vm[w] = alg.table(b0.tgt, b0.src, vm_, b0.idx, w);
                    add(var(p, *rt, 0), vm);
                }
                // middle terms: (-1)^t phi(b0, ..., b_{t-1} o b_t, ..., bp)
                for (int t = 1; t <= p; ++t) {
                    const Arrow& x = alg.arrows()[tup[static_cast<std::size_t>(t - 1)]];
                    const Arrow& y = alg.arrows()[tup[static_cast<std::size_t>(t)]];
                    S sgn = (t % 2 == 0) ? S(1) : S(-1);
                    // expand x o y over the basis of a(x.tgt, y.src)
                    for (std::size_t k = 0; k < alg.dim(x.tgt, y.src); ++k) {
                        const auto& coeffs = alg.table(x.tgt, x.src, y.src, x.idx, y.idx);
                        if (coeffs[k] == S(0)) continue;
                        // locate the arrow index of basis element k
                        std::size_t ai = arrow_of(x.tgt, y.src, k);
                        auto nt = tup;
                        nt.erase(nt.begin() + (t - 1), nt.begin() + (t + 1));
                        nt.insert(nt.begin() + (t - 1), ai);
                        auto rt = tuple_index(p, nt);
                        if (!rt) continue;
                        std::vector<std::vector<S>> vm(vd);
                        for (std::size_t w = 0; w < vd; ++w) {
                            vm[w].assign(vd, S(0));
                            vm[w][w] = sgn * coeffs[k];
                        }
                        add(var(p, *rt, 0), vm);
                    }
                }
                // trailing term: (-1)^{p+1} phi(b0..b_{p-1}) o bp
                {
                    std::vector<std::size_t> rest(tup.begin(), tup.end() - 1);
                    auto rt = tuple_index(p, rest);
                    const Arrow& bp = alg.arrows()[tup.back()];
                    S sgn = (p % 2 == 0) ? S(-1) : S(1);
                    auto [vn, vm_] = value_pair(p, *rt);
                    std::vector<std::vector<S>> vm(alg.dim(vn, vm_));
                    for (std::size_t w = 0; w < vm.size(); ++w) {
                        vm[w] = alg.table(vn, vm_, bp.src, w, bp.idx);
                        for (auto& xx : vm[w]) xx = sgn * xx;
                    }
                    add(var(p, *rt, 0), vm);
                }
            }
            for (auto& r : block) {
                std::sort(r.begin(), r.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                SparseVec<S> merged;
                for (auto& e : r) {
                    if (!merged.empty() && merged.back().first == e.first)
                        merged.back().second += e.second;
                    else
                        merged.push_back(e);
                }
                merged.erase(std::remove_if(merged.begin(), merged.end(),
                                            [](const auto& e) { return e.second == S(0); }),
                             merged.end());
                rows.push_back(std::move(merged));
            }
        }
        return rows;
    }

private:
    std::size_t arrow_of(int tgt, int src, std::size_t idx) const {
        const auto& as = alg_->arrows();
        for (std::size_t a = 0; a < as.size(); ++a)
            if (as[a].tgt == tgt && as[a].src == src && as[a].idx == idx) return a;
        throw std::logic_error("arrow_of: basis element not found");
    }

    const ThreadAlgebra<S>* alg_;
    std::vector<std::vector<std::vector<std::size_t>>> tuples_; // per arity
    std::vector<std::vector<std::size_t>> offsets_;
    std::vector<std::size_t> dims_;
};

// cohomology dimensions H^0 .. H^max of the normalized complex
template <class F>
std::vector<std::size_t> hochschild_dims(const ThreadAlgebra<F>& alg, int maxdeg) {
    static_assert(is_field_v<F>, "hochschild_dims needs a field");
    HochschildComplex<F> hh(alg, maxdeg + 1);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(maxdeg) + 1);
    for (int p = 0; p <= maxdeg; ++p) {
        SparseRref<F> el(hh.dim(p));
        for (auto& r : hh.differential_rows(p))
            if (!r.empty()) el.add_row(std::move(r));
        ranks[static_cast<std::size_t>(p)] = el.rank();
    }
    std::vector<std::size_t> h(static_cast<std::size_t>(maxdeg) + 1);
    for (int p = 0; p <= maxdeg; ++p) {
        std::size_t rin = (p == 0) ? 0 : ranks[static_cast<std::size_t>(p - 1)];
        h[static_cast<std::size_t>(p)] = hh.dim(p) - rin - ranks[static_cast<std::size_t>(p)];
    }
    return h;
}

// H^2 data: boundary subspace and chosen cocycle representatives
template <class F>
struct H2Data {
    Subspace<F> boundaries;                  // im d^1 inside C^2
    std::vector<std::vector<F>> reps;        // kernel vectors completing it
};

template <class F>
H2Data<F> h2_data(const HochschildComplex<F>& hh) {
    static_assert(is_field_v<F>, "h2_data needs a field");
    H2Data<F> out;
    out.boundaries = Subspace<F>(hh.dim(2));
    // columns of d^1 = transposed sparse rows
    {
        std::vector<std::vector<F>> cols(hh.dim(1), std::vector<F>(hh.dim(2), F(0)));
        auto rows = hh.differential_rows(1);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (auto& [c, v] : rows[r]) cols[c][r] = v;
        for (auto& c : cols) out.boundaries.add(std::move(c));
    }
    SparseRref<F> el(hh.dim(2));
    for (auto& r : hh.differential_rows(2))
        if (!r.empty()) el.add_row(std::move(r));
    Subspace<F> span = out.boundaries;
    for (auto& kv : el.kernel_basis()) {
        std::vector<F> v(hh.dim(2), F(0));
        for (auto& [c, val] : kv) v[c] = val;
        if (span.add(v)) out.reps.push_back(std::move(v));
    }
    return out;
}

// coordinates of v in the H^2 representative basis modulo boundaries;
// nullopt when v is not a cocycle-with-these-reps combination
template <class F>
std::optional<std::vector<F>> quotient_coords(const Subspace<F>& boundaries,
                                              const std::vector<std::vector<F>>& reps,
                                              const std::vector<F>& v) {
    // solve sum l_a reps_a = v modulo boundaries: reduce both sides by the
    // boundary RREF and solve the reduced system exactly
    auto reduce_vec = [&](std::vector<F> x) {
        for (std::size_t i = 0; i < boundaries.dim(); ++i) {
            const auto& row = boundaries.basis_row(i);
            std::size_t piv = 0;
            while (piv < row.size() && row[piv] == F(0)) ++piv;
            F f = x[piv];
            if (f == F(0)) continue;
            for (std::size_t q = piv; q < x.size(); ++q) x[q] = x[q] - f * row[q];
        }
        return x;
    };
    Matrix<F> mr(v.size(), reps.size());
    for (std::size_t j = 0; j < reps.size(); ++j) mr.set_col(j, reduce_vec(reps[j]));
    return solve(mr, reduce_vec(v));
}

} // namespace zalg
