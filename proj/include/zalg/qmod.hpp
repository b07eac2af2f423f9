#pragma once
// Quotient-category computations: hom in Qmod as the stabilized directed
// system Hom(M_{>=n}, N), ampleness of the canonical sequence, and
// T-projectivity, all evaluated inside Mod(window algebra) where the n-th
// object of the sequence is representable(-n).

#include "zalg/tails.hpp"
#include "zalg/window_module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zalg {

template <class F>
struct QHom {
    // dim Hom(M_{>=n}, N) for n = lo .. horizon top
    std::vector<std::pair<int, std::size_t>> dims;
    std::optional<int> stabilization_index;
    std::optional<std::size_t> stabilized_dim;
    std::string note;
};

namespace detail {

// dimension of the space of module maps M_{>=n} -> N on the window, plus
// the dimension of the kernel of the restriction to M_{>=n+1}
template <class F>
std::pair<std::size_t, std::size_t> hom_tail_dims(const WindowModule<F>& m,
                                                  const WindowModule<F>& n_mod, int from) {
    const auto& alg = m.algebra();
    const auto& pres = alg.presentation();
    std::vector<std::size_t> offset(alg.hi() - alg.lo() + 2, 0);
    std::size_t nvars = 0;
    auto var = [&](int k, std::size_t i, std::size_t j) {
        // f_k has shape dim N_k x dim M_k; i indexes N, j indexes M
        return offset[k - alg.lo()] + j * n_mod.dim(k) + i;
    };
    for (int k = alg.lo(); k <= alg.hi(); ++k) {
        offset[k - alg.lo()] = nvars;
        if (k >= from) nvars += m.dim(k) * n_mod.dim(k);
    }
    offset[alg.hi() - alg.lo() + 1] = nvars;

    SparseRref<F> elim(nvars);
    for (std::uint32_t g = 0; g < pres.generators.size(); ++g) {
        int d = pres.generators[g].degree;
        for (int t = std::max(from, alg.lo()); t + d <= alg.hi(); ++t) {
            const Matrix<F>* am = m.action(g, t);
            const Matrix<F>* an = n_mod.action(g, t);
            std::size_t rM = m.dim(t + d), cM = m.dim(t);
            std::size_t rN = n_mod.dim(t + d);
            if (rN * cM == 0) continue;
            // f_{t+d} * A^M - A^N * f_t = 0, entrywise (r, c)
            for (std::size_t r = 0; r < rN; ++r)
                for (std::size_t c = 0; c < cM; ++c) {
                    std::vector<std::pair<std::uint32_t, F>> row;
                    if (am)
                        for (std::size_t j = 0; j < rM; ++j)
                            if ((*am)(j, c) != F(0))
                                row.emplace_back(var(t + d, r, j), (*am)(j, c));
                    if (an)
                        for (std::size_t j = 0; j < n_mod.dim(t); ++j)
                            if ((*an)(r, j) != F(0))
                                row.emplace_back(var(t, j, c), -(*an)(r, j));
                    std::sort(row.begin(), row.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    // merge duplicate variable indices
                    SparseVec<F> merged;
                    for (auto& e : row) {
                        if (!merged.empty() && merged.back().first == e.first)
                            merged.back().second += e.second;
                        else
                            merged.push_back(e);
                    }
                    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                                [](const auto& e) { return e.second == F(0); }),
                                 merged.end());
                    if (!merged.empty()) elim.add_row(std::move(merged));
                }
        }
    }
    std::size_t sol = nvars - elim.rank();

    // kernel of the restriction map: solutions supported on component `from`
    // alone, i.e. A^N_g . f_from = 0 for every generator instance at `from`
    std::size_t kvars = m.dim(from) * n_mod.dim(from);
    std::size_t kdim = 0;
    if (kvars > 0) {
        SparseRref<F> kelim(kvars);
        for (std::uint32_t g = 0; g < pres.generators.size(); ++g) {
            int d = pres.generators[g].degree;
            if (from + d > alg.hi()) continue;
            const Matrix<F>* an = n_mod.action(g, from);
            if (!an) continue;
            for (std::size_t r = 0; r < n_mod.dim(from + d); ++r)
                for (std::size_t c = 0; c < m.dim(from); ++c) {
                    SparseVec<F> row;
                    for (std::size_t j = 0; j < n_mod.dim(from); ++j)
                        if ((*an)(r, j) != F(0))
                            row.emplace_back(
                                static_cast<std::uint32_t>(c * n_mod.dim(from) + j), (*an)(r, j));
                    if (!row.empty()) kelim.add_row(std::move(row));
                }
        }
        kdim = kvars - kelim.rank();
    }
    return {sol, kdim};
}

} // namespace detail

// Hom in the quotient category, realized as the directed system
// Hom(M_{>=n}, N) with stabilization detection up to the horizon.
template <class F>
QHom<F> qhom(const WindowModule<F>& m, const WindowModule<F>& n_mod, const Horizon& hz) {
    QHom<F> out;
    std::vector<std::size_t> dims, kers;
    for (int from = hz.lo; from <= hz.top(); ++from) {
        auto [d, k] = detail::hom_tail_dims(m, n_mod, from);
        out.dims.emplace_back(from, d);
        dims.push_back(d);
        kers.push_back(k);
    }
    // stabilized from n* when every restriction map on [n*, top) is bijective
    // (equal dimensions and trivial restriction kernel); at least the final
    // restriction step must be observed bijective
    std::optional<int> stab;
    if (dims.size() >= 2) {
        int i = static_cast<int>(dims.size()) - 1;
        while (i - 1 >= 0 && dims[i - 1] == dims[i] && kers[i - 1] == 0) --i;
        if (i <= static_cast<int>(dims.size()) - 2) stab = hz.lo + i;
    }
    if (stab) {
        out.stabilization_index = *stab;
        out.stabilized_dim = dims[static_cast<std::size_t>(*stab - hz.lo)];
    } else {
        out.note = "no stabilization before the horizon";
    }
    return out;
}

// ---- ampleness --------------------------------------------------------------

template <class F>
struct AmpleReport {
    Status status = Status::pass;
    struct Violation {
        int m = 0, n = 0, k = 0;
        std::string missing_label;
    };
    std::optional<Violation> witness;
};

// Window form of the ampleness condition: for every m <= n, the tail
// a(-,m)_{>=n} must be generated below each level, i.e. every a(k,m) with
// k > n is spanned by compositions a(k,e) o a(e,m) with n <= e < k. The
// canonical epimorphism from twists >= n is onto exactly when this holds.
template <class F>
AmpleReport<F> check_ample(const WindowAlgebra<F>& alg, const Horizon& hz) {
    AmpleReport<F> rep;
    for (int m = alg.lo(); m <= hz.top(); ++m) {
        for (int n = m + 1; n <= hz.top(); ++n) {
            for (int k = n + 1; k <= alg.hi(); ++k) {
                if (alg.dim(k, m) == 0) continue;
                Subspace<F> span(alg.dim(k, m));
                for (int e = k - 1; e >= n && !span.is_full(); --e) {
                    auto sp = alg.product_span(k, e, m);
                    for (std::size_t i = 0; i < sp.dim(); ++i) span.add(sp.basis_row(i));
                }
                if (!span.is_full()) {
                    rep.status = Status::fail;
                    typename AmpleReport<F>::Violation v{m, n, k, ""};
                    for (std::size_t i = 0; i < alg.dim(k, m); ++i) {
                        std::vector<F> e(alg.dim(k, m), F(0));
                        e[i] = F(1);
                        if (!span.contains(e)) { v.missing_label = alg.basis_label(k, m, i); break; }
                    }
                    rep.witness = v;
                    return rep;
                }
            }
        }
    }
    return rep;
}

// ---- T-projectivity ---------------------------------------------------------

template <class F>
struct TProjResult {
    Status status = Status::pass;
    std::optional<int> n0;
    std::string note;
};

// For f in Y_m and an epi c: X -> Y, find the least n0 such that every
// composite f * a with a in a(n,m), n >= n0, lifts through c.
template <class F>
TProjResult<F> check_t_projective(const ModuleMap<F>& epi, int m, const std::vector<F>& f,
                                  const Horizon& hz) {
    const auto& alg = epi.src->algebra();
    TProjResult<F> res;
    std::map<int, Subspace<F>> image;
    for (int n = alg.lo(); n <= alg.hi(); ++n) {
        Subspace<F> im(epi.dst->dim(n));
        const Matrix<F>& mat = epi.at(n);
        for (std::size_t j = 0; j < mat.cols(); ++j) im.add(mat.col(j));
        image.emplace(n, std::move(im));
    }
    int alive = alg.hi() + 1;
    for (int n = alg.hi(); n >= m; --n) {
        bool inside = true;
        for (std::size_t b = 0; b < alg.dim(n, m) && inside; ++b)
            inside = image.at(n).contains(epi.dst->act_element(m, f, alg.basis_element(n, m, b)));
        if (!inside) break;
        alive = n;
    }
    if (alive <= hz.top() + 1) {
        res.n0 = alive;
    } else {
        res.status = alive > alg.hi() ? Status::fail : Status::inconclusive;
        res.note = "no lifting level certified inside the window";
        if (alive > alg.hi()) res.note = "composites fail to lift even at the window top";
    }
    return res;
}

// ---- the aggregate Z-generating-sequence report -----------------------------

template <class F>
struct ZgenReport {
    Status status = Status::pass;
    AmpleReport<F> ample;
    // canonical projectivity sweep: per object m, the level from which
    // identity composites lift through the tail cover of a(-,m)_{>= m+1}
    struct ProjEntry {
        int object = 0;
        Status status = Status::pass;
        std::optional<int> n0;
    };
    std::vector<ProjEntry> projectivity;
    std::string fullness_note;
    std::string hypothesis_note;
};

template <class F>
ZgenReport<F> zgen_report(const WindowAlgebra<F>& alg, const Horizon& hz) {
    ZgenReport<F> rep;
    rep.ample = check_ample(alg, hz);
    rep.status = rep.ample.status;
    for (int m = alg.lo(); m <= hz.top() - 1; ++m) {
        typename ZgenReport<F>::ProjEntry e;
        e.object = m;
        // image of the canonical cover epi at level n is the span of
        // a(n, m+1) o a(m+1, m); the identity of object m must lift past n0
        int alive = alg.hi() + 1;
        for (int n = alg.hi(); n >= m + 1; --n) {
            auto sp = alg.product_span(n, m + 1, m);
            if (sp.dim() != alg.dim(n, m)) break;
            alive = n;
        }
        if (alive <= hz.top() + 1) {
            e.n0 = alive;
        } else {
            e.status = alive > alg.hi() ? Status::fail : Status::inconclusive;
        }
        rep.status = worst(rep.status, e.status);
        rep.projectivity.push_back(e);
    }
    rep.fullness_note =
        "the canonical maps a(n,m) -> Hom(u(n), u(m)) are identities by construction; "
        "T-fullness and T-faithfulness hold degreewise";
    rep.hypothesis_note =
        "L_tails = T_tails is assumed; it can only be falsified (see glueing_failure_witness), "
        "never window-certified";
    return rep;
}

} // namespace zalg
