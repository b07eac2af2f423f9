#pragma once
// The tails covering system on a window algebra: membership tests for
// L_tails, pullbacks of covers, T-epi / T-mono predicates, and one-step
// glueing-failure detection.
//
// Window semantics: a cover R over object m is *certified* in L_tails when
// some tail a(-,m)_{>=n} with n at or below the horizon top is contained in
// R; containment attained only inside the top margin is reported as a
// boundary artifact rather than a certified membership, since the window
// cannot distinguish it from the truncation of a non-cover.

#include "zalg/window_module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zalg {

template <class F>
struct Cover {
    int object = 0;     // target object m; R sits inside representable(m)
    Submodule<F> sub;

    static Cover tail(const WindowAlgebra<F>& alg, int m, int n0) {
        return {m, ideal_component(alg, m, IdealKind::tail, n0)};
    }
    static Cover whole(const WindowAlgebra<F>& alg, int m) {
        return {m, ideal_component(alg, m, IdealKind::whole)};
    }
};

enum class CoveringSystem { trivial, l_tails };

template <class F>
struct LTailsResult {
    Status status = Status::fail;
    std::optional<int> least_n;       // least certified tail level
    std::optional<int> boundary_n;    // containment attained only in the margin
    // blocking basis element for the last checkable level (when not certified)
    std::optional<int> witness_component;
    std::string witness_label;
};

template <class F>
LTailsResult<F> in_L_tails(const Cover<F>& cover, const Horizon& hz) {
    const auto& alg = cover.sub.algebra();
    const int m = cover.object;
    LTailsResult<F> res;
    auto tail_contained = [&](int n) {
        for (int k = std::max(n, alg.lo()); k <= alg.hi(); ++k)
            if (cover.sub.dim(k) != alg.dim(k, m)) return false;
        return true;
    };
    for (int n = m; n <= alg.hi(); ++n) {
        if (!tail_contained(n)) continue;
        if (n <= hz.top()) {
            res.status = Status::pass;
            res.least_n = n;
        } else {
            res.status = Status::inconclusive;
            res.boundary_n = n;
        }
        break;
    }
    if (res.status != Status::pass) {
        // witness: a basis element of the last certifiable tail level missing
        // from the cover; prefer standard basis elements for readability
        for (int k = hz.top(); k >= m && !res.witness_component; --k) {
            for (std::size_t i = 0; i < alg.dim(k, m); ++i) {
                std::vector<F> e(alg.dim(k, m), F(0));
                e[i] = F(1);
                if (!cover.sub.component(k).contains(e)) {
                    res.witness_component = k;
                    res.witness_label = alg.basis_label(k, m, i);
                    break;
                }
            }
        }
    }
    return res;
}

// matrix of right composition with a: a(j, k) -> a(j, m) for a in a(k, m)
template <class F>
Matrix<F> compose_with(const WindowAlgebra<F>& alg, int j, const Element<F>& a) {
    Matrix<F> out(alg.dim(j, a.src), alg.dim(j, a.tgt));
    for (std::size_t i = 0; i < alg.dim(j, a.tgt); ++i) {
        auto col = alg.compose_basis(j, a.tgt, i, a.src, a.coords);
        for (std::size_t r = 0; r < col.size(); ++r) out(r, i) = col[r];
    }
    return out;
}

// P = {f | f o a in R}, the pullback of a cover along a: rep(k) -> rep(m)
template <class F>
Cover<F> pullback_cover(const Cover<F>& cover, const Element<F>& a) {
    const auto& alg = cover.sub.algebra();
    if (a.src != cover.object)
        throw std::invalid_argument("pullback_cover: element does not target the cover's object");
    const int k = a.tgt;
    std::vector<std::size_t> ambient;
    for (int n = alg.lo(); n <= alg.hi(); ++n) ambient.push_back(alg.dim(n, k));
    Cover<F> out{k, Submodule<F>(&alg, ambient)};
    for (int j = k; j <= alg.hi(); ++j) {
        Matrix<F> comp = compose_with(alg, j, a);
        Subspace<F> pre = preimage(comp, cover.sub.component(j));
        for (std::size_t i = 0; i < pre.dim(); ++i) out.sub.component(j).add(pre.basis_row(i));
    }
    return out;
}

// Least n such that the pullback of `cover` along a contains the tail
// a(-, a.tgt)_{>= n} on the window, computed by membership alone (no
// preimage): the pullback component at j is full iff b o a lands in the
// cover for every basis b of a(j, a.tgt).
template <class F>
std::optional<int> pullback_tail_level(const Cover<F>& cover, const Element<F>& a) {
    const auto& alg = cover.sub.algebra();
    const int k = a.tgt;
    std::optional<int> level;
    for (int j = alg.hi(); j >= k; --j) {
        if (cover.sub.dim(j) == alg.dim(j, cover.object)) { level = j; continue; }
        bool full = true;
        for (std::size_t b = 0; b < alg.dim(j, k) && full; ++b)
            full = cover.sub.component(j).contains(
                alg.compose_basis(j, k, b, cover.object, a.coords));
        if (!full) break;
        level = j;
    }
    return level;
}

template <class F>
struct GlueingReport {
    LTailsResult<F> cover_status;
    // per pulled-back element: (component, basis label, status, least/boundary n)
    struct PullbackEntry {
        int component = 0;
        std::string label;
        Status status = Status::fail;
        std::optional<int> attained_n;
    };
    std::vector<PullbackEntry> pullbacks;
    enum class Verdict { already_covering, glueing_failure, genuinely_non_covering, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    std::string summary;
};

// One-step glueing failure: S not certified as a cover while every pullback
// of S along the canonical covering a(-,m)_{>= m+1} attains a tail inside
// the window.
template <class F>
GlueingReport<F> glueing_failure_witness(const WindowAlgebra<F>& alg, const Cover<F>& s,
                                         const Horizon& hz) {
    GlueingReport<F> rep;
    rep.cover_status = in_L_tails(s, hz);
    if (rep.cover_status.status == Status::pass) {
        rep.verdict = GlueingReport<F>::Verdict::already_covering;
        rep.summary = "S already contains a certified tail";
        return rep;
    }
    const int m = s.object;
    bool all_cover = true, any_cover = false;
    // pull back along every basis element of the canonical covering, capping
    // the component sweep when the element count explodes (noted in summary)
    std::size_t total = 0;
    for (int k = m + 1; k <= hz.top(); ++k) total += alg.dim(k, m);
    int kmax = hz.top();
    if (total > 200) {
        kmax = std::min(hz.top(), m + 2);
        rep.summary = "pullback sweep capped at degree 2 elements; ";
    }
    for (int k = m + 1; k <= kmax; ++k) {
        for (std::size_t i = 0; i < alg.dim(k, m); ++i) {
            auto a = alg.basis_element(k, m, i);
            typename GlueingReport<F>::PullbackEntry e;
            e.component = k;
            e.label = alg.basis_label(k, m, i);
            // a tail attained anywhere inside the window counts as covering
            // for the glueing diagnosis; tails are covers by definition
            e.attained_n = pullback_tail_level(s, a);
            e.status = e.attained_n ? Status::pass : Status::fail;
            if (e.status == Status::pass) any_cover = true; else all_cover = false;
            rep.pullbacks.push_back(std::move(e));
        }
    }
    if (all_cover && !rep.pullbacks.empty()) {
        rep.verdict = GlueingReport<F>::Verdict::glueing_failure;
        rep.summary += "S is glued together from coverings but fails to be a covering itself"
                       " (blocked by " + rep.cover_status.witness_label + ")";
    } else if (!any_cover) {
        rep.verdict = GlueingReport<F>::Verdict::genuinely_non_covering;
        rep.summary += "S and its pullbacks all fail to attain tails";
    } else {
        rep.verdict = GlueingReport<F>::Verdict::inconclusive;
        rep.summary += "mixed pullback verdicts";
    }
    return rep;
}

// ---- T-epi / T-mono ---------------------------------------------------------

template <class F>
struct TCheckEntry {
    int component = 0;
    std::size_t index = 0;
    std::optional<int> n0;
};

template <class F>
struct TCheckResult {
    Status status = Status::pass;
    std::vector<TCheckEntry<F>> entries; // per-element certificates
};

// f is a T-epi when every element of the target is hit after composing with
// a cover; for L_tails this asks y * a(n,m) to land in the image for all n
// past a per-element n0. The trivial system admits only the representable
// cover, i.e. ordinary componentwise surjectivity.
template <class F>
TCheckResult<F> is_t_epi(const ModuleMap<F>& f, CoveringSystem sys, const Horizon& hz) {
    if (!f.validate()) throw std::invalid_argument("is_t_epi: not a module map");
    const auto& alg = f.src->algebra();
    TCheckResult<F> res;
    // componentwise images of f
    std::map<int, Subspace<F>> image;
    for (int n = alg.lo(); n <= alg.hi(); ++n) {
        Subspace<F> im(f.dst->dim(n));
        const Matrix<F>& mat = f.at(n);
        for (std::size_t j = 0; j < mat.cols(); ++j) im.add(mat.col(j));
        image.emplace(n, std::move(im));
    }
    for (int m = alg.lo(); m <= alg.hi(); ++m) {
        for (std::size_t i = 0; i < f.dst->dim(m); ++i) {
            std::vector<F> y(f.dst->dim(m), F(0));
            y[i] = F(1);
            TCheckEntry<F> e{m, i, std::nullopt};
            if (sys == CoveringSystem::trivial) {
                if (image.at(m).contains(y)) e.n0 = m;
            } else {
                int alive = alg.hi() + 1;
                for (int n = alg.hi(); n >= m; --n) {
                    bool inside = true;
                    for (std::size_t b = 0; b < alg.dim(n, m) && inside; ++b)
                        inside = image.at(n).contains(
                            f.dst->act_element(m, y, alg.basis_element(n, m, b)));
                    if (!inside) break;
                    alive = n;
                }
                if (alive <= hz.top() + 1) e.n0 = alive;
            }
            if (!e.n0) res.status = Status::fail;
            res.entries.push_back(std::move(e));
        }
    }
    return res;
}

// f is a T-mono when kernel elements die under covers: for L_tails each
// x with f(x) = 0 needs x * a(n,m) = 0 for all n past some n0.
template <class F>
TCheckResult<F> is_t_mono(const ModuleMap<F>& f, CoveringSystem sys, const Horizon& hz) {
    if (!f.validate()) throw std::invalid_argument("is_t_mono: not a module map");
    const auto& alg = f.src->algebra();
    TCheckResult<F> res;
    for (int m = alg.lo(); m <= alg.hi(); ++m) {
        auto kb = kernel_basis(f.at(m));
        for (std::size_t i = 0; i < kb.size(); ++i) {
            TCheckEntry<F> e{m, i, std::nullopt};
            if (sys == CoveringSystem::trivial) {
                // only the representable covers: x itself must vanish
            } else {
                int alive = alg.hi() + 1;
                for (int n = alg.hi(); n >= m; --n) {
                    if (f.src->element_action_span(m, kb[i], n).dim() != 0) break;
                    alive = n;
                }
                // x * 1_m = x != 0, so certification needs alive > m
                if (alive > m && alive <= hz.top() + 1) e.n0 = alive;
            }
            if (!e.n0) res.status = Status::fail;
            res.entries.push_back(std::move(e));
        }
    }
    return res;
}

} // namespace zalg
