#pragma once
// Right modules over a window algebra: per-object component spaces with
// generator action matrices, truncation, torsion detection, ideals and
// finite-generation tests. Action spans are computed through the generator
// words; representables carry the full composition structure.

#include "zalg/window_algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zalg {

template <class F>
class WindowModule {
public:
    using Algebra = WindowAlgebra<F>;

    WindowModule() = default;
    WindowModule(const Algebra* alg, std::vector<std::size_t> dims)
        : alg_(alg), dims_(std::move(dims)) {}

    const Algebra& algebra() const { return *alg_; }
    int lo() const { return alg_->lo(); }
    int hi() const { return alg_->hi(); }

    std::size_t dim(int n) const {
        if (n < lo() || n > hi()) return 0;
        return dims_[static_cast<std::size_t>(n - lo())];
    }

    // action of generator g instantiated at object t: M_t -> M_{t+deg}
    const Matrix<F>* action(std::uint32_t g, int t) const {
        auto it = act_.find({g, t});
        return it == act_.end() ? nullptr : &it->second;
    }
    void set_action(std::uint32_t g, int t, Matrix<F> m) { act_[{g, t}] = std::move(m); }

    bool is_representable() const { return rep_of_.has_value(); }
    int representable_of() const { return *rep_of_; }

    // x (a vector in M_t) acted by an element a of a(n, t)
    std::vector<F> act_element(int t, const std::vector<F>& x, const Element<F>& a) const {
        if (a.src != t) throw std::invalid_argument("act_element: object mismatch");
        if (rep_of_) {
            Element<F> xe{*rep_of_, t, x};
            return alg_->compose(a, xe).coords;
        }
        std::vector<F> out(dim(a.tgt), F(0));
        const auto& pd = alg_->pair(a.tgt, a.src);
        for (std::size_t i = 0; i < a.coords.size(); ++i) {
            if (a.coords[i] == F(0)) continue;
            if (i >= pd.words.size()) continue; // injected algebra elements act as zero
            std::vector<F> v = x;
            int pos = t;
            for (auto g : pd.words[i].letters) {
                const Matrix<F>* mat = action(g, pos);
                if (!mat) { v.assign(dim(a.tgt), F(0)); break; }
                v = mat->apply(v);
                pos += alg_->presentation().generators[g].degree;
            }
            for (std::size_t q = 0; q < out.size(); ++q) out[q] += a.coords[i] * v[q];
        }
        return out;
    }

    // span of x * a(n, t) for a vector x in M_t
    Subspace<F> element_action_span(int t, const std::vector<F>& x, int n) const {
        Subspace<F> sp(dim(n));
        for (std::size_t i = 0; i < alg_->dim(n, t); ++i)
            sp.add(act_element(t, x, alg_->basis_element(n, t, i)));
        return sp;
    }

    // checks every relation instance of the presentation on the window
    bool validate() const {
        const auto& pres = alg_->presentation();
        for (const auto& r : pres.relations) {
            int deg = pres.word_degree(r.terms[0].word);
            for (int s = lo(); s + deg <= hi(); ++s) {
                if (r.at_object && *r.at_object != s) continue;
                Matrix<F> total(dim(s + deg), dim(s));
                bool all_instantiable = true;
                for (const auto& term : r.terms) {
                    Matrix<F> acc = Matrix<F>::identity(dim(s));
                    int pos = s;
                    std::vector<std::uint32_t> letters;
                    for (std::size_t k = term.word.size(); k-- > 0;)
                        letters.push_back(
                            static_cast<std::uint32_t>(pres.generator_index(term.word[k])));
                    for (auto g : letters) {
                        const Matrix<F>* mat = action(g, pos);
                        if (!mat) { all_instantiable = false; break; }
                        acc = (*mat) * acc;
                        pos += pres.generators[g].degree;
                    }
                    if (!all_instantiable) break;
                    total = total + from_dual_coeff<F>(term.coeff) * acc;
                }
                if (all_instantiable && !total.is_zero()) return false;
            }
        }
        return true;
    }

    static WindowModule zero(const Algebra* alg) {
        WindowModule m(alg, std::vector<std::size_t>(alg->hi() - alg->lo() + 1, 0));
        return m;
    }

    static WindowModule representable(const Algebra& alg, int m) {
        if (m < alg.lo() || m > alg.hi())
            throw std::invalid_argument("representable: object outside window");
        std::vector<std::size_t> dims(alg.hi() - alg.lo() + 1, 0);
        for (int n = m; n <= alg.hi(); ++n)
            dims[static_cast<std::size_t>(n - alg.lo())] = alg.dim(n, m);
        WindowModule mod(&alg, std::move(dims));
        const auto& pres = alg.presentation();
        for (std::uint32_t g = 0; g < pres.generators.size(); ++g) {
            int d = pres.generators[g].degree;
            for (int t = m; t + d <= alg.hi(); ++t)
                if (const Matrix<F>* a = alg.gen_action(g, t, m))
                    mod.set_action(g, t, *a);
        }
        mod.rep_of_ = m;
        return mod;
    }

    std::optional<int> rep_of_; // set for representables (full composition available)

private:
    const Algebra* alg_ = nullptr;
    std::vector<std::size_t> dims_;
    std::map<std::pair<std::uint32_t, int>, Matrix<F>> act_;
};

// A submodule given by reduced spanning subspaces per component. Kept
// self-contained (ambient dims + algebra) so covers can outlive the module
// they were cut from.
template <class F>
class Submodule {
public:
    Submodule() = default;
    Submodule(const WindowAlgebra<F>* alg, std::vector<std::size_t> ambient)
        : alg_(alg), ambient_(std::move(ambient)) {
        for (int n = alg_->lo(); n <= alg_->hi(); ++n)
            comp_.emplace(n, Subspace<F>(ambient_[static_cast<std::size_t>(n - alg_->lo())]));
    }

    const WindowAlgebra<F>& algebra() const { return *alg_; }
    std::size_t ambient_dim(int n) const {
        if (n < alg_->lo() || n > alg_->hi()) return 0;
        return ambient_[static_cast<std::size_t>(n - alg_->lo())];
    }
    const Subspace<F>& component(int n) const { return comp_.at(n); }
    Subspace<F>& component(int n) { return comp_.at(n); }
    std::size_t dim(int n) const { return comp_.at(n).dim(); }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (const auto& [n, sp] : comp_) s += sp.dim();
        return s;
    }

    // close under all generator actions of the parent module
    void close_under_actions(const WindowModule<F>& parent) {
        const auto& pres = alg_->presentation();
        bool changed = true;
        while (changed) {
            changed = false;
            for (int t = alg_->lo(); t <= alg_->hi(); ++t) {
                for (std::uint32_t g = 0; g < pres.generators.size(); ++g) {
                    int d = pres.generators[g].degree;
                    if (t + d > alg_->hi()) continue;
                    const Matrix<F>* a = parent.action(g, t);
                    if (!a) continue;
                    auto& src = comp_.at(t);
                    auto& dst = comp_.at(t + d);
                    for (std::size_t i = 0; i < src.dim(); ++i)
                        if (dst.add(a->apply(src.basis_row(i)))) changed = true;
                }
            }
        }
    }

    bool contains(const Submodule& other) const {
        for (const auto& [n, sp] : other.comp_)
            if (!comp_.at(n).contains(sp)) return false;
        return true;
    }

private:
    const WindowAlgebra<F>* alg_ = nullptr;
    std::vector<std::size_t> ambient_;
    std::map<int, Subspace<F>> comp_;
};

// ---- truncation ------------------------------------------------------------

template <class F>
struct Truncation {
    Submodule<F> ge;      // M_{>= m} as a submodule
    WindowModule<F> lt;   // the quotient M_{< m}
};

template <class F>
Truncation<F> truncate(const WindowModule<F>& mod, int cutoff) {
    const auto& alg = mod.algebra();
    std::vector<std::size_t> ambient;
    for (int n = alg.lo(); n <= alg.hi(); ++n) ambient.push_back(mod.dim(n));
    Submodule<F> ge(&alg, ambient);
    for (int n = alg.lo(); n <= alg.hi(); ++n)
        if (n >= cutoff && mod.dim(n) > 0)
            ge.component(n) = Subspace<F>::full(mod.dim(n));

    std::vector<std::size_t> ltdims;
    for (int n = alg.lo(); n <= alg.hi(); ++n) ltdims.push_back(n < cutoff ? mod.dim(n) : 0);
    WindowModule<F> lt(&alg, std::move(ltdims));
    const auto& pres = alg.presentation();
    for (std::uint32_t g = 0; g < pres.generators.size(); ++g) {
        int d = pres.generators[g].degree;
        for (int t = alg.lo(); t + d <= alg.hi(); ++t) {
            const Matrix<F>* a = mod.action(g, t);
            if (!a) continue;
            if (t + d < cutoff) {
                lt.set_action(g, t, *a);
            } else {
                lt.set_action(g, t, Matrix<F>(lt.dim(t + d), lt.dim(t)));
            }
        }
    }
    return {std::move(ge), std::move(lt)};
}

// tail / augmentation ideals: the truncated submodules of a representable
enum class IdealKind { whole, plus, tail };

template <class F>
Submodule<F> ideal_component(const WindowAlgebra<F>& alg, int m, IdealKind kind, int n0 = 0) {
    auto rep = WindowModule<F>::representable(alg, m);
    int cut;
    switch (kind) {
        case IdealKind::whole: cut = m; break;
        case IdealKind::plus: cut = m + 1; break;
        default: cut = n0; break;
    }
    return truncate(rep, cut).ge;
}

// smallest window-closed span of {x * a | x in X, a in I}
template <class F>
Submodule<F> submodule_product(const WindowModule<F>& mod,
                               const std::vector<std::pair<int, std::vector<F>>>& xs,
                               IdealKind kind, int n0 = 0) {
    const auto& alg = mod.algebra();
    std::vector<std::size_t> ambient;
    for (int n = alg.lo(); n <= alg.hi(); ++n) ambient.push_back(mod.dim(n));
    Submodule<F> out(&alg, ambient);
    for (const auto& [t, x] : xs) {
        for (int n = t; n <= alg.hi(); ++n) {
            int bound;
            switch (kind) {
                case IdealKind::whole: bound = t; break;
                case IdealKind::plus: bound = t + 1; break;
                default: bound = n0; break;
            }
            if (n < bound) continue;
            for (std::size_t i = 0; i < alg.dim(n, t); ++i)
                out.component(n).add(mod.act_element(t, x, alg.basis_element(n, t, i)));
        }
    }
    return out;
}

// ---- boundedness / torsion / finite generation ----------------------------

template <class F>
Status is_right_bounded(const WindowModule<F>& mod, const Horizon& hz) {
    for (int n = hz.top() + 1; n <= mod.hi(); ++n)
        if (mod.dim(n) != 0) return Status::inconclusive; // nonzero at the window top
    return Status::pass;
}

template <class F>
struct TorsionReport {
    Status status = Status::pass;
    // (component, basis index, least n0 with x*a(n,m) = 0 for n >= n0), n0
    // absent when the element stays alive through the window
    struct Entry {
        int component = 0;
        std::size_t index = 0;
        std::optional<int> n0;
        bool alive_at_top = false;
    };
    std::vector<Entry> entries;
};

template <class F>
TorsionReport<F> is_torsion(const WindowModule<F>& mod, const Horizon& hz) {
    TorsionReport<F> rep;
    bool all_certified = true, any_alive = false;
    for (int m = mod.lo(); m <= mod.hi(); ++m) {
        for (std::size_t i = 0; i < mod.dim(m); ++i) {
            std::vector<F> x(mod.dim(m), F(0));
            x[i] = F(1);
            // least n0 <= top with x * a(n, m) = 0 for every n in [n0, hi]
            std::optional<int> n0;
            int n = mod.hi();
            for (; n >= m; --n) {
                if (mod.element_action_span(m, x, n).dim() != 0) break;
            }
            typename TorsionReport<F>::Entry e{m, i, std::nullopt, false};
            if (n < m) {
                n0 = m; // dead immediately (includes x = 0 components)
            } else if (n + 1 <= hz.top()) {
                n0 = n + 1;
            } else {
                e.alive_at_top = (n == mod.hi());
                all_certified = false;
                if (e.alive_at_top) any_alive = true;
            }
            e.n0 = n0;
            rep.entries.push_back(e);
        }
    }
    if (all_certified) rep.status = Status::pass;
    else rep.status = any_alive ? Status::fail : Status::inconclusive;
    return rep;
}

template <class F>
struct FgModuleReport {
    Status status = Status::pass;
    // chosen generators as (component, basis-coordinate vector)
    std::vector<std::pair<int, std::vector<F>>> generators;
    bool margin_new_generators = false;
    std::string reason;
};

// Greedy generator selection from low components upward; ok when nothing new
// appears inside the top margin.
template <class F>
FgModuleReport<F> is_finitely_generated_module(const WindowModule<F>& mod, const Horizon& hz) {
    const auto& alg = mod.algebra();
    FgModuleReport<F> rep;
    std::vector<std::size_t> ambient;
    for (int n = alg.lo(); n <= alg.hi(); ++n) ambient.push_back(mod.dim(n));
    Submodule<F> gen(&alg, ambient);
    for (int n = mod.lo(); n <= mod.hi(); ++n) {
        // absorb action images from below first
        gen.close_under_actions(mod);
        while (gen.dim(n) < mod.dim(n)) {
            auto comp = gen.component(n).complement_coords();
            std::vector<F> x(mod.dim(n), F(0));
            x[comp.front()] = F(1);
            rep.generators.emplace_back(n, x);
            gen.component(n).add(x);
            if (hz.in_margin(n)) rep.margin_new_generators = true;
        }
    }
    if (rep.margin_new_generators) {
        rep.status = Status::inconclusive;
        rep.reason = "new generators required inside the top margin";
    }
    return rep;
}

// Quotient of a module by an action-closed submodule, with the projection
// realized on standard-basis complement coordinates.
template <class F>
struct QuotientModule {
    WindowModule<F> mod;
    std::map<int, Matrix<F>> projection; // M_n -> Q_n
};

template <class F>
QuotientModule<F> quotient_module(const WindowModule<F>& parent, const Submodule<F>& sub) {
    const auto& alg = parent.algebra();
    std::map<int, Matrix<F>> proj;
    std::vector<std::size_t> dims;
    for (int n = alg.lo(); n <= alg.hi(); ++n) {
        const Subspace<F>& s = sub.component(n);
        auto comp = s.complement_coords();
        Matrix<F> p(comp.size(), parent.dim(n));
        for (std::size_t j = 0; j < parent.dim(n); ++j) {
            std::vector<F> e(parent.dim(n), F(0));
            e[j] = F(1);
            // reduce e modulo the submodule, then read complement coordinates
            for (std::size_t i = 0; i < s.dim(); ++i) {
                auto row = s.basis_row(i);
                std::size_t piv = 0;
                while (piv < row.size() && row[piv] == F(0)) ++piv;
                F f = e[piv];
                if (f == F(0)) continue;
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = e[k] - f * row[k];
            }
            for (std::size_t i = 0; i < comp.size(); ++i) p(i, j) = e[comp[i]];
        }
        dims.push_back(comp.size());
        proj.emplace(n, std::move(p));
    }
    WindowModule<F> q(&alg, std::move(dims));
    const auto& pres = alg.presentation();
    for (std::uint32_t g = 0; g < pres.generators.size(); ++g) {
        int d = pres.generators[g].degree;
        for (int t = alg.lo(); t + d <= alg.hi(); ++t) {
            const Matrix<F>* a = parent.action(g, t);
            if (!a) continue;
            // induced action: project(action(section)); sections are the
            // complement standard basis vectors
            auto comp = sub.component(t).complement_coords();
            Matrix<F> act(q.dim(t + d), q.dim(t));
            for (std::size_t j = 0; j < comp.size(); ++j) {
                std::vector<F> e(parent.dim(t), F(0));
                e[comp[j]] = F(1);
                auto img = proj.at(t + d).apply(a->apply(e));
                for (std::size_t i = 0; i < img.size(); ++i) act(i, j) = img[i];
            }
            q.set_action(g, t, std::move(act));
        }
    }
    return {std::move(q), std::move(proj)};
}

// direct sum, for building covering epimorphisms
template <class F>
WindowModule<F> direct_sum(const WindowModule<F>& a, const WindowModule<F>& b) {
    const auto& alg = a.algebra();
    std::vector<std::size_t> dims;
    for (int n = alg.lo(); n <= alg.hi(); ++n) dims.push_back(a.dim(n) + b.dim(n));
    WindowModule<F> out(&alg, std::move(dims));
    const auto& pres = alg.presentation();
    for (std::uint32_t g = 0; g < pres.generators.size(); ++g) {
        int d = pres.generators[g].degree;
        for (int t = alg.lo(); t + d <= alg.hi(); ++t) {
            const Matrix<F>* ma = a.action(g, t);
            const Matrix<F>* mb = b.action(g, t);
            if (!ma && !mb) continue;
            Matrix<F> blk(out.dim(t + d), out.dim(t));
            if (ma)
                for (std::size_t i = 0; i < ma->rows(); ++i)
                    for (std::size_t j = 0; j < ma->cols(); ++j) blk(i, j) = (*ma)(i, j);
            if (mb)
                for (std::size_t i = 0; i < mb->rows(); ++i)
                    for (std::size_t j = 0; j < mb->cols(); ++j)
                        blk(a.dim(t + d) + i, a.dim(t) + j) = (*mb)(i, j);
            out.set_action(g, t, std::move(blk));
        }
    }
    return out;
}

// Realize an action-closed submodule as a module in its own right, with
// actions rewritten in the chosen component bases.
template <class F>
WindowModule<F> module_from_submodule(const WindowModule<F>& parent, const Submodule<F>& sub) {
    const auto& alg = parent.algebra();
    std::vector<std::size_t> dims;
    for (int n = alg.lo(); n <= alg.hi(); ++n) dims.push_back(sub.dim(n));
    WindowModule<F> out(&alg, std::move(dims));
    const auto& pres = alg.presentation();
    for (std::uint32_t g = 0; g < pres.generators.size(); ++g) {
        int d = pres.generators[g].degree;
        for (int t = alg.lo(); t + d <= alg.hi(); ++t) {
            const Matrix<F>* a = parent.action(g, t);
            if (!a) continue;
            Matrix<F> act(out.dim(t + d), out.dim(t));
            for (std::size_t j = 0; j < sub.dim(t); ++j) {
                auto img = a->apply(sub.component(t).basis_row(j));
                auto c = sub.component(t + d).coords(img); // throws if not closed
                for (std::size_t i = 0; i < c.size(); ++i) act(i, j) = c[i];
            }
            out.set_action(g, t, std::move(act));
        }
    }
    return out;
}

// degreewise module map, validated to commute with the generator actions
template <class F>
struct ModuleMap {
    const WindowModule<F>* src = nullptr;
    const WindowModule<F>* dst = nullptr;
    std::map<int, Matrix<F>> comp;

    const Matrix<F>& at(int n) const { return comp.at(n); }

    bool validate() const {
        const auto& alg = src->algebra();
        const auto& pres = alg.presentation();
        for (std::uint32_t g = 0; g < pres.generators.size(); ++g) {
            int d = pres.generators[g].degree;
            for (int t = alg.lo(); t + d <= alg.hi(); ++t) {
                const Matrix<F>* as = src->action(g, t);
                const Matrix<F>* ad = dst->action(g, t);
                if (!as && !ad) continue;
                Matrix<F> lhs = comp.at(t + d) * (as ? *as : Matrix<F>(src->dim(t + d), src->dim(t)));
                Matrix<F> rhs = (ad ? *ad : Matrix<F>(dst->dim(t + d), dst->dim(t))) * comp.at(t);
                if (!(lhs - rhs).is_zero()) return false;
            }
        }
        return true;
    }
};

template <class F>
Submodule<F> image_submodule(const ModuleMap<F>& f) {
    const auto& alg = f.src->algebra();
    std::vector<std::size_t> ambient;
    for (int n = alg.lo(); n <= alg.hi(); ++n) ambient.push_back(f.dst->dim(n));
    Submodule<F> im(&alg, ambient);
    for (int n = alg.lo(); n <= alg.hi(); ++n) {
        const Matrix<F>& m = f.at(n);
        for (std::size_t j = 0; j < m.cols(); ++j) im.component(n).add(m.col(j));
    }
    return im;
}

} // namespace zalg
