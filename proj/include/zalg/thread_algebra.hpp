#pragma once
// Thread algebras a_[i-l, i]: the finite-dimensional restriction of a window
// algebra to l+1 consecutive objects, self-contained with precomputed
// composition tables. Same element conventions as the window: an element of
// a(n,m) maps m to n, compose(a, b) needs source(a) == target(b).

#include "zalg/window_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace zalg {

template <class S>
class ThreadAlgebra {
public:
    using Scalar = S;

    ThreadAlgebra() = default;

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int length() const { return hi_ - lo_; }

    std::size_t dim(int n, int m) const {
        if (n < m || m < lo_ || n > hi_) return 0;
        return dims_.at({n, m});
    }

    std::size_t total_dim() const {
        std::size_t s = 0;
        for (const auto& [k, d] : dims_) s += d;
        return s;
    }

    const std::string& basis_label(int n, int m, std::size_t i) const {
        return labels_.at({n, m})[i];
    }

    Element<S> unit(int m) const {
        Element<S> e{m, m, std::vector<S>(dim(m, m), S(0))};
        e.coords[0] = S(1);
        return e;
    }

    Element<S> basis_element(int n, int m, std::size_t i) const {
        Element<S> e{m, n, std::vector<S>(dim(n, m), S(0))};
        e.coords[i] = S(1);
        return e;
    }

    // structure constants: compose(basis_i of a(n,m), basis_j of a(m,l))
    const std::vector<S>& table(int n, int m, int l, std::size_t i, std::size_t j) const {
        return tables_.at({n, m, l})[i * dim(m, l) + j];
    }

    Element<S> compose(const Element<S>& a, const Element<S>& b) const {
        if (a.src != b.tgt) throw std::invalid_argument("compose: source(a) != target(b)");
        Element<S> out{b.src, a.tgt, std::vector<S>(dim(a.tgt, b.src), S(0))};
        for (std::size_t i = 0; i < a.coords.size(); ++i) {
            if (a.coords[i] == S(0)) continue;
            for (std::size_t j = 0; j < b.coords.size(); ++j) {
                if (b.coords[j] == S(0)) continue;
                const auto& t = table(a.tgt, a.src, b.src, i, j);
                S f = a.coords[i] * b.coords[j];
                for (std::size_t q = 0; q < out.coords.size(); ++q) out.coords[q] += f * t[q];
            }
        }
        return out;
    }

    // non-identity basis elements, ordered by (target, source, index)
    struct BasisRef { int tgt, src; std::size_t idx; };
    const std::vector<BasisRef>& arrows() const { return arrows_; }

    // restriction to the consecutive sub-range [i-l, i], reusing the tables
    ThreadAlgebra restrict_to(int i, int l) const {
        if (l < 0 || i - l < lo_ || i > hi_)
            throw std::invalid_argument("restrict_to: sub-range outside the thread");
        ThreadAlgebra t;
        t.lo_ = i - l;
        t.hi_ = i;
        for (auto& [k, d] : dims_)
            if (k.second >= t.lo_ && k.first <= t.hi_) {
                t.dims_[k] = d;
                t.labels_[k] = labels_.at(k);
            }
        for (auto& [k, tab] : tables_) {
            auto [n, m, l2] = k;
            if (l2 >= t.lo_ && n <= t.hi_) t.tables_[k] = tab;
        }
        for (const auto& a : arrows_)
            if (a.src >= t.lo_ && a.tgt <= t.hi_) t.arrows_.push_back(a);
        return t;
    }

    template <class F>
    friend ThreadAlgebra<F> extract_thread(const WindowAlgebra<F>& w, int i, int l);

private:
    int lo_ = 0, hi_ = 0;
    std::map<std::pair<int, int>, std::size_t> dims_;
    std::map<std::pair<int, int>, std::vector<std::string>> labels_;
    std::map<std::tuple<int, int, int>, std::vector<std::vector<S>>> tables_;
    std::vector<BasisRef> arrows_;
};

// restriction of a window algebra to the objects i-l, ..., i
template <class F>
ThreadAlgebra<F> extract_thread(const WindowAlgebra<F>& w, int i, int l) {
    if (l < 0 || i - l < w.lo() || i > w.hi())
        throw std::invalid_argument("extract_thread: [i-l, i] must sit inside the window");
    ThreadAlgebra<F> t;
    t.lo_ = i - l;
    t.hi_ = i;
    for (int m = t.lo_; m <= t.hi_; ++m)
        for (int n = m; n <= t.hi_; ++n) {
            t.dims_[{n, m}] = w.dim(n, m);
            std::vector<std::string> lbl;
            for (std::size_t b = 0; b < w.dim(n, m); ++b) lbl.push_back(w.basis_label(n, m, b));
            t.labels_[{n, m}] = std::move(lbl);
            if (n > m)
                for (std::size_t b = 0; b < w.dim(n, m); ++b)
                    t.arrows_.push_back({n, m, b});
        }
    for (int l2 = t.lo_; l2 <= t.hi_; ++l2)
        for (int m = l2; m <= t.hi_; ++m)
            for (int n = m; n <= t.hi_; ++n) {
                std::vector<std::vector<F>> tab(w.dim(n, m) * w.dim(m, l2));
                for (std::size_t a = 0; a < w.dim(n, m); ++a)
                    for (std::size_t b = 0; b < w.dim(m, l2); ++b)
                        tab[a * w.dim(m, l2) + b] =
                            w.compose(w.basis_element(n, m, a), w.basis_element(m, l2, b)).coords;
                t.tables_[{n, m, l2}] = std::move(tab);
            }
    return t;
}

} // namespace zalg
