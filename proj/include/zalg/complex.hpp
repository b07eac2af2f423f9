#pragma once
// Bounded complexes of projective right modules over a thread algebra. A
// term is a list of summand objects (P_o = the projective attached to object
// o); a map P_a -> P_b is an element of a(a, b), nonzero only for a >= b.
// Projectivity of the terms makes the total Hom complex compute RHom on the
// nose, and minimization (splitting off unit differential entries) yields
// representatives with radical differentials.

#include "zalg/matrix.hpp"
#include "zalg/thread_algebra.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace zalg {

// matrix of maps between direct sums of projectives
template <class S>
struct HomMat {
    std::vector<int> src; // summand objects of the source term
    std::vector<int> dst; // summand objects of the target term
    // entry[r][c]: coordinates in a(src[c], dst[r]); empty vector = zero map
    std::vector<std::vector<std::vector<S>>> entry;

    static HomMat zero(const ThreadAlgebra<S>& alg, std::vector<int> s, std::vector<int> d) {
        HomMat h;
        h.src = std::move(s);
        h.dst = std::move(d);
        h.entry.assign(h.dst.size(), std::vector<std::vector<S>>(h.src.size()));
        for (std::size_t r = 0; r < h.dst.size(); ++r)
            for (std::size_t c = 0; c < h.src.size(); ++c)
                h.entry[r][c].assign(alg.dim(h.src[c], h.dst[r]), S(0));
        return h;
    }

    bool is_zero() const {
        for (const auto& row : entry)
            for (const auto& e : row)
                for (const auto& x : e)
                    if (x != S(0)) return false;
        return true;
    }
};

// composition g o f of f: X -> Y, g: Y -> Z
template <class S>
HomMat<S> hom_compose(const ThreadAlgebra<S>& alg, const HomMat<S>& g, const HomMat<S>& f) {
    HomMat<S> out = HomMat<S>::zero(alg, f.src, g.dst);
    for (std::size_t r = 0; r < g.dst.size(); ++r)
        for (std::size_t c = 0; c < f.src.size(); ++c) {
            for (std::size_t k = 0; k < f.dst.size(); ++k) {
                const auto& a = f.entry[k][c]; // in a(src[c], mid[k])
                const auto& b = g.entry[r][k]; // in a(mid[k], dst[r])
                if (a.empty() || b.empty()) continue;
                Element<S> ea{f.dst[k], f.src[c], a};
                Element<S> eb{g.dst[r], g.src[k], b};
                auto comp = alg.compose(ea, eb); // in a(src[c], dst[r])
                auto& acc = out.entry[r][c];
                for (std::size_t q = 0; q < acc.size(); ++q) acc[q] += comp.coords[q];
            }
        }
    return out;
}

template <class S>
HomMat<S> hom_add(const HomMat<S>& a, const HomMat<S>& b, const S& bscale) {
    HomMat<S> out = a;
    for (std::size_t r = 0; r < out.entry.size(); ++r)
        for (std::size_t c = 0; c < out.entry[r].size(); ++c)
            for (std::size_t q = 0; q < out.entry[r][c].size(); ++q)
                out.entry[r][c][q] += bscale * b.entry[r][c][q];
    return out;
}

template <class S>
class Complex {
public:
    Complex() = default;
    Complex(const ThreadAlgebra<S>* alg, int lo_deg, std::vector<std::vector<int>> terms,
            std::vector<HomMat<S>> diffs)
        : alg_(alg), lo_(lo_deg), terms_(std::move(terms)), diffs_(std::move(diffs)) {
        if (!validate()) throw std::invalid_argument("Complex: d o d != 0 or shape mismatch");
    }

    static Complex zero(const ThreadAlgebra<S>* alg) { Complex c; c.alg_ = alg; return c; }

    static Complex single(const ThreadAlgebra<S>* alg, int object, int degree = 0) {
        Complex c;
        c.alg_ = alg;
        c.lo_ = degree;
        c.terms_.push_back({object});
        return c;
    }

    const ThreadAlgebra<S>& algebra() const { return *alg_; }
    bool empty() const { return terms_.empty(); }
    int lo_deg() const { return lo_; }
    int hi_deg() const { return lo_ + static_cast<int>(terms_.size()) - 1; }

    const std::vector<int>& term(int deg) const {
        static const std::vector<int> none;
        if (deg < lo_ || deg > hi_deg()) return none;
        return terms_[static_cast<std::size_t>(deg - lo_)];
    }

    // differential out of degree `deg` (empty HomMat when out of range)
    HomMat<S> diff(int deg) const {
        if (deg < lo_ || deg >= hi_deg()) return HomMat<S>::zero(*alg_, term(deg), term(deg + 1));
        return diffs_[static_cast<std::size_t>(deg - lo_)];
    }

    bool validate() const {
        if (terms_.empty()) return diffs_.empty();
        if (diffs_.size() + 1 != terms_.size()) return false;
        for (std::size_t i = 0; i < diffs_.size(); ++i) {
            if (diffs_[i].src != terms_[i] || diffs_[i].dst != terms_[i + 1]) return false;
            if (i + 1 < diffs_.size() &&
                !hom_compose(*alg_, diffs_[i + 1], diffs_[i]).is_zero())
                return false;
        }
        return true;
    }

    // alternating-sum class vector in K_0 (index = object - lo of the thread)
    std::vector<long long> k_class() const {
        std::vector<long long> v(alg_->length() + 1, 0);
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            long long sgn = ((lo_ + static_cast<int>(i)) % 2 == 0) ? 1 : -1;
            for (int o : terms_[i]) v[static_cast<std::size_t>(o - alg_->lo())] += sgn;
        }
        return v;
    }

    // structural equality (same shape and differential entries)
    friend bool operator==(const Complex& a, const Complex& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        if (a.lo_ != b.lo_ || a.terms_ != b.terms_) return false;
        for (std::size_t i = 0; i < a.diffs_.size(); ++i)
            for (std::size_t r = 0; r < a.diffs_[i].entry.size(); ++r)
                if (a.diffs_[i].entry[r] != b.diffs_[i].entry[r]) return false;
        return true;
    }

    template <class T> friend Complex<T> minimize(Complex<T> c);

private:
    const ThreadAlgebra<S>* alg_ = nullptr;
    int lo_ = 0;
    std::vector<std::vector<int>> terms_;
    std::vector<HomMat<S>> diffs_;
};

// C[s]: degree i of the shift is degree i+s of C; differentials pick up (-1)^s
template <class S>
Complex<S> shift(const Complex<S>& c, int s) {
    if (c.empty()) return c;
    std::vector<std::vector<int>> terms;
    std::vector<HomMat<S>> diffs;
    for (int i = c.lo_deg(); i <= c.hi_deg(); ++i) terms.push_back(c.term(i));
    for (int i = c.lo_deg(); i < c.hi_deg(); ++i) {
        auto d = c.diff(i);
        if (s % 2 != 0)
            for (auto& row : d.entry)
                for (auto& e : row)
                    for (auto& x : e) x = -x;
        diffs.push_back(std::move(d));
    }
    return Complex<S>(&c.algebra(), c.lo_deg() - s, std::move(terms), std::move(diffs));
}

// degreewise map of complexes commuting with the differentials
template <class S>
struct ChainMap {
    const Complex<S>* src = nullptr;
    const Complex<S>* dst = nullptr;
    std::map<int, HomMat<S>> comp; // per degree; absent = zero

    HomMat<S> at(int deg) const {
        auto it = comp.find(deg);
        if (it != comp.end()) return it->second;
        return HomMat<S>::zero(src->algebra(), src->term(deg), dst->term(deg));
    }

    bool validate() const {
        const auto& alg = src->algebra();
        int lo = std::min(src->lo_deg(), dst->lo_deg()) - 1;
        int hi = std::max(src->hi_deg(), dst->hi_deg()) + 1;
        for (int i = lo; i <= hi; ++i) {
            auto lhs = hom_compose(alg, dst->diff(i), at(i));
            auto rhs = hom_compose(alg, at(i + 1), src->diff(i));
            if (!hom_add(lhs, rhs, S(-1)).is_zero()) return false;
        }
        return true;
    }
};

// standard mapping cone: cone(f)_i = D_i (+) C_{i+1}
template <class S>
Complex<S> cone(const ChainMap<S>& f) {
    const auto& alg = f.src->algebra();
    const Complex<S>&c = *f.src, &d = *f.dst;
    if (c.empty() && d.empty()) return Complex<S>::zero(&alg);
    int lo = std::min(d.empty() ? c.lo_deg() - 1 : d.lo_deg(), c.lo_deg() - 1);
    int hi = std::max(d.empty() ? c.hi_deg() - 1 : d.hi_deg(), c.hi_deg() - 1);
    std::vector<std::vector<int>> terms;
    std::vector<HomMat<S>> diffs;
    for (int i = lo; i <= hi; ++i) {
        std::vector<int> t = d.term(i);
        for (int o : c.term(i + 1)) t.push_back(o);
        terms.push_back(std::move(t));
    }
    for (int i = lo; i < hi; ++i) {
        std::vector<int> s = terms[static_cast<std::size_t>(i - lo)];
        std::vector<int> t = terms[static_cast<std::size_t>(i - lo + 1)];
        HomMat<S> blk = HomMat<S>::zero(alg, s, t);
        auto dd = d.diff(i);
        auto fc = f.at(i + 1);
        auto dc = c.diff(i + 1);
        std::size_t dn = d.term(i).size();
        std::size_t dm = d.term(i + 1).size();
        for (std::size_t r = 0; r < dd.dst.size(); ++r)
            for (std::size_t cc = 0; cc < dd.src.size(); ++cc) blk.entry[r][cc] = dd.entry[r][cc];
        for (std::size_t r = 0; r < fc.dst.size(); ++r)
            for (std::size_t cc = 0; cc < fc.src.size(); ++cc)
                blk.entry[r][dn + cc] = fc.entry[r][cc];
        for (std::size_t r = 0; r < dc.dst.size(); ++r)
            for (std::size_t cc = 0; cc < dc.src.size(); ++cc) {
                auto e = dc.entry[r][cc];
                for (auto& x : e) x = -x;
                blk.entry[dm + r][dn + cc] = std::move(e);
            }
        diffs.push_back(std::move(blk));
    }
    // trim zero boundary terms
    Complex<S> out(&alg, lo, std::move(terms), std::move(diffs));
    return trim(out);
}

// drop empty leading/trailing terms
template <class S>
Complex<S> trim(const Complex<S>& c) {
    if (c.empty()) return c;
    int lo = c.lo_deg(), hi = c.hi_deg();
    while (lo <= hi && c.term(lo).empty()) ++lo;
    while (hi >= lo && c.term(hi).empty()) --hi;
    if (lo > hi) return Complex<S>::zero(&c.algebra());
    std::vector<std::vector<int>> terms;
    std::vector<HomMat<S>> diffs;
    for (int i = lo; i <= hi; ++i) terms.push_back(c.term(i));
    for (int i = lo; i < hi; ++i) diffs.push_back(c.diff(i));
    return Complex<S>(&c.algebra(), lo, std::move(terms), std::move(diffs));
}

// V (x)_k E for a graded vector space V given as (degree, dimension) pairs;
// the degree-j block carries the sign (-1)^j on the differential
template <class S>
Complex<S> tensor_graded(const std::vector<std::pair<int, std::size_t>>& v, const Complex<S>& e) {
    const auto& alg = e.algebra();
    if (e.empty()) return Complex<S>::zero(&alg);
    std::vector<std::pair<int, std::size_t>> vv;
    for (auto& [j, mult] : v)
        if (mult > 0) vv.emplace_back(j, mult);
    if (vv.empty()) return Complex<S>::zero(&alg);
    int lo = vv[0].first + e.lo_deg(), hi = vv[0].first + e.hi_deg();
    for (auto& [j, mult] : vv) {
        lo = std::min(lo, j + e.lo_deg());
        hi = std::max(hi, j + e.hi_deg());
    }
    std::vector<std::vector<int>> terms(static_cast<std::size_t>(hi - lo + 1));
    for (auto& [j, mult] : vv)
        for (int i = e.lo_deg(); i <= e.hi_deg(); ++i)
            for (std::size_t cpy = 0; cpy < mult; ++cpy)
                for (int o : e.term(i))
                    terms[static_cast<std::size_t>(j + i - lo)].push_back(o);
    // rebuild block differentials in the same enumeration order
    std::vector<HomMat<S>> diffs;
    for (int i = lo; i < hi; ++i) {
        HomMat<S> blk = HomMat<S>::zero(alg, terms[static_cast<std::size_t>(i - lo)],
                                        terms[static_cast<std::size_t>(i - lo + 1)]);
        std::size_t coff = 0;
        // column offsets follow the same (block, copy, summand) enumeration
        std::map<std::pair<int, std::size_t>, std::size_t> roff_map;
        std::size_t roff_acc = 0;
        for (auto& [j, mult] : vv)
            for (std::size_t cpy = 0; cpy < mult; ++cpy) {
                roff_map[{j, cpy}] = roff_acc;
                roff_acc += e.term(i + 1 - j).size();
            }
        for (auto& [j, mult] : vv) {
            for (std::size_t cpy = 0; cpy < mult; ++cpy) {
                auto d = e.diff(i - j);
                std::size_t roff = roff_map[{j, cpy}];
                for (std::size_t r = 0; r < d.dst.size(); ++r)
                    for (std::size_t c = 0; c < d.src.size(); ++c) {
                        auto entry = d.entry[r][c];
                        if (j % 2 != 0)
                            for (auto& x : entry) x = -x;
                        blk.entry[roff + r][coff + c] = std::move(entry);
                    }
                coff += d.src.size();
            }
        }
        diffs.push_back(std::move(blk));
    }
    return trim(Complex<S>(&alg, lo, std::move(terms), std::move(diffs)));
}

// ---- the realized k-complex underlying a complex of projectives -----------

// P_o realizes as the sum of the hom-spaces a(j, o); a map P_a -> P_b given
// by x acts by precomposition with x.
template <class S>
struct RealizedComplex {
    std::vector<int> degs;
    std::vector<std::size_t> dims;      // k-dimension per degree
    std::vector<Matrix<S>> mats;        // realized differentials
};

template <class S>
std::size_t projective_kdim(const ThreadAlgebra<S>& alg, int o) {
    std::size_t s = 0;
    for (int j = o; j <= alg.hi(); ++j) s += alg.dim(j, o);
    return s;
}

template <class S>
RealizedComplex<S> realize_complex(const Complex<S>& c) {
    const auto& alg = c.algebra();
    RealizedComplex<S> out;
    if (c.empty()) return out;
    auto term_dim = [&](int deg) {
        std::size_t s = 0;
        for (int o : c.term(deg)) s += projective_kdim(alg, o);
        return s;
    };
    for (int i = c.lo_deg(); i <= c.hi_deg(); ++i) {
        out.degs.push_back(i);
        out.dims.push_back(term_dim(i));
    }
    for (int i = c.lo_deg(); i < c.hi_deg(); ++i) {
        auto d = c.diff(i);
        Matrix<S> m(term_dim(i + 1), term_dim(i));
        std::size_t coff = 0;
        for (std::size_t cc = 0; cc < d.src.size(); ++cc) {
            int a = d.src[cc];
            std::size_t roff = 0;
            for (std::size_t r = 0; r < d.dst.size(); ++r) {
                int b = d.dst[r];
                const auto& x = d.entry[r][cc];
                bool nonzero = false;
                for (const auto& v : x)
                    if (v != S(0)) nonzero = true;
                if (nonzero) {
                    Element<S> ex{b, a, x}; // x in a(a, b): maps b -> a
                    // per component j: a(j, a) -> a(j, b), w -> w o x
                    std::size_t cj = 0;
                    for (int j = alg.lo(); j <= alg.hi(); ++j) {
                        if (j >= a && alg.dim(j, a) > 0 && j >= b) {
                            for (std::size_t wi = 0; wi < alg.dim(j, a); ++wi) {
                                auto img = alg.compose(alg.basis_element(j, a, wi), ex);
                                // offset of component j inside P_b
                                std::size_t rjj = 0;
                                for (int jj = b; jj < j; ++jj) rjj += alg.dim(jj, b);
                                for (std::size_t q = 0; q < img.coords.size(); ++q)
                                    m(roff + rjj + q, coff + cj + wi) = img.coords[q];
                            }
                        }
                        if (j >= a) cj += alg.dim(j, a);
                    }
                }
                roff += projective_kdim(alg, b);
            }
            coff += projective_kdim(alg, a);
        }
        out.mats.push_back(std::move(m));
    }
    return out;
}

// cohomology dimensions of the realized complex (field scalars)
template <class S>
std::map<int, std::size_t> complex_cohomology_dims(const Complex<S>& c) {
    static_assert(is_field_v<S>, "cohomology over a field");
    std::map<int, std::size_t> out;
    if (c.empty()) return out;
    auto rc = realize_complex(c);
    std::vector<std::size_t> ranks(rc.mats.size());
    for (std::size_t i = 0; i < rc.mats.size(); ++i) ranks[i] = rank(rc.mats[i]);
    for (std::size_t i = 0; i < rc.dims.size(); ++i) {
        std::size_t rin = (i == 0) ? 0 : ranks[i - 1];
        std::size_t rout = (i < ranks.size()) ? ranks[i] : 0;
        std::size_t h = rc.dims[i] - rin - rout;
        if (h > 0) out[rc.degs[i]] = h;
    }
    return out;
}

} // namespace zalg
