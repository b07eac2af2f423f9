#pragma once
// Twist representatives inside a Beilinson-type thread of P^d. Objects of
// the thread [tlo, thi] carry the twists O(-tlo) down to O(-thi); one twist
// beyond each end is materialized by the (co)resolution built from the
// degree-one generators with Koszul signs.

#include "zalg/complex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace zalg {

namespace detail {
inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // lexicographic enumeration
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) { out.push_back(cur); return; }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}
} // namespace detail

// single projective for twists inside the thread; Koszul complexes one step
// beyond either end
template <class S>
Complex<S> twist_rep(const ThreadAlgebra<S>& alg, int twist) {
    const int d = alg.length();
    const int tlo = -alg.hi(), thi = -alg.lo(); // twist range [tlo, thi]
    if (twist >= tlo && twist <= thi) return Complex<S>::single(&alg, -twist);

    auto degree_one = [&](int from_obj, int gen) {
        // the generator basis of a(from_obj, from_obj - 1) in scheme order
        std::vector<S> v(alg.dim(from_obj, from_obj - 1), S(0));
        v[static_cast<std::size_t>(gen)] = S(1);
        return v;
    };

    if (twist == thi + 1) {
        // O(thi+1) ~ [O(tlo) -> O(tlo+1)^* -> ... -> O(thi)^*] in degrees -d..0
        std::vector<std::vector<int>> terms;
        std::vector<HomMat<S>> diffs;
        std::vector<std::vector<std::vector<int>>> subs; // per s: subsets of size s+1
        for (int s = d; s >= 0; --s) {
            auto ss = detail::subsets_of_size(d + 1, s + 1);
            int obj = -(thi - s);
            terms.push_back(std::vector<int>(ss.size(), obj));
            subs.push_back(std::move(ss));
        }
        for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
            // degree -(d-k) -> -(d-k-1): remove one index
            const auto& from = subs[k];
            const auto& to = subs[k + 1];
            HomMat<S> m = HomMat<S>::zero(alg, terms[k], terms[k + 1]);
            int from_obj = terms[k][0];
            for (std::size_t c = 0; c < from.size(); ++c) {
                for (std::size_t pos = 0; pos < from[c].size(); ++pos) {
                    std::vector<int> rem = from[c];
                    int gen = rem[pos];
                    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(pos));
                    std::size_t r = 0;
                    while (to[r] != rem) ++r;
                    auto e = degree_one(from_obj, gen);
                    if (pos % 2 != 0)
                        for (auto& x : e) x = -x;
                    m.entry[r][c] = std::move(e);
                }
            }
            diffs.push_back(std::move(m));
        }
        return Complex<S>(&alg, -d, std::move(terms), std::move(diffs));
    }

    if (twist == tlo - 1) {
        // O(tlo-1) ~ [O(tlo)^* -> ... -> O(thi)] in degrees 0..d
        std::vector<std::vector<int>> terms;
        std::vector<HomMat<S>> diffs;
        std::vector<std::vector<std::vector<int>>> subs;
        for (int s = 0; s <= d; ++s) {
            auto ss = detail::subsets_of_size(d + 1, s + 1);
            int obj = -(tlo + s);
            terms.push_back(std::vector<int>(ss.size(), obj));
            subs.push_back(std::move(ss));
        }
        for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
            const auto& from = subs[k];
            const auto& to = subs[k + 1];
            HomMat<S> m = HomMat<S>::zero(alg, terms[k], terms[k + 1]);
            int from_obj = terms[k][0];
            for (std::size_t c = 0; c < from.size(); ++c) {
                for (int gen = 0; gen <= d; ++gen) {
                    if (std::find(from[c].begin(), from[c].end(), gen) != from[c].end()) continue;
                    std::vector<int> add = from[c];
                    auto it = std::lower_bound(add.begin(), add.end(), gen);
                    std::size_t pos = static_cast<std::size_t>(it - add.begin());
                    add.insert(it, gen);
                    std::size_t r = 0;
                    while (to[r] != add) ++r;
                    auto e = degree_one(from_obj, gen);
                    if (pos % 2 != 0)
                        for (auto& x : e) x = -x;
                    m.entry[r][c] = std::move(e);
                }
            }
            diffs.push_back(std::move(m));
        }
        return Complex<S>(&alg, 0, std::move(terms), std::move(diffs));
    }

    throw std::invalid_argument("twist_rep: twist outside the materializable range");
}

} // namespace zalg
