#pragma once
// Sparse exact Gauss-Jordan elimination over a field. Used where the dense
// kernel would be wasteful: window realization quotients, hom-constraint
// systems, and Hochschild cochain differentials.

#include "zalg/field.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace zalg {

template <class T>
using SparseVec = std::vector<std::pair<std::uint32_t, T>>; // sorted by index, nonzero values

template <class T>
void sparse_axpy(SparseVec<T>& dst, const T& f, const SparseVec<T>& src) {
    // dst += f * src, merging sorted vectors
    SparseVec<T> out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, f * src[j].second);
            ++j;
        } else {
            T v = dst[i].second + f * src[j].second;
            if (v != T(0)) out.emplace_back(dst[i].first, std::move(v));
            ++i; ++j;
        }
    }
    dst = std::move(out);
}

// Online reduced row-echelon form: feed rows one by one; the pivot rows are
// kept fully inter-reduced, so kernel extraction is direct.
template <class T>
class SparseRref {
    static_assert(is_field_v<T>, "SparseRref needs a field");
public:
    explicit SparseRref(std::size_t cols) : cols_(cols), pivot_of_col_(cols, NONE) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    // returns the new pivot column, or nullopt if the row reduced to zero
    std::optional<std::uint32_t> add_row(SparseVec<T> row) {
        reduce(row);
        if (row.empty()) return std::nullopt;
        std::uint32_t lead = row[0].first;
        T ip = T(1) / row[0].second;
        for (auto& e : row) e.second = ip * e.second;
        // Jordan step: clear column `lead` from existing pivot rows
        for (auto& pr : rows_) {
            auto it = std::lower_bound(pr.begin(), pr.end(), lead,
                [](const auto& e, std::uint32_t c) { return e.first < c; });
            if (it != pr.end() && it->first == lead) {
                T f = -it->second;
                sparse_axpy(pr, f, row);
            }
        }
        pivot_of_col_[lead] = rows_.size();
        pivot_cols_.push_back(lead);
        rows_.push_back(std::move(row));
        return lead;
    }

    bool col_has_pivot(std::uint32_t c) const { return pivot_of_col_[c] != NONE; }

    const std::vector<std::uint32_t>& pivot_cols() const { return pivot_cols_; }

    std::vector<std::uint32_t> free_cols() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t c = 0; c < cols_; ++c)
            if (pivot_of_col_[c] == NONE) out.push_back(c);
        return out;
    }

    // fully reduce an arbitrary vector against the pivot rows
    void reduce(SparseVec<T>& row) const {
        // entries at pivot columns can only come from the original row: pivot
        // rows carry no other pivot columns, so one sweep suffices
        SparseVec<T> hits;
        for (const auto& e : row)
            if (pivot_of_col_[e.first] != NONE) hits.push_back(e);
        for (const auto& h : hits) sparse_axpy(row, -h.second, rows_[pivot_of_col_[h.first]]);
    }

    // kernel of the stacked row matrix, one sparse vector per free column
    std::vector<SparseVec<T>> kernel_basis() const {
        std::vector<SparseVec<T>> out;
        for (std::uint32_t f : free_cols()) {
            SparseVec<T> v;
            v.emplace_back(f, T(1));
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const auto& pr = rows_[r];
                auto it = std::lower_bound(pr.begin(), pr.end(), f,
                    [](const auto& e, std::uint32_t c) { return e.first < c; });
                if (it != pr.end() && it->first == f)
                    v.emplace_back(pivot_cols_[r], -it->second);
            }
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            out.push_back(std::move(v));
        }
        return out;
    }

    // pivot row whose pivot column is c (must exist)
    const SparseVec<T>& row_of_pivot(std::uint32_t c) const { return rows_[pivot_of_col_[c]]; }

private:
    static constexpr std::size_t NONE = static_cast<std::size_t>(-1);
    std::size_t cols_;
    std::vector<SparseVec<T>> rows_;
    std::vector<std::size_t> pivot_of_col_;
    std::vector<std::uint32_t> pivot_cols_;
};

// Solve A x = b for one x (free variables set to 0), or nullopt if
// inconsistent. Rows of A are fed as sparse vectors over `cols` unknowns.
template <class T>
std::optional<std::vector<T>> sparse_solve(std::size_t cols,
                                           const std::vector<SparseVec<T>>& rows,
                                           const std::vector<T>& rhs) {
    SparseRref<T> el(cols + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseVec<T> r = rows[i];
        if (rhs[i] != T(0)) r.emplace_back(static_cast<std::uint32_t>(cols), rhs[i]);
        auto piv = el.add_row(std::move(r));
        if (piv && *piv == cols) return std::nullopt; // pivot in the RHS column
    }
    std::vector<T> x(cols, T(0));
    for (std::uint32_t c : el.pivot_cols()) {
        const auto& pr = el.row_of_pivot(c);
        auto it = std::lower_bound(pr.begin(), pr.end(), static_cast<std::uint32_t>(cols),
            [](const auto& e, std::uint32_t cc) { return e.first < cc; });
        if (it != pr.end() && it->first == cols) x[c] = it->second;
    }
    return x;
}

} // namespace zalg
