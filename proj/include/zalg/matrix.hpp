#pragma once
// Dense exact linear algebra over a field (or a commutative ring, for the
// arithmetic-only parts). Row-major, desk-scale, no pivoting heuristics
// beyond "first nonzero".

#include "zalg/field.hpp"

#include <cassert>
#include <optional>
#include <vector>

namespace zalg {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), d_(r * c, T(0)) {}
    Matrix(std::size_t r, std::size_t c, std::vector<T> data)
        : rows_(r), cols_(c), d_(std::move(data)) {
        assert(d_.size() == rows_ * cols_);
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    bool is_zero() const {
        for (const T& x : d_) if (x != T(0)) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.d_.size(); ++i) c.d_[i] = a.d_[i] + b.d_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.d_.size(); ++i) c.d_[i] = a.d_[i] - b.d_[i];
        return c;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj != T(0)) c(i, j) += aik * bkj;
                }
            }
        return c;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.d_.size(); ++i) c.d_[i] = s * a.d_[i];
        return c;
    }
    Matrix operator-() const {
        Matrix c(rows_, cols_);
        for (std::size_t i = 0; i < d_.size(); ++i) c.d_[i] = -d_[i];
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

    // column-major so sparse inputs stay cheap
    std::vector<T> apply(const std::vector<T>& v) const {
        assert(v.size() == cols_);
        std::vector<T> out(rows_, T(0));
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j] == T(0)) continue;
            for (std::size_t i = 0; i < rows_; ++i)
                if ((*this)(i, j) != T(0)) out[i] += (*this)(i, j) * v[j];
        }
        return out;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(std::size_t j, const std::vector<T>& v) {
        assert(v.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    static Matrix from_cols(std::size_t nrows, const std::vector<std::vector<T>>& cols) {
        Matrix m(nrows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> d_;
};

template <class T>
struct RrefResult {
    Matrix<T> r;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; // pivot column per pivot row
};

// Reduced row-echelon form over a field. Idempotent; rank = #pivots.
template <class T>
RrefResult<T> rref(Matrix<T> m) {
    static_assert(is_field_v<T>, "rref needs a field");
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == T(0)) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        T ip = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = ip * m(r, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == T(0)) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) { return rref(m).rank; }

// Basis of ker(m) as column vectors; count = cols - rank; m*v = 0 exactly.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    auto rr = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : rr.pivots) is_piv[c] = true;
    std::vector<std::vector<T>> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.r(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

// Some x with m*x = b, or nullopt if the system is inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Matrix<T> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto rr = rref(std::move(aug));
    std::vector<T> x(m.cols(), T(0));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == m.cols()) return std::nullopt; // pivot in the RHS column
        x[rr.pivots[i]] = rr.r(i, m.cols());
    }
    return x;
}

// A subspace of F^n kept as a reduced (RREF) row basis. The workhorse for
// module components, covers and image/kernel bookkeeping.
template <class T>
class Subspace {
public:
    Subspace() : n_(0) {}
    explicit Subspace(std::size_t ambient) : n_(ambient) {}

    static Subspace full(std::size_t n) {
        Subspace s(n);
        s.pivots_.resize(n);
        s.rows_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            s.pivots_[i] = i;
            s.rows_[i].assign(n, T(0));
            s.rows_[i][i] = T(1);
        }
        return s;
    }
    static Subspace span_of(std::size_t ambient, const std::vector<std::vector<T>>& vecs) {
        Subspace s(ambient);
        for (const auto& v : vecs) s.add(v);
        return s;
    }

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return pivots_.size(); }
    bool is_full() const { return dim() == n_; }

    // add a vector; returns true if it enlarged the span
    bool add(std::vector<T> v) {
        assert(v.size() == n_);
        reduce(v);
        std::size_t lead = n_;
        for (std::size_t j = 0; j < n_; ++j)
            if (v[j] != T(0)) { lead = j; break; }
        if (lead == n_) return false;
        T ip = T(1) / v[lead];
        for (auto& x : v) x = ip * x;
        // insert keeping pivot order, then re-reduce existing rows against it
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i == pos) continue;
            T f = rows_[i][lead];
            if (f == T(0)) continue;
            for (std::size_t j = lead; j < n_; ++j) rows_[i][j] = rows_[i][j] - f * rows_[pos][j];
        }
        return true;
    }

    bool contains(std::vector<T> v) const {
        reduce(v);
        for (const auto& x : v) if (x != T(0)) return false;
        return true;
    }
    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_row(i))) return false;
        return true;
    }

    const std::vector<T>& basis_row(std::size_t i) const { return rows_[i]; }

    // coordinates of v in this basis (requires contains(v))
    std::vector<T> coords(const std::vector<T>& v) const {
        std::vector<T> c(dim(), T(0));
        std::vector<T> w = v;
        for (std::size_t i = 0; i < dim(); ++i) {
            c[i] = w[pivots_[i]];
            if (c[i] == T(0)) continue;
            for (std::size_t j = pivots_[i]; j < n_; ++j) w[j] = w[j] - c[i] * rows_[i][j];
        }
        for (const auto& x : w)
            if (x != T(0)) throw std::invalid_argument("Subspace::coords: vector not in span");
        return c;
    }

    // a standard-basis complement: indices of non-pivot coordinates
    std::vector<std::size_t> complement_coords() const {
        std::vector<bool> piv(n_, false);
        for (auto p : pivots_) piv[p] = true;
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n_; ++j) if (!piv[j]) out.push_back(j);
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
    }

private:
    void reduce(std::vector<T>& v) const {
        for (std::size_t i = 0; i < dim(); ++i) {
            T f = v[pivots_[i]];
            if (f == T(0)) continue;
            for (std::size_t j = pivots_[i]; j < n_; ++j) v[j] = v[j] - f * rows_[i][j];
        }
    }

    std::size_t n_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::size_t> pivots_;
};

// {v : M v in S}, the preimage of a subspace under a matrix.
template <class T>
Subspace<T> preimage(const Matrix<T>& m, const Subspace<T>& s) {
    assert(s.ambient() == m.rows());
    // quotient coordinates: rows of M projected to a complement of S
    auto comp = s.complement_coords();
    Matrix<T> q(comp.size(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<T> c = m.col(j);
        // reduce c modulo S, then read complement coordinates
        std::vector<T> red = c;
        // reuse contains-style reduction via coords of projection: do manual reduce
        // (Subspace has no public reduce; emulate by subtracting the span projection)
        // Simple approach: extend S with c and see... cheaper: reduce with basis rows.
        for (std::size_t i = 0; i < s.dim(); ++i) {
            auto row = s.basis_row(i);
            // pivot of row i
            std::size_t p = 0;
            while (p < row.size() && row[p] == T(0)) ++p;
            T f = red[p];
            if (f == T(0)) continue;
            for (std::size_t k = 0; k < red.size(); ++k) red[k] = red[k] - f * row[k];
        }
        for (std::size_t i = 0; i < comp.size(); ++i) q(i, j) = red[comp[i]];
    }
    auto kb = kernel_basis(q);
    return Subspace<T>::span_of(m.cols(), kb);
}

} // namespace zalg
