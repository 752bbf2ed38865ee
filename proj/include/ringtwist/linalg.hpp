/*
   Copyright 2026 The ringtwist Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef RINGTWIST_LINALG_HPP
#define RINGTWIST_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"

namespace ringtwist {

using Vec = std::vector<FieldElem>;

inline Vec zero_vec(Field f, std::size_t n) { return Vec(n, FieldElem::zero(f)); }
inline Vec unit_vec(Field f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = FieldElem::one(f);
    return v;
}
inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}
inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}
inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}
inline Vec scale(const FieldElem& s, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

/// Dense row-major matrix over a finite field.
class Mat {
   public:
    Mat() = default;
    Mat(Field f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols), a_(rows * cols, FieldElem::zero(f)) {}

    static Mat from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
        Mat m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        return m;
    }
    static Mat from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
        Mat m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    Field field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldElem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FieldElem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec column(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Vec apply(const Vec& x) const {
        if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
        Vec out = zero_vec(f_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!x[j].is_zero()) out[i] += (*this)(i, j) * x[j];
        return out;
    }

   private:
    Field f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElem> a_;
};

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const FieldElem inv = m(r, c).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const FieldElem f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

/// Basis of {x : m x = 0}, one vector per free column, in ascending order.
inline std::vector<Vec> nullspace(Mat m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(m.field(), m.cols());
        v[free] = FieldElem::one(m.field());
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with m x = b, if one exists.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side size mismatch");
    Mat aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x = zero_vec(m.field(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

/// Maximal independent subset of the given vectors (greedy, in order), as an
/// echelonized basis of their span.
inline std::vector<Vec> span_basis(Field f, std::size_t dim, const std::vector<Vec>& vecs) {
    if (vecs.empty()) return {};
    Mat m = Mat::from_rows(f, dim, vecs);
    const auto pivots = rref(m);
    std::vector<Vec> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Vec v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = m(r, j);
        out.push_back(std::move(v));
    }
    return out;
}

inline bool linearly_independent(Field f, std::size_t dim, const std::vector<Vec>& vecs) {
    if (vecs.empty()) return true;
    return rank(Mat::from_rows(f, dim, vecs)) == vecs.size();
}

/// Whether v lies in the span of `basis`.
inline bool in_span(Field f, std::size_t dim, const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return is_zero(v);
    return solve(Mat::from_columns(f, dim, basis), v).has_value();
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Mat aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = FieldElem::one(m.field());
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Mat out(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

}  // namespace ringtwist

#endif
