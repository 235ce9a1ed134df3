/*
   Copyright 2026 The qlin Authors

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

#ifndef QLIN_MATRIX_HPP
#define QLIN_MATRIX_HPP

#include <optional>
#include <vector>

#include "poly.hpp"

namespace qlin {

template <ExactField K>
class Matrix {
   public:
    using value_type = typename K::value_type;

    Matrix(K field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    static Matrix identity(const K& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    static Matrix from_rows(const K& f, const std::vector<std::vector<value_type>>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(f, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw precondition_error("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const K& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    value_type& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<value_type> row(std::size_t i) const {
        return std::vector<value_type>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw precondition_error("matrix dimension mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const auto& x = (*this)(i, k);
                if (field_.is_zero(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = field_.add(r(i, j), field_.mul(x, o(k, j)));
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    /// In-place reduced row echelon form; returns the pivot columns in order.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && field_.is_zero((*this)(piv, c))) ++piv;
            if (piv == rows_) continue;
            swap_rows(piv, r);
            const auto inv = field_.inv((*this)(r, c));
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || field_.is_zero((*this)(i, c))) continue;
                const auto s = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    (*this)(i, j) = field_.sub((*this)(i, j), field_.mul(s, (*this)(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    /// Drops all-zero rows.
    Matrix nonzero_rows() const {
        std::vector<std::vector<value_type>> rs;
        for (std::size_t i = 0; i < rows_; ++i) {
            auto rw = row(i);
            bool nz = false;
            for (const auto& x : rw) nz = nz || !field_.is_zero(x);
            if (nz) rs.push_back(std::move(rw));
        }
        if (rs.empty()) return Matrix(field_, 0, cols_);
        return from_rows(field_, rs);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (!a.field_.equal(a.a_[i], b.a_[i])) return false;
        return true;
    }

   private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    K field_;
    std::size_t rows_, cols_;
    std::vector<value_type> a_;
};

/// Determinant by Gaussian elimination.
template <ExactField K>
typename K::value_type determinant(Matrix<K> m) {
    if (m.rows() != m.cols()) throw precondition_error("determinant of a non-square matrix");
    const K& f = m.field();
    const std::size_t n = m.rows();
    auto det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && f.is_zero(m(piv, c))) ++piv;
        if (piv == n) return f.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        const auto inv = f.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (f.is_zero(m(i, c))) continue;
            const auto s = f.mul(m(i, c), inv);
            for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(s, m(c, j)));
        }
    }
    return det;
}

/// Basis of {v : v * M = 0} as the rows of a matrix in reduced echelon form.
template <ExactField K>
Matrix<K> left_kernel(const Matrix<K>& m) {
    const K& f = m.field();
    // v M = 0  <=>  M^T v^T = 0
    Matrix<K> t = m.transpose();
    const auto pivots = t.rref();
    const std::size_t n = m.rows();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename K::value_type>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename K::value_type> v(n, f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(t(r, free));
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix<K>(f, 0, n);
    Matrix<K> b = Matrix<K>::from_rows(f, basis);
    b.rref();
    return b;
}

/**
 * Incremental linear-dependence detector. Vectors are added one at a time; each is reduced against the
 * echelon basis built so far while tracking how it is expressed through the original inputs. When a vector
 * reduces to zero, the coefficients expressing it through the earlier inputs are returned.
 */
template <ExactField K>
class DependenceFinder {
   public:
    using value_type = typename K::value_type;

    DependenceFinder(K field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

    std::size_t size() const noexcept { return count_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Returns c with v = sum_i c_i * input_i (i over previous inputs) if v is dependent; otherwise records v.
    std::optional<std::vector<value_type>> add(const std::vector<value_type>& v) {
        if (v.size() != dim_) throw precondition_error("vector length mismatch in dependence search");
        std::vector<value_type> x = v;
        // combination tracking: x = v - sum comb_i input_i
        std::vector<value_type> comb(count_ + 1, field_.zero());
        comb[count_] = field_.one();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& row = rows_[r];
            const auto& s = x[pivots_[r]];
            if (field_.is_zero(s)) continue;
            const auto factor = s;  // row is normalized: row[pivot] = 1
            for (std::size_t j = 0; j < dim_; ++j)
                if (!field_.is_zero(row.vec[j])) x[j] = field_.sub(x[j], field_.mul(factor, row.vec[j]));
            for (std::size_t j = 0; j < row.comb.size(); ++j)
                if (!field_.is_zero(row.comb[j])) comb[j] = field_.sub(comb[j], field_.mul(factor, row.comb[j]));
        }
        std::size_t piv = 0;
        while (piv < dim_ && field_.is_zero(x[piv])) ++piv;
        if (piv == dim_) {
            // 0 = comb . inputs, comb[count_] = 1  =>  v = -sum_{i<count} comb_i input_i
            std::vector<value_type> out(count_);
            for (std::size_t i = 0; i < count_; ++i) out[i] = field_.neg(comb[i]);
            return out;
        }
        const auto inv = field_.inv(x[piv]);
        for (auto& e : x) e = field_.mul(e, inv);
        for (auto& e : comb) e = field_.mul(e, inv);
        rows_.push_back({std::move(x), std::move(comb)});
        pivots_.push_back(piv);
        ++count_;
        return std::nullopt;
    }

   private:
    struct Row {
        std::vector<value_type> vec;
        std::vector<value_type> comb;
    };
    K field_;
    std::size_t dim_;
    std::size_t count_ = 0;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivots_;
};

/// Minimal polynomial of a square matrix acting on column vectors (lcm of the local minimal polynomials).
template <ExactField K>
Poly<K> minimal_polynomial(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw precondition_error("minimal polynomial of a non-square matrix");
    const K& f = a.field();
    const std::size_t n = a.rows();
    Poly<K> mu = Poly<K>::constant(f, f.one());
    for (std::size_t i = 0; i < n; ++i) {
        DependenceFinder<K> dep(f, n);
        std::vector<typename K::value_type> v(n, f.zero());
        v[i] = f.one();
        while (true) {
            auto c = dep.add(v);
            if (c) {
                // A^s e_i = sum c_j A^j e_i
                std::vector<typename K::value_type> coeffs(c->size() + 1, f.zero());
                for (std::size_t j = 0; j < c->size(); ++j) coeffs[j] = f.neg((*c)[j]);
                coeffs.back() = f.one();
                mu = lcm(mu, Poly<K>(f, std::move(coeffs)));
                break;
            }
            std::vector<typename K::value_type> w(n, f.zero());
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s)
                    if (!f.is_zero(a(r, s)) && !f.is_zero(v[s])) w[r] = f.add(w[r], f.mul(a(r, s), v[s]));
            v = std::move(w);
        }
    }
    return mu;
}

}  // namespace qlin

#endif
