/*
   Copyright 2026 The floquetp Authors

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

#include "floquetp/linalg.hpp"

#include <algorithm>

#include "floquetp/errors.hpp"

namespace floquetp {

Matrix::Matrix(const FieldContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), a_(rows * cols, ctx.zero()) {}

Matrix Matrix::identity(const FieldContext& ctx, std::size_t n) {
    Matrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
    return m;
}

Matrix Matrix::from_columns(const FieldContext& ctx, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(ctx, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DomainError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = embed(cols[j][i], ctx);
    }
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(*ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
    Matrix r(*a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElement& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

Matrix operator*(const FieldElement& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.a_) x = s * x;
    return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DomainError("matrix-vector shape mismatch");
    Vector r(a.rows_, a.ctx_->zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (!a(i, j).is_zero()) r[i] += a(i, j) * v[j];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

RowEchelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const FieldElement inv = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const FieldElement f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
    const auto [r, pivots] = rref(m);
    const FieldContext& ctx = m.context();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), ctx.zero());
        v[free] = ctx.one();
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        out.push_back(std::move(v));
    }
    return out;
}

FieldElement determinant(Matrix m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    const FieldContext& ctx = m.context();
    FieldElement det = ctx.one();
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col).is_zero()) ++piv;
        if (piv == n) return ctx.zero();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const FieldElement inv = m(col, col).inv();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            const FieldElement f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.context(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = m.context().one();
    }
    auto [r, pivots] = rref(std::move(aug));
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.context(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

Matrix power(const Matrix& m, unsigned k) {
    Matrix r = Matrix::identity(m.context(), m.rows());
    Matrix b = m;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Polynomial characteristic_polynomial(const Matrix& m) {
    if (m.rows() != m.cols()) throw DomainError("characteristic polynomial of a non-square matrix");
    const FieldContext& ctx = m.context();
    const std::size_t n = m.rows();
    Matrix h = m;
    // Similarity transforms to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t i = j + 1;
        while (i < n && h(i, j).is_zero()) ++i;
        if (i == n) continue;
        if (i != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
        }
        const FieldElement inv = h(j + 1, j).inv();
        for (std::size_t k = j + 2; k < n; ++k) {
            if (h(k, j).is_zero()) continue;
            const FieldElement u = h(k, j) * inv;
            for (std::size_t c = 0; c < n; ++c) h(k, c) -= u * h(j + 1, c);
            for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, k);
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{i<j<=k} h_{j,j-1}) p_{i-1}, 1-based.
    std::vector<Polynomial> ps;
    ps.push_back(Polynomial::constant(ctx.one()));
    const Polynomial x = Polynomial::x(ctx);
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial pk = (x - Polynomial::constant(h(k - 1, k - 1))) * ps[k - 1];
        FieldElement t = ctx.one();
        for (std::size_t i = k - 1; i >= 1; --i) {
            t *= h(i, i - 1);
            if (t.is_zero()) break;
            const FieldElement c = h(i - 1, k - 1) * t;
            if (!c.is_zero()) pk = pk - c * ps[i - 1];
        }
        ps.push_back(std::move(pk));
    }
    return ps[n];
}

Matrix evaluate_polynomial(const Polynomial& f, const Matrix& m) {
    const std::size_t n = m.rows();
    Matrix acc(m.context(), n, n);
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * m;
        const FieldElement c = embed(f.coeff(i), m.context());
        for (std::size_t k = 0; k < n; ++k) acc(k, k) += c;
    }
    return acc;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
    if (basis.empty()) return is_zero_vector(v);
    const FieldContext& ctx = v.front().context();
    const std::size_t len = v.size();
    Matrix a(ctx, len, basis.size() + 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < len; ++i) a(i, j) = basis[j][i];
    for (std::size_t i = 0; i < len; ++i) a(i, basis.size()) = v[i];
    const auto piv = rref(std::move(a)).pivots;
    return piv.empty() || piv.back() != basis.size();
}

std::vector<std::size_t> independent_subset(const std::vector<Vector>& vs) {
    std::vector<std::size_t> out;
    if (vs.empty()) return out;
    const FieldContext& ctx = vs.front().front().context();
    Matrix a(ctx, vs.front().size(), vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < vs[j].size(); ++i) a(i, j) = vs[j][i];
    return rref(std::move(a)).pivots;
}

Matrix embed_matrix(const Matrix& m, const FieldContext& target) {
    Matrix r(target, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = embed(m(i, j), target);
    return r;
}

Vector embed_vector(const Vector& v, const FieldContext& target) {
    Vector r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(embed(x, target));
    return r;
}

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

}  // namespace floquetp
