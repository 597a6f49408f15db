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

#ifndef FLOQUETP_LINALG_HPP
#define FLOQUETP_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "floquetp/field.hpp"
#include "floquetp/polynomial.hpp"

namespace floquetp {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over one field.
class Matrix {
   public:
    Matrix(const FieldContext& ctx, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldContext& ctx, std::size_t n);
    /// Columns given as vectors of equal length.
    static Matrix from_columns(const FieldContext& ctx, std::size_t rows, const std::vector<Vector>& cols);

    const FieldContext& context() const noexcept { return *ctx_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldElement& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FieldElement& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const FieldElement& s, const Matrix& a);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

   private:
    const FieldContext* ctx_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// One basis vector per free column, in increasing column order.
std::vector<Vector> kernel_basis(const Matrix& m);
FieldElement determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
Matrix power(const Matrix& m, unsigned k);
/// det(xI - m), via reduction to Hessenberg form.
Polynomial characteristic_polynomial(const Matrix& m);
/// f(m) by Horner's rule; f must be over m's field.
Matrix evaluate_polynomial(const Polynomial& f, const Matrix& m);

/// Whether v lies in the span of the given vectors.
bool in_span(const std::vector<Vector>& basis, const Vector& v);
/// Indices of a maximal independent prefix-greedy subset.
std::vector<std::size_t> independent_subset(const std::vector<Vector>& vs);

Matrix embed_matrix(const Matrix& m, const FieldContext& target);
Vector embed_vector(const Vector& v, const FieldContext& target);
bool is_zero_vector(const Vector& v);

}  // namespace floquetp

#endif
