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

#ifndef FLOQUETP_MATRIX_SPECTRAL_HPP
#define FLOQUETP_MATRIX_SPECTRAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "floquetp/group_algebra.hpp"

namespace floquetp {

/// Square matrix A = (a_ij) over the group algebra k[Z^s]; acts on vector
/// functions by (A*f)_i = Σ_j a_ij * f_j.
class MatrixOperator {
   public:
    MatrixOperator(const FieldContext& ctx, std::size_t rank, std::size_t n);
    /// δ_0 times the identity.
    static MatrixOperator identity(const FieldContext& ctx, std::size_t rank, std::size_t n);
    /// 1×1 operator.
    static MatrixOperator scalar(const GroupAlgebraElement& a);

    const FieldContext& context() const noexcept { return *ctx_; }
    std::size_t rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return n_; }

    const GroupAlgebraElement& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    /// Replaces entry (i, j); its field must embed into the operator's.
    void set(std::size_t i, std::size_t j, const GroupAlgebraElement& a);
    /// a_ij(λ) += c.
    void add_term(std::size_t i, std::size_t j, const IntVec& lambda, const FieldElement& c);

    bool is_zero() const;
    MatrixOperator embedded(const FieldContext& target) const;
    /// Every coefficient of every entry.
    std::vector<FieldElement> coefficients() const;

    friend MatrixOperator operator+(const MatrixOperator& a, const MatrixOperator& b);
    friend MatrixOperator operator-(const MatrixOperator& a, const MatrixOperator& b);
    friend MatrixOperator operator*(const FieldElement& s, const MatrixOperator& a);
    /// Composition: (AB)_ij = Σ_k a_ik * b_kj.
    friend MatrixOperator operator*(const MatrixOperator& a, const MatrixOperator& b);
    friend bool operator==(const MatrixOperator& a, const MatrixOperator& b);

   private:
    const FieldContext* ctx_;
    std::size_t rank_, n_;
    std::vector<GroupAlgebraElement> entries_;
};

/// Finitely supported vector function, one group-algebra element per coordinate.
using VectorFunction = std::vector<GroupAlgebraElement>;

VectorFunction apply_operator(const MatrixOperator& a, const VectorFunction& f);
PeriodicFunction apply_operator(const MatrixOperator& a, const PeriodicFunction& f);

/// Â(z^{-1}): entry (i, j) is Σ_λ a_ij(λ) z^{-λ}, over z's field.
Matrix symbol_matrix(const MatrixOperator& a, const TorusPoint& z);

/// Determinant of a square matrix over the Laurent ring (may be empty: gives 1).
LaurentPoly laurent_determinant(const FieldContext& ctx, std::size_t rank, const std::vector<std::vector<LaurentPoly>>& m);
/// det Â as a Laurent polynomial.
LaurentPoly det_symbol(const MatrixOperator& a);
/// det(xI - Â(z)) as a Laurent polynomial in s + 1 variables, x last.
LaurentPoly symbolic_characteristic_polynomial(const MatrixOperator& a);

/// A nonzero finitely supported f with A*f = 0, present iff det Â = 0.
std::optional<VectorFunction> finite_support_solution(const MatrixOperator& a);

/// The function λ ↦ z^λ u, where u is a generalized eigenvector of Â(z^{-1}).
struct ElementarySolution {
    TorusPoint z;
    Vector u;
    /// Least d with (Â(z^{-1}) - μ)^d u = 0.
    int depth = 1;
    FieldElement mu;
};

PeriodicFunction render(const QuotientPtr& q, const ElementarySolution& e);

/// Smallest canonical field holding A's coefficients, the characters of G and
/// every eigenvalue of every Â(z^{-1}), z ∈ Λ'^⊥.
const FieldContext& matrix_ambient_field(const MatrixOperator& a, const QuotientData& q, int extra_degree = 1);

/// Characters z of G with det Â(z^{-1}) = 0.
std::vector<TorusPoint> multipliers(const MatrixOperator& a, const Sublattice& sub);
std::size_t count_multipliers(const MatrixOperator& a, const Sublattice& sub);
/// Per multiplier, a basis of ker Â(z^{-1}); together a basis of the Λ'-periodic kernel.
std::vector<ElementarySolution> periodic_solutions(const MatrixOperator& a, const Sublattice& sub);
/// Per character, a basis of ker (Â(z^{-1}) - μ)^n.
std::vector<ElementarySolution> generalized_eigenspace(const MatrixOperator& a, const FieldElement& mu,
                                                       const Sublattice& sub);

struct SpectralLevel {
    FieldElement mu;
    int subfield_degree = 1;
    std::vector<ElementarySolution> basis;
};

struct SpectralDecomposition {
    QuotientPtr quotient;
    const FieldContext* ambient = nullptr;
    /// Sorted by μ; dimensions add up to n |G|.
    std::vector<SpectralLevel> levels;
};

SpectralDecomposition spectral_decomposition(const MatrixOperator& a, const Sublattice& sub);

/// vectors[k] has depth k + 1: (N^{d-1} h, ..., N h, h) for N = M - μ.
struct JordanChain {
    FieldElement mu;
    std::vector<Vector> vectors;
};

/// P^{-1} M P = J with P's columns the chain vectors in order.
struct JordanForm {
    std::vector<JordanChain> chains;
    Matrix P;
    Matrix J;
};

/// Jordan form of a matrix whose characteristic polynomial splits over its
/// field. Eigenvalues ascend; within one, chains are longest first.
JordanForm jordan_form(const Matrix& m);

struct PointJordan {
    TorusPoint z;
    Matrix symbol;
    JordanForm form;
};

struct JordanReport {
    QuotientPtr quotient;
    const FieldContext* ambient = nullptr;
    std::size_t n = 0;
    std::vector<PointJordan> points;
};

JordanReport jordan_basis(const MatrixOperator& a, const Sublattice& sub);
/// Block sizes per eigenvalue over all points, each list sorted descending.
std::map<FieldElement, std::vector<std::size_t>> block_multisets(const JordanReport& r);

/// Inverse in the operator algebra; exists iff det Â is a monomial.
std::optional<MatrixOperator> inverse_operator(const MatrixOperator& a);
/// φ(B_1, ..., B_r) for commuting operators B_i and a Laurent polynomial φ of
/// rank r; negative powers need invertible B_i.
MatrixOperator evaluate_phi_of_operator(const LaurentPoly& phi, const std::vector<MatrixOperator>& base);

}  // namespace floquetp

#endif
