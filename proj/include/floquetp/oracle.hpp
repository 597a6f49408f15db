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

#ifndef FLOQUETP_ORACLE_HPP
#define FLOQUETP_ORACLE_HPP

#include <map>
#include <vector>

#include "floquetp/matrix_spectral.hpp"

namespace floquetp {

/// f ↦ A*f on Λ'-periodic vector functions as one dense matrix. Row and
/// column (g, i) sit at g n + i, with g the group enumeration index.
struct QuotientMatrix {
    QuotientPtr quotient;
    std::size_t n = 0;
    Matrix matrix;
};

/// Works for any finite-index Λ'; saturation is not needed. Entries live in
/// `field`, which must contain A's coefficients (A's own field by default).
QuotientMatrix build_quotient_matrix(const MatrixOperator& a, const Sublattice& sub);
QuotientMatrix build_quotient_matrix(const MatrixOperator& a, const Sublattice& sub, const FieldContext& field);

std::size_t nullity(const Matrix& m);
/// rank((M - μ)^k) for k = 0..kmax; μ may lie in an extension of M's field.
std::vector<std::size_t> rank_sequence(const Matrix& m, const FieldElement& mu, std::size_t kmax);
/// The periodic functions spanning the kernel.
std::vector<PeriodicFunction> oracle_kernel(const QuotientMatrix& qm);

/// Jordan block sizes attached to each root of an irreducible factor f of
/// the characteristic polynomial, read off the ranks of f(M)^k.
struct PrimaryBlocks {
    Polynomial factor;
    std::vector<std::size_t> block_sizes;
};

std::vector<PrimaryBlocks> primary_blocks(const Matrix& m);
/// The same indexed by eigenvalue in `ambient`, which must split every factor.
std::map<FieldElement, std::vector<std::size_t>> oracle_block_multisets(const Matrix& m, const FieldContext& ambient);

}  // namespace floquetp

#endif
