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

#ifndef FLOQUETP_TRACE_DESCENT_HPP
#define FLOQUETP_TRACE_DESCENT_HPP

#include <optional>
#include <vector>

#include "floquetp/matrix_spectral.hpp"

namespace floquetp {

/// Operator with coefficients in GF(q), q = p^σ, and the period to solve on.
struct DescentRequest {
    MatrixOperator a;
    std::uint64_t q;
    Sublattice sub;
};

/// The canonical GF(q); throws unless q is a power of p.
const FieldContext& subfield_of_order(std::uint32_t p, std::uint64_t q);

/// Pointwise x + x^q + ... + x^(q^(r-1)); values must lie in GF(q^r).
/// The result stays in f's field but is Frobenius-fixed.
PeriodicFunction trace_solution(const PeriodicFunction& f, std::uint64_t q, int r);
/// The same function with values moved into a subfield that holds them.
PeriodicFunction restrict_function(const PeriodicFunction& f, const FieldContext& sub);

/// A nonzero GF(q)-valued Λ'-periodic solution of A*f = 0, absent iff the
/// periodic kernel is zero. Values are in subfield_of_order(p, q).
std::optional<PeriodicFunction> descend_kernel(const DescentRequest& req);
/// A GF(q)-basis of the GF(q)-valued Λ'-periodic solutions.
std::vector<PeriodicFunction> gf_q_kernel_basis(const DescentRequest& req);

}  // namespace floquetp

#endif
