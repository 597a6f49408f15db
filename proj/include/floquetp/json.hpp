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

#ifndef FLOQUETP_JSON_HPP
#define FLOQUETP_JSON_HPP

#include <json.hpp>

#include "floquetp/matrix_spectral.hpp"
#include "floquetp/scalar_spectral.hpp"

namespace floquetp {

/// Keys keep insertion order so that output is stable and readable.
using Json = nlohmann::ordered_json;

/// {"p", "degree", "modulus"}; the modulus lists coefficients lowest first.
Json field_to_json(const FieldContext& f);
const FieldContext& field_from_json(const Json& j);

/// An integer over a prime field, else the coefficient array.
Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const Json& j, const FieldContext& f);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, const FieldContext& f);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldContext& f);

/// Rows of the Hermite basis.
Json sublattice_to_json(const Sublattice& s);
Sublattice sublattice_from_json(const Json& j);

/// {"coords", "order", "label"}.
Json torus_point_to_json(const TorusPoint& z);
TorusPoint torus_point_from_json(const Json& j, const FieldContext& f);

/// {"field", "period", "dim", "values"} with one value per group element in
/// enumeration order.
Json periodic_function_to_json(const PeriodicFunction& f);
PeriodicFunction periodic_function_from_json(const Json& j);

Json terms_to_json(const GroupAlgebraElement& a);
GroupAlgebraElement terms_from_json(const Json& j, const FieldContext& f, std::size_t rank);
/// {"field", "rank", "size", "entries": [{"row", "col", "terms"}]} with zero entries omitted.
Json operator_to_json(const MatrixOperator& a);
MatrixOperator operator_from_json(const Json& j);

Json solution_to_json(const ElementarySolution& e);
Json spectral_decomposition_to_json(const SpectralDecomposition& d);
Json jordan_report_to_json(const JordanReport& r);
Json scalar_report_to_json(const ScalarSpectralReport& r);

}  // namespace floquetp

#endif
