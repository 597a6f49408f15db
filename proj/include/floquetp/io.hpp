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

#ifndef FLOQUETP_IO_HPP
#define FLOQUETP_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "floquetp/fragmentation.hpp"

namespace floquetp {

/// "3" (prime-field value, may be negative), "[c0,c1,...]", "g" or "g^k" (k may be negative).
FieldElement parse_field_element(std::string_view text, const FieldContext& ctx);
/// Inverse of parse_field_element: an integer for prime-field values, else "[c0,...]".
std::string format_field_element(const FieldElement& x);
/// "(1,-2)" style lattice point of the given rank; "()" for rank 0.
IntVec parse_lattice_point(std::string_view text, std::size_t rank);
std::string format_lattice_point(const IntVec& v);
/// "(λ) c; (λ') c'; ..." with distinct λ; empty text is the zero element.
GroupAlgebraElement parse_terms(std::string_view text, const FieldContext& ctx, std::size_t rank);
std::string format_terms(const GroupAlgebraElement& a);

enum class FileKind { operator_matrix, voltage_graph, fragmentation, graph };

const char* kind_name(FileKind k);

/// A scalar operator on Z^s and, optionally, the sublattice to fragment by.
struct FragmentationSpec {
    GroupAlgebraElement a;
    std::optional<Sublattice> sub;
};

/*
 * Line-oriented input. '#' starts a comment. Header lines come first:
 *
 *   kind operator | voltage_graph | fragmentation | graph   (default operator)
 *   p 2
 *   degree 2            optional, with the canonical modulus unless
 *   modulus 1 1 1       given explicitly, lowest coefficient first
 *   rank 1              not for graph
 *   size 2              operator only
 *   vertices 3          voltage_graph and graph
 *   variant laplace     voltage_graph only, default adjacency
 *   sub 2,1;0,3         fragmentation only, optional
 *
 * then body lines:
 *
 *   entry i j: (λ) c; (λ') c'      operator
 *   edge t h: (λ) w                voltage_graph, w defaults to 1
 *   edge u v                       graph
 *   scalar: (λ) c; ...             fragmentation
 */
struct OperatorFile {
    FileKind kind = FileKind::operator_matrix;
    const FieldContext* field = nullptr;
    std::optional<MatrixOperator> op;
    std::optional<VoltageGraph> voltage;
    GraphOperatorKind variant = GraphOperatorKind::adjacency;
    std::optional<FragmentationSpec> fragmentation;
    std::optional<Multigraph> graph;
};

OperatorFile parse_operator_file(std::string_view text);
/// The file's operator: the matrix itself, the voltage operator, or the 1×1
/// scalar of a fragmentation file. Throws for plain graphs.
MatrixOperator file_operator(const OperatorFile& f);

std::string format_operator_file(const MatrixOperator& a);
std::string format_voltage_graph(const VoltageGraph& g, GraphOperatorKind variant = GraphOperatorKind::adjacency);

}  // namespace floquetp

#endif
