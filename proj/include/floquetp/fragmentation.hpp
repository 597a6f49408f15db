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

#ifndef FLOQUETP_FRAGMENTATION_HPP
#define FLOQUETP_FRAGMENTATION_HPP

#include <utility>
#include <vector>

#include "floquetp/matrix_spectral.hpp"

namespace floquetp {

/*
 * Identifies functions on Z^s with n-vector functions on a sublattice Λ of
 * index n. Λ is coordinatized by its Hermite basis H, so λ = Hκ + v_i with
 * κ ∈ Z^s and v_i one of the canonical coset representatives.
 */
class FragmentationMap {
   public:
    explicit FragmentationMap(Sublattice sub);

    std::size_t big_rank() const noexcept { return sub_.rank(); }
    std::size_t size() const noexcept { return reps_.size(); }
    const Sublattice& sublattice() const noexcept { return sub_; }
    const std::vector<IntVec>& representatives() const noexcept { return reps_; }

    /// (i, κ) with λ = Hκ + v_i.
    std::pair<std::size_t, IntVec> decompose(const IntVec& lambda) const;
    /// Hκ + v_i.
    IntVec compose(std::size_t i, const IntVec& kappa) const;
    /// H^{-1} w for w ∈ Λ.
    IntVec coordinates(const IntVec& w) const;
    /// The period lattice in κ coordinates of functions periodic under big ⊆ Λ.
    Sublattice inner_period(const Sublattice& big) const;
    /// The inverse: H applied to a lattice given in κ coordinates.
    Sublattice outer_period(const Sublattice& inner) const;

   private:
    Sublattice sub_;
    std::vector<IntVec> reps_;
    std::vector<std::size_t> rep_index_;
};

/// κ ↦ (f̃(Hκ + v_1), ..., f̃(Hκ + v_n)) for a scalar f̃ with periods inside Λ.
PeriodicFunction fragment_function(const PeriodicFunction& f, const FragmentationMap& map);
/// Inverse of fragment_function: f̃(Hκ + v_i) = f_i(κ).
PeriodicFunction unfragment_function(const PeriodicFunction& f, const FragmentationMap& map);
/// B_ij(κ) = a(Hκ + v_i - v_j), so that fragmenting commutes with convolution.
MatrixOperator fragment_operator(const GroupAlgebraElement& a, const FragmentationMap& map);

struct VoltageEdge {
    std::size_t tail, head;
    IntVec label;
    FieldElement weight;
};

/// Finite graph with edges labeled by Z^s: a presentation of a periodic graph.
struct VoltageGraph {
    const FieldContext* field = nullptr;
    std::size_t vertices = 0;
    std::size_t rank = 0;
    std::vector<VoltageEdge> edges;
};

enum class GraphOperatorKind { adjacency, laplace };

/// Adjacency: entry (i, j) sums weight δ_{-label} over edges j -> i. Laplace
/// subtracts the weighted in-degree at each vertex, reduced mod p.
MatrixOperator voltage_operator(const VoltageGraph& g, GraphOperatorKind kind = GraphOperatorKind::adjacency);

/// Undirected multigraph; loops allowed.
struct Multigraph {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Voltages of the maximal abelian cover: breadth-first spanning tree from
/// vertex 0, tree edges labeled 0, chords labeled e_1, ..., e_s in edge order.
/// Each edge appears in both directions with weight 1.
VoltageGraph max_abelian_cover(const Multigraph& g, const FieldContext& field);

}  // namespace floquetp

#endif
