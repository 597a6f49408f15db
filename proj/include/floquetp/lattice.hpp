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

#ifndef FLOQUETP_LATTICE_HPP
#define FLOQUETP_LATTICE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "floquetp/field.hpp"

namespace floquetp {

using IntVec = std::vector<std::int64_t>;
/// Row-major integer matrix.
using IntMat = std::vector<IntVec>;

IntMat identity_int(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& v);
std::int64_t det_int(const IntMat& a);

/// Column-style Hermite normal form of a nonsingular square matrix: the
/// columns generate the same lattice, H is upper triangular with positive
/// diagonal, and 0 <= H(i, j) < H(i, i) for j > i.
IntMat hermite_normal_form(const IntMat& m);

struct SmithForm {
    IntMat U, D, V;
};
/// U * M * V = D with U, V unimodular and D = diag(d_1, ..., d_s), d_i | d_{i+1}.
SmithForm smith_normal_form(const IntMat& m);

/// A finite-index sublattice of Z^s, stored by the Hermite form of its basis.
class Sublattice {
   public:
    /// Columns of `basis` generate the sublattice.
    explicit Sublattice(const IntMat& basis);
    /// d Z^s.
    static Sublattice scaled(std::size_t rank, std::int64_t d);

    std::size_t rank() const noexcept { return h_.size(); }
    const IntMat& basis() const noexcept { return h_; }
    IntVec generator(std::size_t j) const;
    std::uint64_t index() const noexcept { return index_; }
    bool contains(const IntVec& v) const;
    /// Canonical representative of v + Λ': 0 <= r_i < H(i, i).
    IntVec reduce(const IntVec& v) const;
    /// The index() canonical residues, first coordinate varying fastest.
    std::vector<IntVec> coset_representatives() const;
    /// Whether `other` is a sublattice of this one.
    bool contains(const Sublattice& other) const;

    friend bool operator==(const Sublattice& a, const Sublattice& b) { return a.h_ == b.h_; }
    std::string to_string() const;

   private:
    IntMat h_;
    std::uint64_t index_;
};

/// Parses "d" (d Z^rank) or semicolon-separated rows "a,b;c,d" whose columns are generators.
Sublattice parse_sublattice(const std::string& text, std::size_t rank);

bool is_p_saturated(const Sublattice& sub, std::uint32_t p);

/// The finite group G = Z^s / Λ' in Smith coordinates.
class QuotientData {
   public:
    explicit QuotientData(Sublattice sub);

    const Sublattice& sublattice() const noexcept { return sub_; }
    std::size_t rank() const noexcept { return sub_.rank(); }
    std::uint64_t order() const noexcept { return sub_.index(); }
    /// d_1 | d_2 | ... | d_s; leading ones are kept.
    const IntVec& invariant_factors() const noexcept { return d_; }
    /// lcm of the invariant factors.
    std::uint64_t exponent() const noexcept { return static_cast<std::uint64_t>(d_.empty() ? 1 : d_.back()); }
    const IntMat& U() const noexcept { return smith_.U; }
    const IntMat& V() const noexcept { return smith_.V; }

    /// π(λ) as a tuple with 0 <= g_i < d_i.
    IntVec project(const IntVec& lambda) const;
    /// Position of a tuple in the lexicographic enumeration.
    std::size_t index_of(const IntVec& g) const;
    std::size_t index_of_point(const IntVec& lambda) const { return index_of(project(lambda)); }
    /// Tuple at a position of the lexicographic enumeration.
    IntVec element(std::size_t idx) const;
    /// A lattice point mapping to the tuple g.
    IntVec lift(const IntVec& g) const;
    const IntVec& lift_of_index(std::size_t idx) const { return lifts_[idx]; }

   private:
    Sublattice sub_;
    SmithForm smith_;
    IntMat u_inv_;
    IntVec d_;
    std::vector<IntVec> lifts_;
};

using QuotientPtr = std::shared_ptr<const QuotientData>;
QuotientPtr make_quotient(const Sublattice& sub);

/// A point of the torus (k^x)^s; also the character λ ↦ z^λ of Z^s.
class TorusPoint {
   public:
    TorusPoint() = default;
    /// Coordinates must be nonzero and lie in ctx; the order is computed.
    TorusPoint(const FieldContext& ctx, std::vector<FieldElement> coords);
    TorusPoint(const FieldContext& ctx, std::vector<FieldElement> coords, std::uint64_t order, IntVec label = {});

    const FieldContext& context() const noexcept { return *ctx_; }
    std::size_t rank() const noexcept { return coords_.size(); }
    const std::vector<FieldElement>& coords() const noexcept { return coords_; }
    std::uint64_t order() const noexcept { return order_; }
    /// Smith index tuple of the character, when it came from dual_subgroup.
    const IntVec& label() const noexcept { return label_; }

    /// z^λ.
    FieldElement evaluate(const IntVec& lambda) const;
    TorusPoint inverse() const;
    TorusPoint embedded(const FieldContext& target) const;
    friend TorusPoint operator*(const TorusPoint& a, const TorusPoint& b);
    friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.coords_ < b.coords_; }

   private:
    const FieldContext* ctx_ = nullptr;
    std::vector<FieldElement> coords_;
    std::uint64_t order_ = 1;
    IntVec label_;
};

FieldElement evaluate_character(const TorusPoint& z, const IntVec& lambda);

/// Smallest field GF(p^d) holding the characters of G, d = ord_e(p).
const FieldContext& character_field(const QuotientData& q, std::uint32_t p);

/// All characters trivial on Λ', as points over `ambient` (which must contain
/// the e-th roots of unity), in lexicographic order of their Smith labels.
std::vector<TorusPoint> dual_subgroup(const QuotientData& q, const FieldContext& ambient);
/// Same over character_field(q, p); rejects non-saturated sublattices.
std::vector<TorusPoint> dual_subgroup(const Sublattice& sub, std::uint32_t p);

/// Least r >= 1 with z^(q^r) = z coordinatewise.
int frobenius_orbit_length(const TorusPoint& z, std::uint64_t q);

}  // namespace floquetp

#endif
