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

#ifndef FLOQUETP_GROUP_ALGEBRA_HPP
#define FLOQUETP_GROUP_ALGEBRA_HPP

#include <map>
#include <vector>

#include "floquetp/lattice.hpp"
#include "floquetp/linalg.hpp"

namespace floquetp {

/// Finitely supported function Z^s -> k, stored as its nonzero values.
/// The same object read as Σ f(λ) z^λ is its Fourier image, a Laurent polynomial.
class GroupAlgebraElement {
   public:
    using Terms = std::map<IntVec, FieldElement>;

    GroupAlgebraElement(const FieldContext& ctx, std::size_t rank) : ctx_(&ctx), rank_(rank) {}
    /// c δ_v.
    static GroupAlgebraElement delta(const FieldContext& ctx, const IntVec& v);
    static GroupAlgebraElement delta(const FieldElement& c, const IntVec& v);

    const FieldContext& context() const noexcept { return *ctx_; }
    std::size_t rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Single support point.
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    FieldElement coefficient(const IntVec& lambda) const;

    /// f(λ) += c.
    void add_term(const IntVec& lambda, const FieldElement& c);

    /// τ_v f: λ ↦ f(λ + v).
    GroupAlgebraElement shift(const IntVec& v) const;
    GroupAlgebraElement embedded(const FieldContext& target) const;
    /// Every coefficient, for subfield checks.
    std::vector<FieldElement> coefficients() const;

    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const FieldElement& s, const GroupAlgebraElement& a);
    /// Convolution (f*g)(u) = Σ_v f(v) g(u - v).
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

   private:
    const FieldContext* ctx_;
    std::size_t rank_;
    Terms terms_;
};

using LaurentPoly = GroupAlgebraElement;

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
/// The Fourier image; the representation is shared, only the reading changes.
inline const LaurentPoly& fourier(const GroupAlgebraElement& a) { return a; }
/// Σ q(λ) z^λ; coefficients are embedded into z's field.
FieldElement evaluate_laurent(const LaurentPoly& q, const TorusPoint& z);
/// Σ q(λ) z^{-λ}, the symbol value used for eigenvalues.
FieldElement evaluate_laurent_inverse(const LaurentPoly& q, const TorusPoint& z);

/// A Λ'-periodic function Z^s -> k^n, one vector per element of G = Z^s / Λ'.
class PeriodicFunction {
   public:
    PeriodicFunction(QuotientPtr q, const FieldContext& ctx, std::size_t n);

    const QuotientData& quotient() const noexcept { return *q_; }
    const QuotientPtr& quotient_ptr() const noexcept { return q_; }
    const FieldContext& context() const noexcept { return *ctx_; }
    std::size_t dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return values_.size(); }

    /// Value at the group element with this enumeration index.
    Vector& at(std::size_t g) { return values_[g]; }
    const Vector& at(std::size_t g) const { return values_[g]; }
    /// Value at a lattice point.
    const Vector& operator()(const IntVec& lambda) const { return values_[q_->index_of_point(lambda)]; }

    bool is_zero() const;
    PeriodicFunction shift(const IntVec& v) const;
    PeriodicFunction embedded(const FieldContext& target) const;
    /// Concatenation of all values in group order; the coordinate vector.
    Vector flatten() const;

    friend PeriodicFunction operator+(const PeriodicFunction& a, const PeriodicFunction& b);
    friend PeriodicFunction operator*(const FieldElement& s, const PeriodicFunction& f);
    friend bool operator==(const PeriodicFunction& a, const PeriodicFunction& b);

   private:
    QuotientPtr q_;
    const FieldContext* ctx_;
    std::size_t n_;
    std::vector<Vector> values_;
};

/// λ ↦ z^λ u as a periodic function; z must be trivial on Λ'.
PeriodicFunction elementary_function(const QuotientPtr& q, const TorusPoint& z, const Vector& u);
PeriodicFunction character_function(const QuotientPtr& q, const TorusPoint& z);

/// Scalar case: (a*f)(λ) = Σ_v a(v) f(λ - v).
PeriodicFunction apply_convolution(const GroupAlgebraElement& a, const PeriodicFunction& f);

/// a_*(g) = Σ_{λ ↦ g} a(λ), as a scalar periodic function over a's field.
PeriodicFunction pushforward(const GroupAlgebraElement& a, const QuotientPtr& q);

/// Coefficients of f in the character basis, stored at inverse characters:
/// entry (w, φ(w)) means f = Σ φ(w) w^{-λ}.
struct DualFunction {
    std::vector<std::pair<TorusPoint, Vector>> entries;
};

/// φ(w) = |G|^{-1} Σ_g f(g) w(g) over the characters w of G, in the field of `dual`.
DualFunction dft_forward(const PeriodicFunction& f, const std::vector<TorusPoint>& dual);
/// Convenience: characters over the smallest field holding them and f's values.
DualFunction dft_forward(const PeriodicFunction& f);
/// f(λ) = Σ φ(w) w^{-λ}, with values in ctx.
PeriodicFunction dft_inverse(const DualFunction& phi, const QuotientPtr& q, const FieldContext& ctx, std::size_t n);

}  // namespace floquetp

#endif
