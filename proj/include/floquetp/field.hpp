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

#ifndef FLOQUETP_FIELD_HPP
#define FLOQUETP_FIELD_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "floquetp/number_theory.hpp"

namespace floquetp {

class FieldElement;

/*
 * GF(p^m) in a polynomial basis: elements are residues modulo a monic
 * irreducible polynomial of degree m over GF(p). Contexts are created once per
 * process by the registry behind build_field() and are never destroyed, so
 * references and pointers to them stay valid and may be shared across threads.
 */
class FieldContext {
   public:
    using Coeff = std::uint32_t;

    FieldContext(const FieldContext&) = delete;
    FieldContext& operator=(const FieldContext&) = delete;

    std::uint32_t p() const noexcept { return p_; }
    int degree() const noexcept { return m_; }
    /// m + 1 coefficients, lowest degree first; the last one is 1.
    const std::vector<Coeff>& modulus() const noexcept { return modulus_; }
    /// True when the modulus is the lexicographically smallest irreducible of its degree.
    bool canonical() const noexcept { return canonical_; }
    /// Number of elements, p^m.
    const BigInt& size() const noexcept { return size_; }
    /// Order of the multiplicative group, p^m - 1.
    BigInt unit_group_order() const { return size_ - 1; }
    /// Whether the multiplicative group has an element of order n.
    bool has_roots_of_unity(std::uint64_t n) const;

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of the variable.
    FieldElement generator() const;
    FieldElement from_int(std::int64_t v) const;
    FieldElement from_coeffs(std::span<const std::int64_t> c) const;
    /// Element whose base-p digits (lowest first) are its coefficients.
    FieldElement from_index(const BigInt& index) const;

    /// Every element, sorted. Refuses fields with more than 2^22 elements.
    std::vector<FieldElement> elements() const;

    /// e.g. "GF(2^2) mod x^2+x+1".
    std::string describe() const;

   private:
    friend class FieldRegistry;
    friend class FieldElement;
    friend FieldElement frobenius_once(const FieldElement& x);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

    FieldContext(std::uint32_t p, std::vector<Coeff> modulus, bool canonical);

    std::uint32_t p_;
    int m_;
    std::vector<Coeff> modulus_;
    bool canonical_;
    BigInt size_;
    // Nonzero terms (degree, p - coefficient) of the modulus below the leading one.
    std::vector<std::pair<int, Coeff>> reduction_;
    // frobenius_[i] holds the coordinates of g^(i p).
    std::vector<std::vector<Coeff>> frobenius_;
};

/// Canonical context: lexicographically smallest (lowest degree first) monic
/// irreducible of degree m with nonzero constant term. Cached per (p, m).
const FieldContext& build_field(std::uint32_t p, int m);

/// Context for a caller-chosen irreducible modulus (m + 1 coefficients, monic).
const FieldContext& build_field_with_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

/// Ben-Or test: no factor of degree <= m/2.
bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

class FieldElement {
   public:
    using Coeffs = boost::container::small_vector<std::uint32_t, 6>;

    FieldElement() = default;
    FieldElement(const FieldContext& ctx, Coeffs coeffs);

    bool valid() const noexcept { return ctx_ != nullptr; }
    const FieldContext& context() const;
    const FieldContext* context_ptr() const noexcept { return ctx_; }
    std::span<const std::uint32_t> coeffs() const noexcept { return {c_.data(), c_.size()}; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool in_prime_field() const noexcept;
    /// The residue, for an element of the prime field.
    std::uint32_t prime_value() const;

    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;
    FieldElement pow(const BigInt& e) const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }
    FieldElement operator-() const;

    /// Same field and same coordinates; a prime-field element also equals its lift.
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    /// Lexicographic on coordinates, lowest degree first.
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

   private:
    friend FieldElement frobenius_once(const FieldElement& x);
    const FieldContext* ctx_ = nullptr;
    Coeffs c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// x^q for q = p^k, k >= 1.
FieldElement frobenius(const FieldElement& x, std::uint64_t q);
FieldElement frobenius_once(const FieldElement& x);

/// Smallest n >= 1 with x^n = 1. Needs p^m - 1 to fit in 64 bits.
std::uint64_t multiplicative_order(const FieldElement& x);
/// Smallest d | n with x^d = 1, for x known to satisfy x^n = 1.
std::uint64_t order_dividing(const FieldElement& x, std::uint64_t n);

/// The field GF(p^d), d = ord_n(p), and its n distinct n-th roots of unity, sorted.
std::pair<const FieldContext*, std::vector<FieldElement>> nth_roots_of_unity(std::uint64_t n, std::uint32_t p);
/// All n-th roots of unity inside ctx, sorted. Requires n | p^m - 1.
std::vector<FieldElement> roots_of_unity(const FieldContext& ctx, std::uint64_t n);
/// The smallest element of ctx of exact multiplicative order n.
FieldElement primitive_root_of_unity(const FieldContext& ctx, std::uint64_t n);

/// x + x^q + ... + x^(q^(r-1)); x must lie in GF(q^r).
FieldElement trace_to_subfield(const FieldElement& x, std::uint64_t q, int r);

/// Smallest r >= 1 with x^(p^r) = x: the degree of the smallest subfield holding x.
int subfield_degree(const FieldElement& x);
/// Whether x^q = x.
bool lies_in_subfield(const FieldElement& x, std::uint64_t q);

/// Image under the embedding that sends the source generator to the smallest
/// root of the source modulus in target. Prime-field elements map to themselves.
FieldElement embed(const FieldElement& x, const FieldContext& target);
/// Inverse of embed(): the preimage of x in sub, or NotInSubfield.
FieldElement restrict_to_subfield(const FieldElement& x, const FieldContext& sub);

/// The canonical field GF(p^M) with M = lcm(a, b) degree-wise.
const FieldContext& common_extension(const FieldContext& a, const FieldContext& b);

}  // namespace floquetp

#endif
