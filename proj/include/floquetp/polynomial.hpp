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

#ifndef FLOQUETP_POLYNOMIAL_HPP
#define FLOQUETP_POLYNOMIAL_HPP

#include <span>
#include <utility>
#include <vector>

#include "floquetp/field.hpp"

namespace floquetp {

/// Univariate polynomial over one field, coefficients lowest degree first.
class Polynomial {
   public:
    explicit Polynomial(const FieldContext& ctx) : ctx_(&ctx) {}
    /// Coefficients may come from ctx or from the prime field; trailing zeros are dropped.
    Polynomial(const FieldContext& ctx, std::vector<FieldElement> coeffs);

    static Polynomial x(const FieldContext& ctx);
    static Polynomial constant(const FieldElement& c);

    const FieldContext& context() const noexcept { return *ctx_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    FieldElement coeff(int i) const;
    const FieldElement& leading() const;
    const std::vector<FieldElement>& coeffs() const noexcept { return c_; }

    FieldElement evaluate(const FieldElement& x) const;
    Polynomial monic() const;
    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const FieldElement& s, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// a = q b + r with deg r < deg b.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b);

   private:
    void trim();
    const FieldContext* ctx_;
    std::vector<FieldElement> c_;
};

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial powmod(const Polynomial& base, const BigInt& e, const Polynomial& mod);

/// Squarefree parts with multiplicities: f = lc * prod g_i^{e_i}.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);
/// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
std::vector<std::pair<Polynomial, int>> factor(const Polynomial& f);
/// Degree of the smallest extension of the coefficient field over which f splits.
int splitting_degree(const Polynomial& f);

/// Distinct roots in the coefficient field, sorted.
std::vector<FieldElement> distinct_roots(const Polynomial& f);
/// Roots in the coefficient field, each repeated by its multiplicity, sorted.
std::vector<FieldElement> roots_with_multiplicity(const Polynomial& f);
/// Roots with multiplicity, sorted, of an f known to split into linear
/// factors; skips the distinct-degree stage. Throws if f does not split.
std::vector<FieldElement> split_roots(const Polynomial& f);
/// Same result by evaluating f at every element; small fields only.
std::vector<FieldElement> exhaustive_roots(const Polynomial& f);

/// Roots of sum coeffs[i] x^i inside search_field, with multiplicity.
/// Coefficients are embedded into search_field first.
std::vector<FieldElement> poly_roots(std::span<const FieldElement> coeffs, const FieldContext& search_field);

}  // namespace floquetp

#endif
