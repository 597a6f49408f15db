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

#ifndef FLOQUETP_SCALAR_SPECTRAL_HPP
#define FLOQUETP_SCALAR_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "floquetp/group_algebra.hpp"

namespace floquetp {

/// GF(p^M) holding a's coefficients and every character of Z^s / Λ'.
/// Extra degrees (e.g. of a level μ) may be folded in.
const FieldContext& scalar_ambient_field(const FieldContext& coeffs, const QuotientData& q, int extra_degree = 1);

/// Characters z of Z^s / Λ' with â(z^{-1}) = 0.
std::vector<TorusPoint> symbolic_variety_points(const GroupAlgebraElement& a, const Sublattice& sub);
/// Basis of ker Δ_a on Λ'-periodic functions: the characters above.
std::vector<PeriodicFunction> harmonic_kernel(const GroupAlgebraElement& a, const Sublattice& sub);
/// Characters with â(z^{-1}) = μ.
std::vector<TorusPoint> fermi_level_points(const GroupAlgebraElement& a, const FieldElement& mu, const Sublattice& sub);

struct ScalarLevel {
    FieldElement mu;
    /// Degree over GF(p) of the smallest field holding μ.
    int subfield_degree = 1;
    std::vector<TorusPoint> points;
};

struct ScalarSpectralReport {
    QuotientPtr quotient;
    const FieldContext* ambient = nullptr;
    /// Sorted by μ.
    std::vector<ScalarLevel> levels;
    /// The μ = 0 level as periodic functions.
    std::vector<PeriodicFunction> kernel_basis;
};

ScalarSpectralReport eigendecompose(const GroupAlgebraElement& a, const Sublattice& sub);

enum class SpectrumKind { point, torus, full_field };

struct SpectrumClass {
    SpectrumKind kind;
    /// Set for SpectrumKind::point.
    std::optional<FieldElement> mu;
};

/// Spectrum of Δ_a over the algebraic closure.
SpectrumClass classify_spectrum(const GroupAlgebraElement& a);
/// Δ_a is invertible iff a is a nonzero multiple of a single δ_v.
bool is_invertible(const GroupAlgebraElement& a);
/// A nonzero finitely supported f with a * f = 0 exists iff a = 0.
bool finite_support_harmonic_exists(const GroupAlgebraElement& a);

}  // namespace floquetp

#endif
