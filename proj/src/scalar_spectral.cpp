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

#include "floquetp/scalar_spectral.hpp"

#include <algorithm>

#include "floquetp/errors.hpp"

namespace floquetp {

namespace {

void require_saturated(const Sublattice& sub, std::uint32_t p) {
    if (!is_p_saturated(sub, p))
        throw NotSaturated("period sublattice of index " + std::to_string(sub.index()) + " is not saturated for p = " +
                           std::to_string(p));
}

}  // namespace

const FieldContext& scalar_ambient_field(const FieldContext& coeffs, const QuotientData& q, int extra_degree) {
    const std::uint32_t p = coeffs.p();
    if (q.order() % p == 0) throw NotSaturated("sublattice index is divisible by p = " + std::to_string(p));
    std::uint64_t m = lcm_u64(static_cast<std::uint64_t>(coeffs.degree()), multiplicative_order_mod(p, q.exponent()));
    m = lcm_u64(m, static_cast<std::uint64_t>(extra_degree));
    return build_field(p, static_cast<int>(m));
}

std::vector<TorusPoint> fermi_level_points(const GroupAlgebraElement& a, const FieldElement& mu, const Sublattice& sub) {
    require_saturated(sub, a.context().p());
    const QuotientData q(sub);
    const FieldContext& amb = scalar_ambient_field(a.context(), q, mu.context().degree());
    const FieldElement m = embed(mu, amb);
    std::vector<TorusPoint> out;
    for (const auto& z : dual_subgroup(q, amb))
        if (evaluate_laurent_inverse(a, z) == m) out.push_back(z);
    return out;
}

std::vector<TorusPoint> symbolic_variety_points(const GroupAlgebraElement& a, const Sublattice& sub) {
    return fermi_level_points(a, a.context().zero(), sub);
}

std::vector<PeriodicFunction> harmonic_kernel(const GroupAlgebraElement& a, const Sublattice& sub) {
    auto q = make_quotient(sub);
    std::vector<PeriodicFunction> out;
    for (const auto& z : symbolic_variety_points(a, sub)) out.push_back(character_function(q, z));
    return out;
}

ScalarSpectralReport eigendecompose(const GroupAlgebraElement& a, const Sublattice& sub) {
    require_saturated(sub, a.context().p());
    ScalarSpectralReport rep;
    rep.quotient = make_quotient(sub);
    rep.ambient = &scalar_ambient_field(a.context(), *rep.quotient);
    std::vector<ScalarLevel> levels;
    for (const auto& z : dual_subgroup(*rep.quotient, *rep.ambient)) {
        const FieldElement mu = evaluate_laurent_inverse(a, z);
        auto it = std::find_if(levels.begin(), levels.end(), [&](const ScalarLevel& l) { return l.mu == mu; });
        if (it == levels.end()) {
            levels.push_back({mu, subfield_degree(mu), {}});
            it = levels.end() - 1;
        }
        it->points.push_back(z);
    }
    std::sort(levels.begin(), levels.end(), [](const ScalarLevel& x, const ScalarLevel& y) { return x.mu < y.mu; });
    rep.levels = std::move(levels);
    for (const auto& l : rep.levels)
        if (l.mu.is_zero())
            for (const auto& z : l.points) rep.kernel_basis.push_back(character_function(rep.quotient, z));
    return rep;
}

SpectrumClass classify_spectrum(const GroupAlgebraElement& a) {
    if (a.is_zero()) return {SpectrumKind::point, a.context().zero()};
    if (a.is_monomial()) {
        const auto& [v, c] = *a.terms().begin();
        if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) return {SpectrumKind::point, c};
        return {SpectrumKind::torus, std::nullopt};
    }
    return {SpectrumKind::full_field, std::nullopt};
}

bool is_invertible(const GroupAlgebraElement& a) { return a.is_monomial(); }

bool finite_support_harmonic_exists(const GroupAlgebraElement& a) { return a.is_zero(); }

}  // namespace floquetp
