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

#include "floquetp/trace_descent.hpp"

#include <set>
#include <sstream>

#include "floquetp/errors.hpp"
#include "floquetp/scalar_spectral.hpp"

namespace floquetp {

namespace {

struct Prepared {
    const FieldContext* target;
    const FieldContext* work;
    QuotientPtr quotient;
};

Prepared prepare(const DescentRequest& req) {
    const FieldContext& target = subfield_of_order(req.a.context().p(), req.q);
    for (const auto& c : req.a.coefficients())
        if (!lies_in_subfield(c, req.q))
            throw NotInSubfield("operator coefficient " + [&] {
                std::ostringstream os;
                os << c;
                return os.str();
            }() + " is not in GF(" + std::to_string(req.q) + ")");
    if (!is_p_saturated(req.sub, target.p()))
        throw NotSaturated("period sublattice of index " + std::to_string(req.sub.index()) +
                           " is not saturated for p = " + std::to_string(target.p()));
    auto q = make_quotient(req.sub);
    return {&target, &scalar_ambient_field(req.a.context(), *q, target.degree()), q};
}

bool frobenius_fixed(const PeriodicFunction& f, std::uint64_t q) {
    for (std::size_t g = 0; g < f.size(); ++g)
        for (const auto& x : f.at(g))
            if (!lies_in_subfield(x, q)) return false;
    return true;
}

// Multipliers over the working field with their kernels, one per Frobenius orbit.
struct OrbitData {
    TorusPoint z;
    int r;
    std::vector<Vector> kernel;
};

std::vector<OrbitData> orbits(const DescentRequest& req, const Prepared& prep) {
    std::vector<OrbitData> out;
    std::set<TorusPoint> seen;
    for (const auto& z : dual_subgroup(*prep.quotient, *prep.work)) {
        if (seen.count(z)) continue;
        const Matrix m = symbol_matrix(req.a, z);
        if (!determinant(m).is_zero()) continue;
        const int r = frobenius_orbit_length(z, req.q);
        std::vector<FieldElement> conj = z.coords();
        for (int k = 0; k < r; ++k) {
            seen.insert(TorusPoint(*prep.work, conj, z.order()));
            for (auto& c : conj) c = frobenius(c, req.q);
        }
        // Elimination never leaves the field generated by the entries, so
        // these vectors have coordinates in GF(q^r).
        out.push_back({z, r, kernel_basis(m)});
    }
    return out;
}

}  // namespace

const FieldContext& subfield_of_order(std::uint32_t p, std::uint64_t q) {
    const int sigma = prime_power_exponent(q, p);
    if (sigma == 0) throw DomainError(std::to_string(q) + " is not a power of " + std::to_string(p));
    return build_field(p, sigma);
}

PeriodicFunction trace_solution(const PeriodicFunction& f, std::uint64_t q, int r) {
    PeriodicFunction out(f.quotient_ptr(), f.context(), f.dim());
    for (std::size_t g = 0; g < f.size(); ++g)
        for (std::size_t i = 0; i < f.dim(); ++i) out.at(g)[i] = trace_to_subfield(f.at(g)[i], q, r);
    return out;
}

PeriodicFunction restrict_function(const PeriodicFunction& f, const FieldContext& sub) {
    PeriodicFunction out(f.quotient_ptr(), sub, f.dim());
    for (std::size_t g = 0; g < f.size(); ++g)
        for (std::size_t i = 0; i < f.dim(); ++i) out.at(g)[i] = restrict_to_subfield(f.at(g)[i], sub);
    return out;
}

std::optional<PeriodicFunction> descend_kernel(const DescentRequest& req) {
    const Prepared prep = prepare(req);
    for (const auto& orb : orbits(req, prep)) {
        for (const auto& u : orb.kernel) {
            const PeriodicFunction f = trace_solution(elementary_function(prep.quotient, orb.z, u), req.q, orb.r);
            if (f.is_zero()) continue;
            if (!apply_operator(req.a, f).is_zero() || !frobenius_fixed(f, req.q))
                throw Error("descended solution failed verification");
            return restrict_function(f, *prep.target);
        }
    }
    return std::nullopt;
}

std::vector<PeriodicFunction> gf_q_kernel_basis(const DescentRequest& req) {
    const Prepared prep = prepare(req);
    std::vector<PeriodicFunction> candidates;
    for (const auto& orb : orbits(req, prep)) {
        // θ generates GF(q^r) over GF(p), so 1, θ, ..., θ^(r-1) is a GF(q)-basis.
        const FieldElement theta = embed(build_field(prep.target->p(), prep.target->degree() * orb.r).generator(), *prep.work);
        for (const auto& u : orb.kernel) {
            FieldElement scale = prep.work->one();
            for (int j = 0; j < orb.r; ++j, scale *= theta) {
                Vector su;
                for (const auto& x : u) su.push_back(scale * x);
                candidates.push_back(trace_solution(elementary_function(prep.quotient, orb.z, su), req.q, orb.r));
            }
        }
    }
    std::vector<PeriodicFunction> restricted;
    std::vector<Vector> flat;
    for (const auto& f : candidates) {
        restricted.push_back(restrict_function(f, *prep.target));
        flat.push_back(restricted.back().flatten());
    }
    std::vector<PeriodicFunction> out;
    for (std::size_t k : independent_subset(flat)) {
        if (!apply_operator(req.a, candidates[k]).is_zero()) throw Error("descended basis element failed verification");
        out.push_back(restricted[k]);
    }
    return out;
}

}  // namespace floquetp
