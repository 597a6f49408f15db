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

#include "floquetp/oracle.hpp"

#include <algorithm>

#include "floquetp/errors.hpp"

namespace floquetp {

namespace {

// Moves c into field, up or down the tower.
FieldElement transfer(const FieldElement& c, const FieldContext& field) {
    if (field.degree() % c.context().degree() == 0) return embed(c, field);
    return restrict_to_subfield(c, field);
}

}  // namespace

QuotientMatrix build_quotient_matrix(const MatrixOperator& a, const Sublattice& sub) {
    return build_quotient_matrix(a, sub, a.context());
}

QuotientMatrix build_quotient_matrix(const MatrixOperator& a, const Sublattice& sub, const FieldContext& field) {
    if (sub.rank() != a.rank()) throw DomainError("sublattice rank differs from operator rank");
    auto q = make_quotient(sub);
    const std::size_t n = a.size(), order = q->order();
    QuotientMatrix out{q, n, Matrix(field, n * order, n * order)};
    for (std::size_t g = 0; g < order; ++g) {
        const IntVec& lam = q->lift_of_index(g);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& [v, c] : a.at(i, j).terms()) {
                    IntVec src(lam.size());
                    for (std::size_t k = 0; k < lam.size(); ++k) src[k] = lam[k] - v[k];
                    out.matrix(g * n + i, q->index_of_point(src) * n + j) += transfer(c, field);
                }
    }
    return out;
}

std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

std::vector<std::size_t> rank_sequence(const Matrix& m, const FieldElement& mu, std::size_t kmax) {
    const FieldContext& ctx = m.context().degree() % mu.context().degree() == 0 ? m.context() : mu.context();
    Matrix nil = embed_matrix(m, ctx);
    for (std::size_t i = 0; i < m.rows(); ++i) nil(i, i) -= embed(mu, ctx);
    std::vector<std::size_t> out{m.rows()};
    Matrix pw = Matrix::identity(ctx, m.rows());
    for (std::size_t k = 1; k <= kmax; ++k) {
        pw = pw * nil;
        out.push_back(rank(pw));
    }
    return out;
}

std::vector<PeriodicFunction> oracle_kernel(const QuotientMatrix& qm) {
    std::vector<PeriodicFunction> out;
    for (const auto& v : kernel_basis(qm.matrix)) {
        PeriodicFunction f(qm.quotient, qm.matrix.context(), qm.n);
        for (std::size_t g = 0; g < f.size(); ++g)
            for (std::size_t i = 0; i < qm.n; ++i) f.at(g)[i] = v[g * qm.n + i];
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<PrimaryBlocks> primary_blocks(const Matrix& m) {
    std::vector<PrimaryBlocks> out;
    for (const auto& [f, e] : factor(characteristic_polynomial(m))) {
        const Matrix fm = evaluate_polynomial(f, m);
        const std::size_t d = static_cast<std::size_t>(f.degree());
        // at_least[k]: blocks of size >= k + 1 per root.
        std::vector<std::size_t> at_least;
        std::size_t prev = m.rows();
        Matrix pw = Matrix::identity(m.context(), m.rows());
        while (true) {
            pw = pw * fm;
            const std::size_t r = rank(pw);
            if (r == prev) break;
            if ((prev - r) % d) throw Error("rank drop not divisible by the factor degree");
            at_least.push_back((prev - r) / d);
            prev = r;
        }
        PrimaryBlocks pb{f, {}};
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            const std::size_t exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
            pb.block_sizes.insert(pb.block_sizes.end(), exact, k + 1);
        }
        std::sort(pb.block_sizes.rbegin(), pb.block_sizes.rend());
        std::size_t total = 0;
        for (auto b : pb.block_sizes) total += b;
        if (total != static_cast<std::size_t>(e)) throw Error("block sizes do not match the factor multiplicity");
        out.push_back(std::move(pb));
    }
    return out;
}

std::map<FieldElement, std::vector<std::size_t>> oracle_block_multisets(const Matrix& m, const FieldContext& ambient) {
    std::map<FieldElement, std::vector<std::size_t>> out;
    for (const auto& pb : primary_blocks(m)) {
        std::vector<FieldElement> c;
        for (const auto& x : pb.factor.coeffs()) c.push_back(embed(x, ambient));
        for (const auto& mu : split_roots(Polynomial(ambient, c))) out[mu] = pb.block_sizes;
    }
    return out;
}

}  // namespace floquetp
