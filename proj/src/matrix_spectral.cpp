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

#include "floquetp/matrix_spectral.hpp"

#include <algorithm>
#include <bit>

#include "floquetp/errors.hpp"
#include "floquetp/scalar_spectral.hpp"

namespace floquetp {

namespace {

const FieldContext& unify(const FieldContext& a, const FieldContext& b) {
    if (&a == &b) return a;
    if (a.p() != b.p()) throw ContextMismatch("operators over different characteristics");
    if (a.degree() % b.degree() == 0) return a;
    if (b.degree() % a.degree() == 0) return b;
    throw ContextMismatch("no embedding between " + a.describe() + " and " + b.describe());
}

void check_shape(const MatrixOperator& a, const MatrixOperator& b) {
    if (a.size() != b.size() || a.rank() != b.rank())
        throw DomainError("operator shapes differ: " + std::to_string(a.size()) + "x" + std::to_string(a.size()) +
                          " rank " + std::to_string(a.rank()) + " vs " + std::to_string(b.size()) + "x" +
                          std::to_string(b.size()) + " rank " + std::to_string(b.rank()));
}

void require_saturated(const Sublattice& sub, std::uint32_t p) {
    if (!is_p_saturated(sub, p))
        throw NotSaturated("period sublattice of index " + std::to_string(sub.index()) + " is not saturated for p = " +
                           std::to_string(p));
}

IntVec extended(const IntVec& v, std::int64_t last) {
    IntVec r = v;
    r.push_back(last);
    return r;
}

Matrix shifted(const Matrix& m, const FieldElement& mu) {
    Matrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) -= mu;
    return r;
}

int depth_of(const Matrix& n, Vector u) {
    int d = 0;
    while (!is_zero_vector(u)) {
        u = n * u;
        ++d;
    }
    return d;
}

// Basis of ker (M - μ)^n tagged with z and chain depths.
void generalized_kernel(const Matrix& m, const FieldElement& mu, const TorusPoint& z,
                        std::vector<ElementarySolution>& out) {
    const Matrix n = shifted(m, mu);
    for (auto& u : kernel_basis(power(n, static_cast<unsigned>(m.rows())))) {
        const int d = depth_of(n, u);
        out.push_back({z, std::move(u), d, mu});
    }
}

std::vector<FieldElement> distinct(std::vector<FieldElement> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

MatrixOperator power_operator(const MatrixOperator& b, std::int64_t e) {
    const MatrixOperator base = e >= 0 ? b : [&] {
        auto inv = inverse_operator(b);
        if (!inv) throw DomainError("negative power of a non-invertible operator");
        return *inv;
    }();
    MatrixOperator r = MatrixOperator::identity(b.context(), b.rank(), b.size());
    for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k) r = r * base;
    return r;
}

}  // namespace

MatrixOperator::MatrixOperator(const FieldContext& ctx, std::size_t rank, std::size_t n)
    : ctx_(&ctx), rank_(rank), n_(n), entries_(n * n, GroupAlgebraElement(ctx, rank)) {}

MatrixOperator MatrixOperator::identity(const FieldContext& ctx, std::size_t rank, std::size_t n) {
    MatrixOperator r(ctx, rank, n);
    for (std::size_t i = 0; i < n; ++i) r.add_term(i, i, IntVec(rank, 0), ctx.one());
    return r;
}

MatrixOperator MatrixOperator::scalar(const GroupAlgebraElement& a) {
    MatrixOperator r(a.context(), a.rank(), 1);
    r.set(0, 0, a);
    return r;
}

void MatrixOperator::set(std::size_t i, std::size_t j, const GroupAlgebraElement& a) {
    if (a.rank() != rank_) throw DomainError("entry rank differs from operator rank");
    entries_.at(i * n_ + j) = a.embedded(*ctx_);
}

void MatrixOperator::add_term(std::size_t i, std::size_t j, const IntVec& lambda, const FieldElement& c) {
    if (lambda.size() != rank_) throw DomainError("lattice point rank differs from operator rank");
    entries_.at(i * n_ + j).add_term(lambda, embed(c, *ctx_));
}

bool MatrixOperator::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const GroupAlgebraElement& e) { return e.is_zero(); });
}

MatrixOperator MatrixOperator::embedded(const FieldContext& target) const {
    MatrixOperator r(target, rank_, n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].embedded(target);
    return r;
}

std::vector<FieldElement> MatrixOperator::coefficients() const {
    std::vector<FieldElement> out;
    for (const auto& e : entries_)
        for (const auto& [lam, c] : e.terms()) out.push_back(c);
    return out;
}

MatrixOperator operator+(const MatrixOperator& a, const MatrixOperator& b) {
    check_shape(a, b);
    MatrixOperator r = a.embedded(unify(*a.ctx_, *b.ctx_));
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] = r.entries_[k] + b.entries_[k];
    return r;
}

MatrixOperator operator-(const MatrixOperator& a, const MatrixOperator& b) {
    check_shape(a, b);
    MatrixOperator r = a.embedded(unify(*a.ctx_, *b.ctx_));
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] = r.entries_[k] - b.entries_[k];
    return r;
}

MatrixOperator operator*(const FieldElement& s, const MatrixOperator& a) {
    MatrixOperator r = a.embedded(unify(s.context(), *a.ctx_));
    for (auto& e : r.entries_) e = s * e;
    return r;
}

MatrixOperator operator*(const MatrixOperator& a, const MatrixOperator& b) {
    check_shape(a, b);
    MatrixOperator r(unify(*a.ctx_, *b.ctx_), a.rank_, a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t j = 0; j < a.n_; ++j) {
            GroupAlgebraElement acc(*r.ctx_, a.rank_);
            for (std::size_t k = 0; k < a.n_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.entries_[i * a.n_ + j] = acc;
        }
    return r;
}

bool operator==(const MatrixOperator& a, const MatrixOperator& b) {
    return a.n_ == b.n_ && a.rank_ == b.rank_ && a.entries_ == b.entries_;
}

VectorFunction apply_operator(const MatrixOperator& a, const VectorFunction& f) {
    if (f.size() != a.size()) throw DomainError("vector function length differs from operator size");
    VectorFunction r;
    for (std::size_t i = 0; i < a.size(); ++i) {
        GroupAlgebraElement acc(a.context(), a.rank());
        for (std::size_t j = 0; j < a.size(); ++j) acc = acc + a.at(i, j) * f[j];
        r.push_back(acc);
    }
    return r;
}

PeriodicFunction apply_operator(const MatrixOperator& a, const PeriodicFunction& f) {
    if (f.dim() != a.size()) throw DomainError("periodic function dimension differs from operator size");
    if (f.quotient().rank() != a.rank()) throw DomainError("periodic function rank differs from operator rank");
    const FieldContext& ctx = unify(a.context(), f.context());
    const QuotientData& q = f.quotient();
    PeriodicFunction r(f.quotient_ptr(), ctx, a.size());
    for (std::size_t g = 0; g < q.order(); ++g) {
        const IntVec& lam = q.lift_of_index(g);
        Vector& out = r.at(g);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                for (const auto& [v, c] : a.at(i, j).terms()) {
                    IntVec shifted_point(lam.size());
                    for (std::size_t k = 0; k < lam.size(); ++k) shifted_point[k] = lam[k] - v[k];
                    out[i] += embed(c, ctx) * embed(f(shifted_point)[j], ctx);
                }
    }
    return r;
}

Matrix symbol_matrix(const MatrixOperator& a, const TorusPoint& z) {
    if (z.rank() != a.rank()) throw DomainError("torus point rank differs from operator rank");
    const FieldContext& ctx = z.context();
    Matrix m(ctx, a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = evaluate_laurent_inverse(a.at(i, j), z);
    return m;
}

LaurentPoly laurent_determinant(const FieldContext& ctx, std::size_t rank,
                                const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    if (n > 20) throw DomainError("Laurent determinant limited to 20 rows");
    // dp[S]: signed sum over assignments of the first |S| rows to the columns S.
    std::vector<std::optional<LaurentPoly>> dp(std::size_t{1} << n);
    dp[0] = LaurentPoly::delta(ctx, IntVec(rank, 0));
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (!dp[mask] || dp[mask]->is_zero()) continue;
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
        if (row == n) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (mask >> c & 1 || m[row][c].is_zero()) continue;
            const bool odd = std::popcount(mask >> (c + 1)) % 2;
            LaurentPoly term = *dp[mask] * m[row][c];
            if (odd) term = GroupAlgebraElement(ctx, rank) - term;
            auto& slot = dp[mask | std::size_t{1} << c];
            slot = slot ? *slot + term : term;
        }
    }
    const auto& full = dp.back();
    return full ? full->embedded(ctx) : LaurentPoly(ctx, rank);
}

LaurentPoly det_symbol(const MatrixOperator& a) {
    std::vector<std::vector<LaurentPoly>> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m[i].push_back(a.at(i, j));
    return laurent_determinant(a.context(), a.rank(), m);
}

LaurentPoly symbolic_characteristic_polynomial(const MatrixOperator& a) {
    const FieldContext& ctx = a.context();
    const std::size_t s = a.rank();
    std::vector<std::vector<LaurentPoly>> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            LaurentPoly e(ctx, s + 1);
            for (const auto& [lam, c] : a.at(i, j).terms()) e.add_term(extended(lam, 0), -c);
            if (i == j) e.add_term(extended(IntVec(s, 0), 1), ctx.one());
            m[i].push_back(e);
        }
    return laurent_determinant(ctx, s + 1, m);
}

std::optional<VectorFunction> finite_support_solution(const MatrixOperator& a) {
    if (!det_symbol(a).is_zero()) return std::nullopt;
    const std::size_t n = a.size();
    const FieldContext& ctx = a.context();
    const LaurentPoly zero(ctx, a.rank());

    // Fraction-free elimination to find pivot rows and columns.
    std::vector<std::vector<LaurentPoly>> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i].push_back(a.at(i, j));
    std::vector<bool> used(n, false), pivot_col(n, false);
    std::vector<std::size_t> rows;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = n;
        for (std::size_t i = 0; i < n && r == n; ++i)
            if (!used[i] && !m[i][c].is_zero()) r = i;
        if (r == n) continue;
        used[r] = true;
        pivot_col[c] = true;
        rows.push_back(r);
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || m[i][c].is_zero()) continue;
            const LaurentPoly f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] = m[r][c] * m[i][j] - f * m[r][j];
        }
    }
    std::sort(rows.begin(), rows.end());
    std::vector<std::size_t> cols;
    bool free_taken = false;
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_col[c]) {
            cols.push_back(c);
        } else if (!free_taken) {
            cols.push_back(c);
            free_taken = true;
        }
    }
    if (!free_taken) throw Error("elimination found full rank for a singular symbol");

    // f_{cols[k]} = (-1)^k det of the pivot-row submatrix without column k.
    VectorFunction f(n, zero);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::vector<LaurentPoly>> minor;
        for (std::size_t r : rows) {
            std::vector<LaurentPoly> row;
            for (std::size_t t = 0; t < cols.size(); ++t)
                if (t != k) row.push_back(a.at(r, cols[t]));
            minor.push_back(std::move(row));
        }
        LaurentPoly d = laurent_determinant(ctx, a.rank(), minor);
        f[cols[k]] = k % 2 ? zero - d : d;
    }
    const auto image = apply_operator(a, f);
    if (std::any_of(f.begin(), f.end(), [](const LaurentPoly& x) { return !x.is_zero(); }) == false ||
        !std::all_of(image.begin(), image.end(), [](const LaurentPoly& x) { return x.is_zero(); }))
        throw Error("finite-support solution failed verification");
    return f;
}

PeriodicFunction render(const QuotientPtr& q, const ElementarySolution& e) { return elementary_function(q, e.z, e.u); }

const FieldContext& matrix_ambient_field(const MatrixOperator& a, const QuotientData& q, int extra_degree) {
    const FieldContext& f1 = scalar_ambient_field(a.context(), q, extra_degree);
    std::uint64_t l = 1;
    for (const auto& z : dual_subgroup(q, f1))
        l = lcm_u64(l, static_cast<std::uint64_t>(splitting_degree(characteristic_polynomial(symbol_matrix(a, z)))));
    return build_field(f1.p(), f1.degree() * static_cast<int>(l));
}

std::vector<TorusPoint> multipliers(const MatrixOperator& a, const Sublattice& sub) {
    require_saturated(sub, a.context().p());
    const QuotientData q(sub);
    std::vector<TorusPoint> out;
    for (const auto& z : dual_subgroup(q, scalar_ambient_field(a.context(), q)))
        if (determinant(symbol_matrix(a, z)).is_zero()) out.push_back(z);
    return out;
}

std::size_t count_multipliers(const MatrixOperator& a, const Sublattice& sub) { return multipliers(a, sub).size(); }

std::vector<ElementarySolution> periodic_solutions(const MatrixOperator& a, const Sublattice& sub) {
    std::vector<ElementarySolution> out;
    for (const auto& z : multipliers(a, sub))
        for (auto& u : kernel_basis(symbol_matrix(a, z))) out.push_back({z, std::move(u), 1, z.context().zero()});
    return out;
}

std::vector<ElementarySolution> generalized_eigenspace(const MatrixOperator& a, const FieldElement& mu,
                                                       const Sublattice& sub) {
    require_saturated(sub, a.context().p());
    const QuotientData q(sub);
    const FieldContext& amb = scalar_ambient_field(a.context(), q, mu.context().degree());
    const FieldElement m = embed(mu, amb);
    std::vector<ElementarySolution> out;
    for (const auto& z : dual_subgroup(q, amb)) generalized_kernel(symbol_matrix(a, z), m, z, out);
    return out;
}

SpectralDecomposition spectral_decomposition(const MatrixOperator& a, const Sublattice& sub) {
    require_saturated(sub, a.context().p());
    SpectralDecomposition rep;
    rep.quotient = make_quotient(sub);
    rep.ambient = &matrix_ambient_field(a, *rep.quotient);
    std::map<FieldElement, std::vector<ElementarySolution>> by_mu;
    for (const auto& z : dual_subgroup(*rep.quotient, *rep.ambient)) {
        const Matrix m = symbol_matrix(a, z);
        for (const auto& mu : distinct(split_roots(characteristic_polynomial(m)))) generalized_kernel(m, mu, z, by_mu[mu]);
    }
    for (auto& [mu, basis] : by_mu) rep.levels.push_back({mu, subfield_degree(mu), std::move(basis)});
    return rep;
}

JordanForm jordan_form(const Matrix& m) {
    const FieldContext& ctx = m.context();
    const std::size_t n = m.rows();
    JordanForm out{{}, Matrix(ctx, n, n), Matrix(ctx, n, n)};
    const auto roots = split_roots(characteristic_polynomial(m));
    for (const auto& mu : distinct(roots)) {
        const std::size_t mult = static_cast<std::size_t>(std::count(roots.begin(), roots.end(), mu));
        const Matrix nil = shifted(m, mu);
        // kernels[k] is a basis of ker N^k, up to the power where it reaches mult.
        std::vector<std::vector<Vector>> kernels{{}};
        Matrix pw = Matrix::identity(ctx, n);
        while (kernels.back().size() < mult) {
            pw = pw * nil;
            kernels.push_back(kernel_basis(pw));
        }
        std::vector<std::pair<Vector, std::size_t>> heads;
        for (std::size_t k = kernels.size() - 1; k >= 1; --k) {
            std::vector<Vector> span = kernels[k - 1];
            for (const auto& [h, len] : heads) {
                Vector v = h;
                for (std::size_t t = 0; t < len - k; ++t) v = nil * v;
                span.push_back(std::move(v));
            }
            for (const auto& b : kernels[k]) {
                if (in_span(span, b)) continue;
                span.push_back(b);
                heads.emplace_back(b, k);
            }
        }
        for (const auto& [h, len] : heads) {
            JordanChain chain{mu, std::vector<Vector>(len)};
            Vector v = h;
            for (std::size_t t = len; t-- > 0;) {
                chain.vectors[t] = v;
                v = nil * v;
            }
            out.chains.push_back(std::move(chain));
        }
    }
    std::size_t col = 0;
    for (const auto& chain : out.chains)
        for (std::size_t t = 0; t < chain.vectors.size(); ++t, ++col) {
            for (std::size_t i = 0; i < n; ++i) out.P(i, col) = chain.vectors[t][i];
            out.J(col, col) = chain.mu;
            if (t > 0) out.J(col - 1, col) = ctx.one();
        }
    if (col != n || rank(out.P) != n || !(m * out.P == out.P * out.J))
        throw Error("Jordan chain construction failed verification");
    return out;
}

JordanReport jordan_basis(const MatrixOperator& a, const Sublattice& sub) {
    require_saturated(sub, a.context().p());
    JordanReport rep;
    rep.quotient = make_quotient(sub);
    rep.ambient = &matrix_ambient_field(a, *rep.quotient);
    rep.n = a.size();
    for (const auto& z : dual_subgroup(*rep.quotient, *rep.ambient)) {
        Matrix m = symbol_matrix(a, z);
        JordanForm form = jordan_form(m);
        rep.points.push_back({z, std::move(m), std::move(form)});
    }
    return rep;
}

std::map<FieldElement, std::vector<std::size_t>> block_multisets(const JordanReport& r) {
    std::map<FieldElement, std::vector<std::size_t>> out;
    for (const auto& pt : r.points)
        for (const auto& chain : pt.form.chains) out[chain.mu].push_back(chain.vectors.size());
    for (auto& [mu, sizes] : out) std::sort(sizes.rbegin(), sizes.rend());
    return out;
}

std::optional<MatrixOperator> inverse_operator(const MatrixOperator& a) {
    const LaurentPoly det = det_symbol(a);
    if (!det.is_monomial()) return std::nullopt;
    const auto& [v, c] = *det.terms().begin();
    IntVec neg(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
    const LaurentPoly det_inv = LaurentPoly::delta(c.inv(), neg);
    const std::size_t n = a.size();
    MatrixOperator r(a.context(), a.rank(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // Adjugate entry (i, j) is the signed cofactor of (j, i).
            std::vector<std::vector<LaurentPoly>> minor;
            for (std::size_t r0 = 0; r0 < n; ++r0) {
                if (r0 == j) continue;
                std::vector<LaurentPoly> row;
                for (std::size_t c0 = 0; c0 < n; ++c0)
                    if (c0 != i) row.push_back(a.at(r0, c0));
                minor.push_back(std::move(row));
            }
            LaurentPoly cof = det_inv * laurent_determinant(a.context(), a.rank(), minor);
            if ((i + j) % 2) cof = LaurentPoly(a.context(), a.rank()) - cof;
            r.set(i, j, cof);
        }
    return r;
}

MatrixOperator evaluate_phi_of_operator(const LaurentPoly& phi, const std::vector<MatrixOperator>& base) {
    if (phi.rank() != base.size()) throw DomainError("polynomial rank differs from the number of base operators");
    if (base.empty()) throw DomainError("no base operators");
    const FieldContext* ctx = &phi.context();
    for (const auto& b : base) {
        check_shape(b, base.front());
        ctx = &unify(*ctx, b.context());
    }
    MatrixOperator r(*ctx, base.front().rank(), base.front().size());
    for (const auto& [lam, c] : phi.terms()) {
        MatrixOperator term = MatrixOperator::identity(*ctx, r.rank(), r.size());
        for (std::size_t k = 0; k < base.size(); ++k) term = term * power_operator(base[k], lam[k]);
        r = r + c * term;
    }
    return r;
}

}  // namespace floquetp
