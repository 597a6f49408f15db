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

#include <doctest.h>

#include <random>

#include "floquetp/errors.hpp"
#include "floquetp/matrix_spectral.hpp"
#include "floquetp/scalar_spectral.hpp"

using namespace floquetp;

namespace {

GroupAlgebraElement three_term(const FieldContext& f) {
    GroupAlgebraElement a(f, 1);
    for (std::int64_t v : {-1, 0, 1}) a.add_term({v}, f.one());
    return a;
}

// The shift on Z seen on nZ: subdiagonal δ_0 and δ_1 in the corner.
MatrixOperator companion(const FieldContext& f, std::size_t n) {
    MatrixOperator a(f, 1, n);
    for (std::size_t i = 1; i < n; ++i) a.add_term(i, i - 1, {0}, f.one());
    a.add_term(0, n - 1, {1}, f.one());
    return a;
}

FieldElement random_element(const FieldContext& f, std::mt19937_64& rng) {
    std::vector<std::int64_t> c(f.degree());
    for (auto& v : c) v = static_cast<std::int64_t>(rng() % f.p());
    return f.from_coeffs(c);
}

GroupAlgebraElement random_entry(const FieldContext& f, std::size_t s, std::mt19937_64& rng, int terms = 2) {
    GroupAlgebraElement a(f, s);
    for (int t = 0; t < terms; ++t) {
        IntVec v(s);
        for (auto& x : v) x = static_cast<std::int64_t>(rng() % 5) - 2;
        a.add_term(v, random_element(f, rng));
    }
    return a;
}

MatrixOperator random_operator(const FieldContext& f, std::size_t s, std::size_t n, std::mt19937_64& rng) {
    MatrixOperator a(f, s, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.set(i, j, random_entry(f, s, rng, static_cast<int>(rng() % 3)));
    return a;
}

std::size_t total_dim(const SpectralDecomposition& d) {
    std::size_t t = 0;
    for (const auto& l : d.levels) t += l.basis.size();
    return t;
}

}  // namespace

TEST_CASE("symbols and determinants") {
    const auto& f3 = build_field(3, 1);
    const auto id = MatrixOperator::identity(f3, 1, 3);
    for (const auto& z : dual_subgroup(Sublattice::scaled(1, 4), 3)) CHECK(symbol_matrix(id, z) == Matrix::identity(z.context(), 3));

    MatrixOperator diag(f3, 1, 2);
    diag.add_term(0, 0, {1}, f3.one());
    diag.add_term(1, 1, {0}, f3.one());
    CHECK(det_symbol(diag) == GroupAlgebraElement::delta(f3, {1}));

    std::mt19937_64 rng(61);
    MatrixOperator twin(f3, 2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        const auto e = random_entry(f3, 2, rng);
        twin.set(0, j, e);
        twin.set(2, j, e);
        twin.set(1, j, random_entry(f3, 2, rng));
    }
    CHECK(det_symbol(twin).is_zero());

    // det via Laurent cofactors agrees with the numeric determinant at points.
    for (int t = 0; t < 20; ++t) {
        const auto a = random_operator(f3, 2, 1 + rng() % 4, rng);
        for (const auto& z : dual_subgroup(Sublattice({{2, 1}, {0, 4}}), 3))
            CHECK(evaluate_laurent_inverse(det_symbol(a), z) == determinant(symbol_matrix(a, z)));
    }
}

TEST_CASE("companion symbol has characteristic polynomial x^n - z") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::size_t n = 2; n <= 6; ++n) {
            if (n % p == 0) continue;
            const auto& f = build_field(p, 1);
            LaurentPoly expect(f, 2);
            expect.add_term({0, static_cast<std::int64_t>(n)}, f.one());
            expect.add_term({1, 0}, -f.one());
            CHECK(symbolic_characteristic_polynomial(companion(f, n)) == expect);
            CHECK(det_symbol(companion(f, n)).is_monomial());
        }
}

TEST_CASE("finite support solutions") {
    const auto& f2 = build_field(2, 1);
    const auto& f5 = build_field(5, 1);
    MatrixOperator diag(f2, 1, 2);
    diag.add_term(0, 0, {1}, f2.one());
    diag.add_term(1, 1, {0}, f2.one());
    CHECK_FALSE(finite_support_solution(diag).has_value());

    MatrixOperator ones(f5, 1, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) ones.add_term(i, j, {0}, f5.one());
    const auto sol = finite_support_solution(ones);
    REQUIRE(sol.has_value());
    CHECK(((*sol)[0] + (*sol)[1]).is_zero());
    CHECK_FALSE((*sol)[0].is_zero());
    CHECK((*sol)[0].is_monomial());

    const auto zero = MatrixOperator(f5, 2, 3);
    const auto zsol = finite_support_solution(zero);
    REQUIRE(zsol.has_value());
    CHECK_FALSE((*zsol)[0].is_zero());

    // Second row a convolution multiple of the first.
    std::mt19937_64 rng(67);
    for (int t = 0; t < 40; ++t) {
        const auto& f = build_field(std::vector<std::uint32_t>{2, 3, 5}[t % 3], 1);
        const std::size_t n = 2 + t % 2, s = 1 + t % 2;
        auto a = random_operator(f, s, n, rng);
        const auto mult = random_entry(f, s, rng);
        for (std::size_t j = 0; j < n; ++j) a.set(n - 1, j, mult * a.at(0, j));
        const auto f_sol = finite_support_solution(a);
        REQUIRE(f_sol.has_value());
        bool nonzero = false;
        for (const auto& x : *f_sol) nonzero |= !x.is_zero();
        CHECK(nonzero);
        for (const auto& x : apply_operator(a, *f_sol)) CHECK(x.is_zero());
    }
}

TEST_CASE("multipliers and periodic solutions") {
    const auto& f2 = build_field(2, 1);
    const auto a = MatrixOperator::scalar(three_term(f2));
    for (std::int64_t m = 1; m <= 21; m += 2) CHECK(count_multipliers(a, Sublattice::scaled(1, m)) == (m % 3 == 0 ? 2u : 0u));
    CHECK(multipliers(MatrixOperator::identity(f2, 1, 2), Sublattice::scaled(1, 5)).empty());
    CHECK(multipliers(companion(f2, 3), Sublattice::scaled(1, 7)).empty());

    const auto sub = Sublattice::scaled(1, 3);
    auto q = make_quotient(sub);
    const auto sols = periodic_solutions(a, sub);
    REQUIRE(sols.size() == 2);
    const auto scalar_pts = symbolic_variety_points(three_term(f2), sub);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(sols[k].z == scalar_pts[k]);
        CHECK(sols[k].z.order() == 3);
        const auto f = render(q, sols[k]);
        CHECK_FALSE(f.is_zero());
        CHECK(apply_operator(a, f).is_zero());
    }
    CHECK(periodic_solutions(MatrixOperator::identity(f2, 1, 2), sub).empty());
}

TEST_CASE("generalized eigenspaces") {
    const auto& f2 = build_field(2, 1);
    const auto& f3 = build_field(3, 1);
    const auto sub = Sublattice::scaled(1, 5);
    CHECK(generalized_eigenspace(MatrixOperator::identity(f2, 1, 3), f2.one(), sub).size() == 15);
    CHECK(generalized_eigenspace(MatrixOperator::identity(f2, 1, 3), f2.zero(), sub).empty());

    MatrixOperator nil(f3, 1, 2);
    nil.add_term(0, 1, {0}, f3.one());
    const auto e = generalized_eigenspace(nil, f3.zero(), Sublattice::scaled(1, 4));
    CHECK(e.size() == 8);
    int deep = 0;
    for (const auto& s : e) deep += s.depth == 2;
    CHECK(deep == 4);
}

TEST_CASE("spectral decomposition is complete and exact") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 12; ++t) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[t % 3];
        const auto& f = build_field(p, 1);
        const std::size_t n = 1 + t % 3;
        const Sublattice sub = p == 2 ? Sublattice::scaled(1, 7) : Sublattice({{2, 1}, {0, 2}});
        const auto a = random_operator(f, sub.rank(), n, rng);
        const auto dec = spectral_decomposition(a, sub);
        CHECK(total_dim(dec) == n * sub.index());
        for (const auto& l : dec.levels)
            for (const auto& e : l.basis) {
                const Matrix m = symbol_matrix(a, e.z);
                if (e.depth == 1) {
                    Vector r = m * e.u;
                    for (std::size_t k = 0; k < n; ++k) r[k] -= l.mu * e.u[k];
                    CHECK(is_zero_vector(r));
                    const auto fn = render(dec.quotient, e);
                    CHECK(apply_operator(a, fn) == l.mu * fn);
                }
            }
    }
}

TEST_CASE("jordan forms") {
    const auto& f3 = build_field(3, 1);
    Matrix nil(f3, 2, 2);
    nil(0, 1) = f3.one();
    const auto jf = jordan_form(nil);
    REQUIRE(jf.chains.size() == 1);
    CHECK(jf.chains[0].vectors.size() == 2);
    CHECK(jf.J == nil);

    // Conjugates of a fixed Jordan matrix: the block structure is recovered.
    std::mt19937_64 rng(73);
    const auto& f9 = build_field(3, 2);
    for (int t = 0; t < 40; ++t) {
        const std::vector<std::pair<FieldElement, std::size_t>> blocks{
            {f9.generator(), 2}, {f9.generator(), 1}, {f9.one(), 3}, {f9.generator(), 2}};
        const std::size_t n = 8;
        Matrix j(f9, n, n);
        std::size_t at = 0;
        for (const auto& [mu, size] : blocks)
            for (std::size_t k = 0; k < size; ++k, ++at) {
                j(at, at) = mu;
                if (k > 0) j(at - 1, at) = f9.one();
            }
        Matrix pm(f9, n, n);
        do {
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) pm(r, c) = random_element(f9, rng);
        } while (!inverse(pm));
        const Matrix m = pm * j * *inverse(pm);
        const auto form = jordan_form(m);
        std::map<FieldElement, std::vector<std::size_t>> sizes;
        for (const auto& c : form.chains) sizes[c.mu].push_back(c.vectors.size());
        CHECK(sizes[f9.generator()] == std::vector<std::size_t>{2, 2, 1});
        CHECK(sizes[f9.one()] == std::vector<std::size_t>{3});
        CHECK(m * form.P == form.P * form.J);
    }
}

TEST_CASE("jordan basis of operators") {
    const auto& f3 = build_field(3, 1);
    const auto sub = Sublattice::scaled(1, 2);
    const auto id = jordan_basis(MatrixOperator::identity(f3, 1, 3), sub);
    CHECK(block_multisets(id) == std::map<FieldElement, std::vector<std::size_t>>{{f3.one(), {1, 1, 1, 1, 1, 1}}});

    MatrixOperator nil(f3, 1, 2);
    nil.add_term(0, 1, {0}, f3.one());
    CHECK(block_multisets(jordan_basis(nil, sub)) == std::map<FieldElement, std::vector<std::size_t>>{{f3.zero(), {2, 2}}});
}

TEST_CASE("companion eigenvectors are fragmented characters") {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::size_t n = 2; n <= 6; ++n) {
            if (n % p == 0) continue;
            const auto& f = build_field(p, 1);
            const auto a = companion(f, n);
            for (std::int64_t m : {1, 2, 3, 4, 7}) {
                if (m % p == 0) continue;
                const auto rep = jordan_basis(a, Sublattice::scaled(1, m));
                const FieldContext& amb = *rep.ambient;
                for (const auto& pt : rep.points) {
                    std::size_t found = 0;
                    for (const auto& xi : split_roots(Polynomial(amb, [&] {
                             Vector c(n + 1, amb.zero());
                             c[0] = -pt.z.coords()[0];
                             c[n] = amb.one();
                             return c;
                         }()))) {
                        Vector v(n);
                        for (std::size_t k = 0; k < n; ++k) v[k] = xi.pow(static_cast<std::int64_t>(k));
                        Vector lhs = pt.symbol * v;
                        for (std::size_t k = 0; k < n; ++k) lhs[k] -= xi.inv() * v[k];
                        CHECK(is_zero_vector(lhs));
                        ++found;
                    }
                    CHECK(found == n);
                    for (const auto& c : pt.form.chains) CHECK(c.vectors.size() == 1);
                }
            }
        }
}

TEST_CASE("operator inverse and functional calculus") {
    const auto& f2 = build_field(2, 1);
    const auto c3 = companion(f2, 3);
    const auto inv = inverse_operator(c3);
    REQUIRE(inv.has_value());
    CHECK(c3 * *inv == MatrixOperator::identity(f2, 1, 3));
    CHECK_FALSE(inverse_operator(MatrixOperator::scalar(three_term(f2))).has_value());

    CHECK(evaluate_phi_of_operator(GroupAlgebraElement::delta(f2, {1}), {c3}) == c3);
    const auto phi = three_term(f2);
    const auto b = evaluate_phi_of_operator(phi, {c3});
    const auto mult = multipliers(b, Sublattice::scaled(1, 1));
    REQUIRE(mult.size() == 1);
    CHECK(mult[0].coords()[0].is_one());
    const auto sols = periodic_solutions(b, Sublattice::scaled(1, 1));
    REQUIRE(sols.size() == 2);

    // Spectral mapping: eigenvalues of φ(M) are φ of those of M.
    std::mt19937_64 rng(79);
    for (int t = 0; t < 10; ++t) {
        GroupAlgebraElement ph(f2, 1);
        for (std::int64_t k = -1; k <= 2; ++k) ph.add_term({k}, f2.from_int(static_cast<std::int64_t>(rng() % 2)));
        const auto op = evaluate_phi_of_operator(ph, {c3});
        for (const auto& z : dual_subgroup(Sublattice::scaled(1, 5), 2)) {
            const auto& amb = build_field(2, 12);
            const auto ze = z.embedded(amb);
            std::vector<FieldElement> image;
            for (const auto& mu : split_roots(characteristic_polynomial(symbol_matrix(c3, ze))))
                image.push_back(evaluate_laurent(ph, TorusPoint(amb, {mu})));
            std::sort(image.begin(), image.end());
            CHECK(split_roots(characteristic_polynomial(symbol_matrix(op, ze))) == image);
        }
    }
}
