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
#include "floquetp/fragmentation.hpp"
#include "floquetp/oracle.hpp"

using namespace floquetp;

namespace {

FieldElement random_element(const FieldContext& f, std::mt19937_64& rng) {
    std::vector<std::int64_t> c(f.degree());
    for (auto& v : c) v = static_cast<std::int64_t>(rng() % f.p());
    return f.from_coeffs(c);
}

GroupAlgebraElement random_element_ga(const FieldContext& f, std::size_t s, std::mt19937_64& rng) {
    GroupAlgebraElement a(f, s);
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        IntVec v(s);
        for (auto& x : v) x = static_cast<std::int64_t>(rng() % 7) - 3;
        a.add_term(v, random_element(f, rng));
    }
    return a;
}

PeriodicFunction random_function(const QuotientPtr& q, const FieldContext& f, std::size_t n, std::mt19937_64& rng) {
    PeriodicFunction r(q, f, n);
    for (std::size_t g = 0; g < q->order(); ++g)
        for (auto& x : r.at(g)) x = random_element(f, rng);
    return r;
}

Matrix matrix_of(const FieldContext& f, const std::vector<std::vector<FieldElement>>& rows) {
    Matrix m(f, rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("fragmentation map coordinates") {
    const FragmentationMap map(Sublattice({{2, 1}, {0, 3}}));
    CHECK(map.size() == 6);
    for (std::int64_t x = -4; x <= 4; ++x)
        for (std::int64_t y = -4; y <= 4; ++y) {
            const auto [i, k] = map.decompose({x, y});
            CHECK(map.compose(i, k) == IntVec{x, y});
        }
    for (std::size_t i = 0; i < map.size(); ++i) CHECK(map.decompose(map.representatives()[i]).first == i);
    CHECK_THROWS_AS(map.inner_period(Sublattice::scaled(2, 1)), DomainError);
}

TEST_CASE("fragmenting functions") {
    const auto& f5 = build_field(5, 1);
    const FragmentationMap map(Sublattice::scaled(1, 3));
    auto q = make_quotient(Sublattice::scaled(1, 6));
    PeriodicFunction c(q, f5, 1);
    for (std::size_t g = 0; g < 6; ++g) c.at(g)[0] = f5.from_int(4);
    const auto fc = fragment_function(c, map);
    CHECK(fc.quotient().order() == 2);
    for (std::size_t g = 0; g < fc.size(); ++g) CHECK(fc.at(g) == Vector(3, f5.from_int(4)));
    CHECK(unfragment_function(fc, map) == c);

    // A character of Z fragmented by n is elementary with z = ξ^n.
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto& amb = build_field(2, 4);
        const auto xi = primitive_root_of_unity(amb, 15);
        const FragmentationMap m(Sublattice::scaled(1, static_cast<std::int64_t>(n)));
        auto big = make_quotient(Sublattice::scaled(1, 15 * static_cast<std::int64_t>(n)));
        const auto chi = character_function(big, TorusPoint(amb, {xi}));
        const auto frag = fragment_function(chi, m);
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = xi.pow(static_cast<std::int64_t>(i));
        CHECK(frag == elementary_function(frag.quotient_ptr(), TorusPoint(amb, {xi.pow(static_cast<std::int64_t>(n))}), v));
        CHECK(unfragment_function(frag, m) == chi);
    }

    std::mt19937_64 rng(101);
    for (int t = 0; t < 30; ++t) {
        const auto& f = build_field(std::vector<std::uint32_t>{2, 3, 5}[t % 3], 1);
        const Sublattice lam = t % 2 ? Sublattice::scaled(1, 2 + t % 3) : Sublattice({{2, 1}, {0, 2}});
        const FragmentationMap m(lam);
        const Sublattice per = t % 2 ? Sublattice::scaled(1, lam.basis()[0][0] * 5) : Sublattice({{4, 3}, {0, 6}});
        auto q2 = make_quotient(per);
        const auto f0 = random_function(q2, f, 1, rng);
        const auto fr = fragment_function(f0, m);
        CHECK(unfragment_function(fr, m) == f0);
        CHECK(fr.quotient().order() * m.size() == per.index());
        for (std::uint32_t p : {2u, 3u, 5u})
            if (is_p_saturated(lam, p)) CHECK(is_p_saturated(per, p) == is_p_saturated(fr.quotient().sublattice(), p));
        const auto g0 = random_function(fr.quotient_ptr(), f, m.size(), rng);
        CHECK(fragment_function(unfragment_function(g0, m), m) == g0);
    }
}

TEST_CASE("fragmenting operators") {
    const auto& f3 = build_field(3, 1);
    const FragmentationMap m3(Sublattice::scaled(1, 3));
    CHECK(fragment_operator(GroupAlgebraElement::delta(f3, {0}), m3) == MatrixOperator::identity(f3, 1, 3));

    // The shift: companion matrix with characteristic polynomial x^n - z.
    for (std::size_t n = 2; n <= 6; ++n) {
        const FragmentationMap m(Sublattice::scaled(1, static_cast<std::int64_t>(n)));
        const auto b = fragment_operator(GroupAlgebraElement::delta(f3, {1}), m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == 0 && j == n - 1)
                    CHECK(b.at(i, j) == GroupAlgebraElement::delta(f3, {1}));
                else if (i == j + 1)
                    CHECK(b.at(i, j) == GroupAlgebraElement::delta(f3, {0}));
                else
                    CHECK(b.at(i, j).is_zero());
            }
    }

    // The two shifts of Z^2 on 2Z x 2Z.
    const FragmentationMap m22(Sublattice::scaled(2, 2));
    const auto a1 = fragment_operator(GroupAlgebraElement::delta(f3, {1, 0}), m22);
    const auto a2 = fragment_operator(GroupAlgebraElement::delta(f3, {0, 1}), m22);
    CHECK(a1 * a2 == a2 * a1);
    for (const auto& z : dual_subgroup(Sublattice::scaled(2, 4), 3)) {
        const auto ze = z.embedded(build_field(3, 4));
        const auto x1 = ze.coords()[0].inv(), x2 = ze.coords()[1].inv();
        const auto& ctx = ze.context();
        const auto o = ctx.one(), n0 = ctx.zero();
        CHECK(symbol_matrix(a1, ze) == matrix_of(ctx, {{n0, x1, n0, n0}, {o, n0, n0, n0}, {n0, n0, n0, x1}, {n0, n0, o, n0}}));
        CHECK(symbol_matrix(a2, ze) == matrix_of(ctx, {{n0, n0, x2, n0}, {n0, n0, n0, x2}, {o, n0, n0, n0}, {n0, o, n0, n0}}));
    }

    std::mt19937_64 rng(103);
    for (int t = 0; t < 30; ++t) {
        const auto& f = build_field(std::vector<std::uint32_t>{2, 3, 5}[t % 3], 1);
        const std::size_t s = 1 + t % 2;
        const Sublattice lam = s == 1 ? Sublattice::scaled(1, 3) : Sublattice({{2, 1}, {0, 2}});
        const FragmentationMap m(lam);
        const auto a = random_element_ga(f, s, rng), b = random_element_ga(f, s, rng);
        CHECK(fragment_operator(a * b, m) == fragment_operator(a, m) * fragment_operator(b, m));
        CHECK(fragment_operator(a + b, m) == fragment_operator(a, m) + fragment_operator(b, m));
        const Sublattice per = s == 1 ? Sublattice::scaled(1, 12) : Sublattice({{4, 2}, {0, 4}});
        const auto ft = random_function(make_quotient(per), f, 1, rng);
        CHECK(fragment_function(apply_convolution(a, ft), m) == apply_operator(fragment_operator(a, m), fragment_function(ft, m)));
    }
}

TEST_CASE("fragmented operators carry the scalar spectrum") {
    std::mt19937_64 rng(107);
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::size_t n = 2; n <= 4; ++n) {
            if (n % p == 0) continue;
            const auto& f = build_field(p, 1);
            const auto a = random_element_ga(f, 1, rng);
            const auto b = fragment_operator(a, FragmentationMap(Sublattice::scaled(1, static_cast<std::int64_t>(n))));
            const std::uint64_t e = p == 2 ? 15 : (p == 3 ? 8 : 12);
            const auto [amb, xis] = nth_roots_of_unity(e, p);
            for (const auto& xi : xis) {
                const TorusPoint z(*amb, {xi.pow(static_cast<std::int64_t>(n))});
                Vector v(n);
                for (std::size_t i = 0; i < n; ++i) v[i] = xi.pow(static_cast<std::int64_t>(i));
                const auto mu = evaluate_laurent_inverse(a, TorusPoint(*amb, {xi}));
                Vector lhs = symbol_matrix(b, z) * v;
                for (std::size_t i = 0; i < n; ++i) CHECK(lhs[i] == mu * v[i]);
            }
        }
}

TEST_CASE("voltage graphs") {
    const auto& f2 = build_field(2, 1);
    VoltageGraph loops{&f2, 1, 1, {}};
    for (std::int64_t l : {1, -1, 0}) loops.edges.push_back({0, 0, {l}, f2.one()});
    GroupAlgebraElement three_term(f2, 1);
    for (std::int64_t v : {-1, 0, 1}) three_term.add_term({v}, f2.one());
    CHECK(voltage_operator(loops) == MatrixOperator::scalar(three_term));
    CHECK(voltage_operator(VoltageGraph{&f2, 3, 2, {}}).is_zero());

    const auto& f3 = build_field(3, 1);
    VoltageGraph pair{&f3, 2, 1, {{0, 1, {0}, f3.one()}, {1, 0, {0}, f3.one()}}};
    const auto adj = voltage_operator(pair);
    for (const auto& z : dual_subgroup(Sublattice::scaled(1, 4), 3)) {
        const auto m = symbol_matrix(adj, z);
        CHECK(m(0, 1).is_one());
        CHECK(m(1, 0).is_one());
        CHECK(m(0, 0).is_zero());
    }
    for (std::int64_t per : {1, 2, 4, 5}) {
        const Sublattice sub = Sublattice::scaled(1, per);
        CHECK(periodic_solutions(adj, sub).size() == nullity(build_quotient_matrix(adj, sub).matrix));
        const auto lap = voltage_operator(pair, GraphOperatorKind::laplace);
        CHECK(lap.at(0, 0) == GroupAlgebraElement::delta(-f3.one(), {0}));
        CHECK(periodic_solutions(lap, sub).size() == nullity(build_quotient_matrix(lap, sub).matrix));
        CHECK(periodic_solutions(lap, sub).size() == static_cast<std::size_t>(per));
    }
}

TEST_CASE("maximal abelian covers") {
    const auto& f2 = build_field(2, 1);
    const auto tree = max_abelian_cover({3, {{0, 1}, {1, 2}}}, f2);
    CHECK(tree.rank == 0);
    for (const auto& e : tree.edges) CHECK(e.label.empty());

    const auto circle = max_abelian_cover({1, {{0, 0}}}, f2);
    CHECK(circle.rank == 1);
    GroupAlgebraElement line(f2, 1);
    line.add_term({1}, f2.one());
    line.add_term({-1}, f2.one());
    CHECK(voltage_operator(circle) == MatrixOperator::scalar(line));

    const auto theta = max_abelian_cover({2, {{0, 1}, {0, 1}, {1, 0}}}, f2);
    CHECK(theta.rank == 2);
    CHECK(theta.edges[0].label == IntVec{0, 0});
    CHECK(theta.edges[2].label == IntVec{1, 0});
    CHECK(theta.edges[4].label == IntVec{0, 1});
    CHECK_THROWS_AS(max_abelian_cover({3, {{0, 1}}}, f2), DomainError);
}
