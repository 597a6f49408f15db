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
#include <set>
#include <sstream>

#include "floquetp/errors.hpp"
#include "floquetp/field.hpp"
#include "floquetp/polynomial.hpp"

using namespace floquetp;

namespace {

FieldElement random_element(const FieldContext& f, std::mt19937_64& rng) {
    std::vector<std::int64_t> c(f.degree());
    for (auto& v : c) v = static_cast<std::int64_t>(rng() % f.p());
    return f.from_coeffs(c);
}

// Brute force: a monic quadratic over GF(p) is irreducible iff it has no root.
std::vector<std::uint32_t> smallest_irreducible_quadratic(std::uint32_t p) {
    for (std::uint32_t c0 = 1; c0 < p; ++c0)
        for (std::uint32_t c1 = 0; c1 < p; ++c1) {
            bool root = false;
            for (std::uint32_t x = 0; x < p; ++x) root |= (x * x + c1 * x + c0) % p == 0;
            if (!root) return {c0, c1, 1};
        }
    return {};
}

}  // namespace

TEST_CASE("build_field picks the smallest irreducible modulus") {
    const auto& f2 = build_field(2, 1);
    CHECK(f2.size() == 2);
    CHECK(f2.modulus() == std::vector<std::uint32_t>{1, 1});

    const auto& f4 = build_field(2, 2);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(f4.describe() == "GF(2^2) mod x^2+x+1");

    const auto& f9 = build_field(3, 2);
    CHECK(f9.modulus() == smallest_irreducible_quadratic(3));
    CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});

    for (std::uint32_t p : {5u, 7u, 11u}) CHECK(build_field(p, 2).modulus() == smallest_irreducible_quadratic(p));

    CHECK(&build_field(3, 2) == &f9);
    CHECK_THROWS_AS(build_field(4, 1), DomainError);
    CHECK_THROWS_AS(build_field(2, 0), DomainError);
}

TEST_CASE("irreducibility test agrees with root search on cubics") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::uint32_t c0 = 0; c0 < p; ++c0)
            for (std::uint32_t c1 = 0; c1 < p; ++c1)
                for (std::uint32_t c2 = 0; c2 < p; ++c2) {
                    bool root = false;
                    for (std::uint32_t x = 0; x < p; ++x) root |= (x * x * x + c2 * x * x + c1 * x + c0) % p == 0;
                    CHECK(is_irreducible_mod_p(p, {c0, c1, c2, 1}) == !root);
                }
    }
}

TEST_CASE("small field arithmetic") {
    const auto& f4 = build_field(2, 2);
    const auto w = f4.generator();
    CHECK(w * w == w + f4.one());
    CHECK(build_field(2, 1).one() + build_field(2, 1).one() == build_field(2, 1).zero());
    CHECK(multiplicative_order(w) == 3);
    CHECK(multiplicative_order(f4.one()) == 1);
    CHECK_THROWS_AS(f4.zero().inv(), DomainError);
    CHECK(w.pow(-1) == w * w);

    const auto& f9 = build_field(3, 2);
    std::size_t primitive = 0;
    for (const auto& x : f9.elements()) {
        if (x.is_zero()) continue;
        // Independent order: repeated multiplication.
        std::uint64_t n = 1;
        for (FieldElement y = x; !y.is_one(); y *= x) ++n;
        CHECK(multiplicative_order(x) == n);
        if (n == 8) {
            ++primitive;
            CHECK(x.pow(8).is_one());
        }
    }
    CHECK(primitive == 4);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int m = 1; m <= 4; ++m) {
            const auto& f = build_field(p, m);
            for (int t = 0; t < 60; ++t) {
                auto a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a * b == b * a);
                CHECK(a - a == f.zero());
                if (!a.is_zero()) CHECK(a * a.inv() == f.one());
            }
        }
}

TEST_CASE("frobenius") {
    const auto& f4 = build_field(2, 2);
    const auto w = f4.generator();
    CHECK(frobenius(w, 2) == w * w);
    CHECK(frobenius(build_field(2, 1).one(), 2).is_one());
    const auto& f8 = build_field(2, 3);
    const auto g = f8.generator();
    CHECK(frobenius_once(frobenius_once(frobenius_once(g))) == g);
    CHECK(frobenius(g, 8) == g);
    CHECK_THROWS_AS(frobenius(g, 6), DomainError);

    std::mt19937_64 rng(5);
    const auto& f = build_field(3, 4);
    for (int t = 0; t < 50; ++t) {
        auto x = random_element(f, rng), y = random_element(f, rng);
        CHECK(frobenius(x + y, 9) == frobenius(x, 9) + frobenius(y, 9));
        CHECK(frobenius(x * y, 3) == frobenius(x, 3) * frobenius(y, 3));
        CHECK(frobenius(x, 3) == x.pow(3));
    }
}

TEST_CASE("roots of unity") {
    auto [f4, r3] = nth_roots_of_unity(3, 2);
    CHECK(f4->degree() == 2);
    const auto w = f4->generator();
    CHECK(r3 == std::vector<FieldElement>{w, f4->one(), w * w});

    auto [f1, r1] = nth_roots_of_unity(1, 7);
    CHECK(r1.size() == 1);
    CHECK(r1[0].is_one());

    auto [f81, r5] = nth_roots_of_unity(5, 3);
    CHECK(f81->degree() == 4);
    REQUIRE(r5.size() == 5);
    CHECK(std::set<FieldElement>(r5.begin(), r5.end()).size() == 5);
    for (const auto& r : r5) {
        CHECK(r.pow(5).is_one());
        CHECK(5 % multiplicative_order(r) == 0);
    }
    CHECK_THROWS_AS(nth_roots_of_unity(6, 3), DomainError);

    for (std::uint64_t n : {7u, 9u, 15u, 21u}) {
        auto [f, rs] = nth_roots_of_unity(n, 2);
        CHECK(rs.size() == n);
        CHECK(std::is_sorted(rs.begin(), rs.end()));
        for (const auto& r : rs) CHECK(n % multiplicative_order(r) == 0);
        CHECK(multiplicative_order(primitive_root_of_unity(*f, n)) == n);
    }
}

TEST_CASE("trace to subfield") {
    const auto& f4 = build_field(2, 2);
    const auto w = f4.generator();
    CHECK(trace_to_subfield(w, 2, 2).is_one());
    CHECK(trace_to_subfield(f4.one(), 4, 1).is_one());
    CHECK(trace_to_subfield(f4.zero(), 2, 2).is_zero());
    CHECK_THROWS_AS(trace_to_subfield(w, 2, 1), NotInSubfield);

    std::mt19937_64 rng(3);
    const auto& f = build_field(3, 6);
    for (int t = 0; t < 30; ++t) {
        auto x = random_element(f, rng);
        auto tr = trace_to_subfield(x, 9, 3);
        CHECK(frobenius(tr, 9) == tr);
        CHECK(lies_in_subfield(tr, 9));
    }
}

TEST_CASE("embeddings") {
    const auto& f2 = build_field(2, 1);
    const auto& f4 = build_field(2, 2);
    const auto& f16 = build_field(2, 4);
    CHECK(embed(f2.one(), f4).is_one());

    const auto w16 = embed(f4.generator(), f16);
    CHECK(w16 * w16 + w16 + f16.one() == f16.zero());
    auto cands = exhaustive_roots(Polynomial(f16, {f16.one(), f16.one(), f16.one()}));
    REQUIRE(cands.size() == 2);
    CHECK(w16 == cands.front());

    CHECK(embed(embed(f2.one(), f4), f16) == embed(f2.one(), f16));
    CHECK_THROWS_AS(embed(f4.generator(), build_field(2, 3)), DomainError);

    std::mt19937_64 rng(9);
    const auto& f27 = build_field(3, 3);
    const auto& f729 = build_field(3, 6);
    for (int t = 0; t < 40; ++t) {
        auto x = random_element(f27, rng), y = random_element(f27, rng);
        CHECK(embed(x + y, f729) == embed(x, f729) + embed(y, f729));
        CHECK(embed(x * y, f729) == embed(x, f729) * embed(y, f729));
        if (!x.is_zero()) CHECK(multiplicative_order(embed(x, f729)) == multiplicative_order(x));
        CHECK(restrict_to_subfield(embed(x, f729), f27) == x);
    }
    CHECK_THROWS_AS(restrict_to_subfield(f729.generator(), f27), NotInSubfield);
    CHECK(&common_extension(f27, build_field(3, 2)) == &f729);
}

TEST_CASE("mixed prime-field operands") {
    const auto& f3 = build_field(3, 1);
    const auto& f9 = build_field(3, 2);
    const auto g = f9.generator();
    CHECK(g + f3.one() == f9.from_coeffs(std::vector<std::int64_t>{1, 1}));
    CHECK(f3.from_int(2) * g == g + g);
    CHECK(f3.from_int(2) == f9.from_int(2));
    CHECK_THROWS_AS(g + build_field(3, 3).generator(), ContextMismatch);
    CHECK_THROWS_AS(g + build_field(5, 1).one(), ContextMismatch);
}

TEST_CASE("element printing") {
    const auto& f4 = build_field(2, 2);
    std::ostringstream os;
    os << f4.generator() << ' ' << f4.one() << ' ' << build_field(5, 1).from_int(-1);
    CHECK(os.str() == "[0,1] 1 4");
}

TEST_CASE("polynomial root finding") {
    const auto& f4 = build_field(2, 2);
    const auto w = f4.generator();
    const Polynomial cyc(f4, {f4.one(), f4.one(), f4.one()});
    CHECK(exhaustive_roots(cyc) == std::vector<FieldElement>{w, w * w});
    CHECK(distinct_roots(cyc) == std::vector<FieldElement>{w, w * w});
    const Polynomial lin(f4, {-f4.one(), f4.one()});
    CHECK(exhaustive_roots(lin) == std::vector<FieldElement>{f4.one()});
    const Polynomial cube(f4, {-f4.one(), f4.zero(), f4.zero(), f4.one()});
    CHECK(exhaustive_roots(cube) == std::vector<FieldElement>{w, f4.one(), w * w});
    CHECK_THROWS_AS(exhaustive_roots(Polynomial(f4)), DomainError);

    std::vector<FieldElement> coeffs{build_field(2, 1).one(), build_field(2, 1).one(), build_field(2, 1).one()};
    auto in16 = poly_roots(coeffs, build_field(2, 4));
    CHECK(in16.size() == 2);
}

TEST_CASE("factorization agrees with exhaustive search") {
    std::mt19937_64 rng(21);
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {2, 6}}) {
        const auto& f = build_field(p, m);
        for (int t = 0; t < 25; ++t) {
            // Mix planted repeated roots with a random cofactor.
            Polynomial poly = Polynomial::constant(f.one());
            const int planted = static_cast<int>(rng() % 4);
            for (int i = 0; i < planted; ++i) {
                auto r = random_element(f, rng);
                const int e = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(p + 1));
                for (int k = 0; k < e; ++k) poly = poly * Polynomial(f, {-r, f.one()});
            }
            std::vector<FieldElement> extra;
            const int deg = static_cast<int>(rng() % 6);
            for (int i = 0; i < deg; ++i) extra.push_back(random_element(f, rng));
            extra.push_back(f.one());
            poly = poly * Polynomial(f, extra);

            CHECK(roots_with_multiplicity(poly) == exhaustive_roots(poly));

            Polynomial prod = Polynomial::constant(f.one());
            for (auto& [g, e] : factor(poly)) {
                CHECK(g.leading().is_one());
                if (g.degree() > 1) CHECK(g.degree() <= 20);
                for (int k = 0; k < e; ++k) prod = prod * g;
            }
            CHECK(prod == poly.monic());
        }
    }
}

TEST_CASE("splitting degree") {
    const auto& f2 = build_field(2, 1);
    // x^7 - 1 = (x - 1)(x^3 + x + 1)(x^3 + x^2 + 1) over GF(2).
    std::vector<FieldElement> c(8, f2.zero());
    c[0] = f2.one();
    c[7] = f2.one();
    CHECK(splitting_degree(Polynomial(f2, c)) == 3);
    const auto fs = factor(Polynomial(f2, c));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].first.degree() == 1);
    CHECK(fs[1].first.degree() == 3);
}
