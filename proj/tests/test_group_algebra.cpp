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
#include "floquetp/group_algebra.hpp"

using namespace floquetp;

namespace {

GroupAlgebraElement three_term(const FieldContext& f) {
    GroupAlgebraElement a(f, 1);
    a.add_term({-1}, f.one());
    a.add_term({0}, f.one());
    a.add_term({1}, f.one());
    return a;
}

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
        for (auto& x : v) x = static_cast<std::int64_t>(rng() % 5) - 2;
        a.add_term(v, random_element(f, rng));
    }
    return a;
}

PeriodicFunction pattern(const QuotientPtr& q, const FieldContext& f, const std::vector<FieldElement>& vals) {
    PeriodicFunction r(q, f, 1);
    for (std::size_t g = 0; g < vals.size(); ++g) r.at(q->index_of_point({static_cast<std::int64_t>(g)}))[0] = vals[g];
    return r;
}

}  // namespace

TEST_CASE("convolution identities") {
    const auto& f2 = build_field(2, 1);
    const auto d = [&](std::int64_t v) { return GroupAlgebraElement::delta(f2, {v}); };
    CHECK(d(2) * d(-5) == d(-3));
    const auto a = three_term(f2);
    CHECK(a * d(0) == a);
    CHECK(a * d(1) == d(0) + d(1) + d(2));
    CHECK(d(0).shift({-4}) == d(4));
    CHECK(a.shift({0}) == a);
    CHECK(convolve(a, a).coefficient({0}) == f2.one());

    std::mt19937_64 rng(3);
    const auto& f9 = build_field(3, 2);
    for (int t = 0; t < 50; ++t) {
        auto x = random_element_ga(f9, 2, rng), y = random_element_ga(f9, 2, rng), z = random_element_ga(f9, 2, rng);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(GroupAlgebraElement::delta(f9, {0, 0}) * x == x);
    }
    CHECK_THROWS_AS(d(0) * GroupAlgebraElement::delta(f2, {0, 0}), DomainError);
}

TEST_CASE("laurent evaluation") {
    const auto& f4 = build_field(2, 2);
    const auto w = f4.generator();
    const auto a = three_term(build_field(2, 1));
    CHECK(evaluate_laurent(GroupAlgebraElement::delta(f4, {1}), TorusPoint(f4, {w})) == w);
    CHECK(evaluate_laurent(a, TorusPoint(f4, {w})).is_zero());
    CHECK(evaluate_laurent(a, TorusPoint(f4, {f4.one()})).is_one());
    CHECK(evaluate_laurent(GroupAlgebraElement(f4, 1), TorusPoint(f4, {w})).is_zero());

    // The Fourier image is multiplicative.
    std::mt19937_64 rng(5);
    const auto& f16 = build_field(2, 4);
    for (int t = 0; t < 40; ++t) {
        auto x = random_element_ga(f4, 2, rng), y = random_element_ga(f4, 2, rng);
        TorusPoint z(f16, {f16.generator(), f16.generator().pow(3) + f16.one()});
        CHECK(evaluate_laurent(fourier(x * y), z) == evaluate_laurent(x, z) * evaluate_laurent(y, z));
    }
}

TEST_CASE("periodic functions under shifts and convolution") {
    const auto& f4 = build_field(2, 2);
    const auto w = f4.generator();
    auto q = make_quotient(Sublattice::scaled(1, 3));
    const auto f = pattern(q, f4, {f4.one(), w.inv(), w});
    CHECK(f.shift({1}) == pattern(q, f4, {w.inv(), w, f4.one()}));
    CHECK(f.shift({0}) == f);
    CHECK(apply_convolution(GroupAlgebraElement::delta(f4, {0}), f) == f);
    CHECK(apply_convolution(three_term(build_field(2, 1)), f).is_zero());
    CHECK(apply_convolution(GroupAlgebraElement::delta(f4, {1}), f) == pattern(q, f4, {w, f4.one(), w.inv()}));
}

TEST_CASE("pushforward") {
    const auto& f2 = build_field(2, 1);
    auto q = make_quotient(Sublattice::scaled(1, 3));
    CHECK(pushforward(GroupAlgebraElement::delta(f2, {0}), q) == pattern(q, f2, {f2.one(), f2.zero(), f2.zero()}));
    CHECK(pushforward(three_term(f2), q) == pattern(q, f2, {f2.one(), f2.one(), f2.one()}));
    auto b = GroupAlgebraElement::delta(f2, {0}) + GroupAlgebraElement::delta(f2, {3});
    CHECK(pushforward(b, q).at(0)[0].is_zero());

    // a_* ∘ π agrees with summing a over each coset.
    std::mt19937_64 rng(7);
    const auto& f5 = build_field(5, 1);
    for (int t = 0; t < 30; ++t) {
        auto a = random_element_ga(f5, 2, rng);
        auto qq = make_quotient(Sublattice({{2, 1}, {0, 3}}));
        auto push = pushforward(a, qq);
        IntVec lam{static_cast<std::int64_t>(rng() % 11) - 5, static_cast<std::int64_t>(rng() % 11) - 5};
        FieldElement direct = f5.zero();
        for (const auto& [v, c] : a.terms()) {
            IntVec diff{lam[0] - v[0], lam[1] - v[1]};
            if (qq->sublattice().contains(diff)) direct += c;
        }
        CHECK(push(lam)[0] == direct);
    }
}

TEST_CASE("discrete Fourier transform examples") {
    const auto& f2 = build_field(2, 1);
    const auto& f4 = build_field(2, 2);
    auto q = make_quotient(Sublattice::scaled(1, 3));

    auto c = pattern(q, f2, {f2.one(), f2.one(), f2.one()});
    auto dc = dft_forward(c);
    REQUIRE(dc.entries.size() == 1);
    CHECK(dc.entries[0].first.coords()[0].is_one());
    CHECK(dc.entries[0].second[0].is_one());

    const auto dual = dual_subgroup(Sublattice::scaled(1, 3), 2);
    for (const auto& chi : dual) {
        auto dchi = dft_forward(character_function(q, chi), dual);
        REQUIRE(dchi.entries.size() == 1);
        CHECK(dchi.entries[0].first == chi.inverse());
        CHECK(dchi.entries[0].second[0].is_one());
    }

    auto d011 = dft_forward(pattern(q, f2, {f2.zero(), f2.one(), f2.one()}));
    REQUIRE(d011.entries.size() == 2);
    for (const auto& [wpt, val] : d011.entries) {
        CHECK(wpt.order() == 3);
        CHECK(val[0].is_one());
    }
    CHECK(dft_inverse(d011, q, f4, 1) == pattern(q, f2, {f2.zero(), f2.one(), f2.one()}).embedded(f4));
    CHECK(dft_inverse(DualFunction{}, q, f4, 1).is_zero());

    CHECK_THROWS_AS(dft_forward(pattern(make_quotient(Sublattice::scaled(1, 2)), f2, {f2.one(), f2.zero()})), NotSaturated);
}

TEST_CASE("dft roundtrip and convolution theorem") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[t % 3];
        const auto& f = build_field(p, 1);
        Sublattice sub = t % 2 ? Sublattice::scaled(1, 5 + (p == 5)) : Sublattice({{2 + (p == 2), 1}, {0, 1 + (p != 2)}});
        auto q = make_quotient(sub);
        PeriodicFunction fn(q, f, 1);
        for (std::size_t g = 0; g < q->order(); ++g) fn.at(g)[0] = random_element(f, rng);
        const auto dual = dual_subgroup(*q, character_field(*q, p));
        const auto hat = dft_forward(fn, dual);
        CHECK(dft_inverse(hat, q, dual.front().context(), 1) == fn.embedded(dual.front().context()));

        auto a = random_element_ga(f, sub.rank(), rng);
        const auto lhs = dft_forward(apply_convolution(a, fn), dual);
        std::map<std::vector<FieldElement>, FieldElement> expect;
        for (const auto& [wpt, val] : hat.entries) {
            const auto prod = evaluate_laurent(a, wpt) * val[0];
            if (!prod.is_zero()) expect.emplace(wpt.coords(), prod);
        }
        REQUIRE(lhs.entries.size() == expect.size());
        for (const auto& [wpt, val] : lhs.entries) CHECK(expect.at(wpt.coords()) == val[0]);
    }
}
