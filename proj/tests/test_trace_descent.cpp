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
#include "floquetp/oracle.hpp"
#include "floquetp/trace_descent.hpp"

using namespace floquetp;

namespace {

GroupAlgebraElement three_term(const FieldContext& f) {
    GroupAlgebraElement a(f, 1);
    for (std::int64_t v : {-1, 0, 1}) a.add_term({v}, f.one());
    return a;
}

PeriodicFunction pattern(const QuotientPtr& q, const FieldContext& f, const std::vector<FieldElement>& vals) {
    PeriodicFunction r(q, f, 1);
    for (std::size_t g = 0; g < vals.size(); ++g) r.at(q->index_of_point({static_cast<std::int64_t>(g)}))[0] = vals[g];
    return r;
}

FieldElement random_element(const FieldContext& f, std::mt19937_64& rng) {
    std::vector<std::int64_t> c(f.degree());
    for (auto& v : c) v = static_cast<std::int64_t>(rng() % f.p());
    return f.from_coeffs(c);
}

}  // namespace

TEST_CASE("pointwise traces") {
    const auto& f2 = build_field(2, 1);
    const auto& f4 = build_field(2, 2);
    const auto w = f4.generator();
    auto q = make_quotient(Sublattice::scaled(1, 3));
    const auto f = pattern(q, f4, {f4.one(), w.inv(), w});
    CHECK(restrict_function(trace_solution(f, 2, 2), f2) == pattern(q, f2, {f2.zero(), f2.one(), f2.one()}));
    const auto g = pattern(q, f4, {f4.one(), f4.zero(), f4.one()});
    CHECK(trace_solution(g, 2, 1) == g);
    CHECK(trace_solution(PeriodicFunction(q, f4, 2), 4, 1).is_zero());
    CHECK_THROWS_AS(trace_solution(f, 2, 1), NotInSubfield);
    CHECK(subfield_of_order(3, 9).degree() == 2);
    CHECK_THROWS_AS(subfield_of_order(3, 6), DomainError);
}

TEST_CASE("descent of the three-term operator") {
    const auto& f2 = build_field(2, 1);
    const DescentRequest req{MatrixOperator::scalar(three_term(f2)), 2, Sublattice::scaled(1, 3)};
    const auto f = descend_kernel(req);
    REQUIRE(f.has_value());
    CHECK(&f->context() == &f2);
    CHECK_FALSE(f->is_zero());
    CHECK(apply_operator(req.a, *f).is_zero());
    const auto q = f->quotient_ptr();
    const auto base = pattern(q, f2, {f2.zero(), f2.one(), f2.one()});
    CHECK((*f == base || *f == base.shift({1}) || *f == base.shift({2})));

    const auto basis = gf_q_kernel_basis(req);
    CHECK(basis.size() == 2);
    for (const auto& b : basis) CHECK(apply_operator(req.a, b).is_zero());

    const DescentRequest none{MatrixOperator::identity(f2, 1, 2), 2, Sublattice::scaled(1, 3)};
    CHECK_FALSE(descend_kernel(none).has_value());
    CHECK(gf_q_kernel_basis(none).empty());

    // A rational multiplier needs no trace.
    const auto& f5 = build_field(5, 1);
    GroupAlgebraElement d(f5, 1);
    d.add_term({1}, f5.one());
    d.add_term({0}, -f5.one());
    const auto c = descend_kernel({MatrixOperator::scalar(d), 5, Sublattice::scaled(1, 4)});
    REQUIRE(c.has_value());
    for (std::size_t g = 0; g < c->size(); ++g) CHECK(c->at(g)[0] == c->at(0)[0]);

    const auto& f4 = build_field(2, 2);
    CHECK_THROWS_AS(descend_kernel({MatrixOperator::scalar(GroupAlgebraElement::delta(f4.generator(), {0})), 2,
                                    Sublattice::scaled(1, 3)}),
                    NotInSubfield);
}

TEST_CASE("descended basis matches the oracle over GF(q)") {
    std::mt19937_64 rng(97);
    int nonzero = 0;
    for (int t = 0; t < 30; ++t) {
        const std::uint64_t q = std::vector<std::uint64_t>{2, 3, 4}[t % 3];
        const std::uint32_t p = q == 3 ? 3 : 2;
        const auto& fq = subfield_of_order(p, q);
        const std::size_t n = 1 + rng() % 2;
        MatrixOperator a(fq, 1, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (int k = 0; k < 2; ++k) a.add_term(i, j, {static_cast<std::int64_t>(rng() % 5) - 2}, random_element(fq, rng));
        std::int64_t m;
        do m = 1 + static_cast<std::int64_t>(rng() % 15);
        while (m % p == 0);
        const DescentRequest req{a, q, Sublattice::scaled(1, m)};
        const auto basis = gf_q_kernel_basis(req);
        CHECK(basis.size() == nullity(build_quotient_matrix(a, req.sub, fq).matrix));
        CHECK(basis.size() == periodic_solutions(a, req.sub).size());
        const auto f = descend_kernel(req);
        CHECK(f.has_value() == !basis.empty());
        if (f) {
            ++nonzero;
            CHECK_FALSE(f->is_zero());
            CHECK(apply_operator(a, *f).is_zero());
        }
    }
    CHECK(nonzero > 0);
}
