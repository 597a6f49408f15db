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
#include "floquetp/json.hpp"

using namespace floquetp;

namespace {

template <class T, class To, class From>
T roundtrip(const T& x, To to, From from) {
    return from(Json::parse(to(x).dump()));
}

}  // namespace

TEST_CASE("json: fields and elements") {
    for (const auto* f : {&build_field(2, 1), &build_field(2, 4), &build_field(7, 2),
                          &build_field_with_modulus(2, {1, 1, 0, 1})}) {
        const auto& back = field_from_json(Json::parse(field_to_json(*f).dump()));
        CHECK(&back == f);
        for (const auto& x : f->elements()) CHECK(element_from_json(Json::parse(element_to_json(x).dump()), *f) == x);
    }
    const auto& f4 = build_field(2, 2);
    CHECK(element_to_json(f4.generator()).dump() == "[0,1]");
    CHECK(element_to_json(build_field(5, 1).from_int(3)).dump() == "3");
    CHECK_THROWS_AS(element_from_json(Json::parse("[0,2]"), f4), DomainError);
    CHECK_THROWS_AS(element_from_json(Json::parse("\"g\""), f4), DomainError);
}

TEST_CASE("json: lattices, points and functions") {
    const Sublattice sub({{2, 1}, {0, 3}});
    CHECK(sublattice_from_json(Json::parse(sublattice_to_json(sub).dump())) == sub);

    const auto q = make_quotient(sub);
    const auto& f = character_field(*q, 5);
    for (const auto& z : dual_subgroup(*q, f)) {
        const auto back = torus_point_from_json(Json::parse(torus_point_to_json(z).dump()), f);
        CHECK(back == z);
        CHECK(back.order() == z.order());
        CHECK(back.label() == z.label());
        const auto fz = character_function(q, z);
        CHECK(roundtrip(fz, periodic_function_to_json, periodic_function_from_json) == fz);
    }
}

TEST_CASE("json: operators roundtrip") {
    std::mt19937_64 rng(11);
    for (const auto* ctx : {&build_field(3, 1), &build_field(2, 3)}) {
        const auto elems = ctx->elements();
        for (std::size_t n = 1; n <= 3; ++n) {
            MatrixOperator a(*ctx, 2, n);
            for (int t = 0; t < 6; ++t)
                a.add_term(rng() % n, rng() % n, {static_cast<std::int64_t>(rng() % 3) - 1, static_cast<std::int64_t>(rng() % 3) - 1},
                           elems[rng() % elems.size()]);
            CHECK(roundtrip(a, operator_to_json, operator_from_json) == a);
        }
    }
    const auto j = operator_to_json(MatrixOperator::identity(build_field(2, 1), 1, 2));
    CHECK(j["entries"].size() == 2);
    CHECK(j.dump() == operator_to_json(operator_from_json(j)).dump());
}

TEST_CASE("json: reports") {
    const auto& f2 = build_field(2, 1);
    GroupAlgebraElement a(f2, 1);
    for (std::int64_t k : {-1, 0, 1}) a.add_term({k}, f2.one());
    const auto sub = Sublattice::scaled(1, 3);

    const auto d = spectral_decomposition(MatrixOperator::scalar(a), sub);
    const auto dj = spectral_decomposition_to_json(d);
    std::size_t total = 0;
    for (const auto& l : dj["levels"]) total += l["dimension"].get<std::size_t>();
    CHECK(total == 3);

    const auto jr = jordan_report_to_json(jordan_basis(MatrixOperator::scalar(a), sub));
    CHECK(jr["points"].size() == 3);
    CHECK(jr["blocks"].size() >= 1);

    const auto sr = scalar_report_to_json(eigendecompose(a, sub));
    CHECK(sr["levels"][0]["points"].size() == 2);
    CHECK(sr.dump() == scalar_report_to_json(eigendecompose(a, sub)).dump());
}
