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

#include "floquetp/json.hpp"

#include "floquetp/errors.hpp"

namespace floquetp {

Json field_to_json(const FieldContext& f) {
    Json j;
    j["p"] = f.p();
    j["degree"] = f.degree();
    j["modulus"] = Json::array();
    for (auto c : f.modulus()) j["modulus"].push_back(c);
    return j;
}

const FieldContext& field_from_json(const Json& j) {
    const auto p = j.at("p").get<std::uint32_t>();
    if (j.contains("modulus")) return build_field_with_modulus(p, j.at("modulus").get<std::vector<std::uint32_t>>());
    return build_field(p, j.value("degree", 1));
}

Json element_to_json(const FieldElement& x) {
    if (x.context().degree() == 1) return x.prime_value();
    Json j = Json::array();
    for (auto c : x.coeffs()) j.push_back(c);
    return j;
}

FieldElement element_from_json(const Json& j, const FieldContext& f) {
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    if (!j.is_array()) throw DomainError("field element must be an integer or a coefficient array");
    auto c = j.get<std::vector<std::int64_t>>();
    if (static_cast<int>(c.size()) > f.degree()) throw DomainError("coefficient array longer than the field degree");
    for (auto v : c)
        if (v < 0 || v >= static_cast<std::int64_t>(f.p())) throw DomainError("coefficient outside 0..p-1");
    c.resize(static_cast<std::size_t>(f.degree()), 0);
    return f.from_coeffs(c);
}

Json vector_to_json(const Vector& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(element_to_json(x));
    return j;
}

Vector vector_from_json(const Json& j, const FieldContext& f) {
    Vector v;
    for (const auto& x : j) v.push_back(element_from_json(x, f));
    return v;
}

Json matrix_to_json(const Matrix& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(element_to_json(m(i, k)));
        j.push_back(std::move(row));
    }
    return j;
}

Matrix matrix_from_json(const Json& j, const FieldContext& f) {
    const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw DomainError("ragged matrix");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = element_from_json(j[i][k], f);
    }
    return m;
}

Json sublattice_to_json(const Sublattice& s) { return s.basis(); }

Sublattice sublattice_from_json(const Json& j) { return Sublattice(j.get<IntMat>()); }

Json torus_point_to_json(const TorusPoint& z) {
    Json j;
    j["coords"] = vector_to_json(z.coords());
    j["order"] = z.order();
    j["label"] = z.label();
    return j;
}

TorusPoint torus_point_from_json(const Json& j, const FieldContext& f) {
    auto coords = vector_from_json(j.at("coords"), f);
    if (j.contains("order")) return TorusPoint(f, std::move(coords), j["order"].get<std::uint64_t>(), j.value("label", IntVec{}));
    return TorusPoint(f, std::move(coords));
}

Json periodic_function_to_json(const PeriodicFunction& f) {
    Json j;
    j["field"] = field_to_json(f.context());
    j["period"] = sublattice_to_json(f.quotient().sublattice());
    j["dim"] = f.dim();
    j["values"] = Json::array();
    for (std::size_t g = 0; g < f.size(); ++g) j["values"].push_back(vector_to_json(f.at(g)));
    return j;
}

PeriodicFunction periodic_function_from_json(const Json& j) {
    const auto& field = field_from_json(j.at("field"));
    PeriodicFunction f(make_quotient(sublattice_from_json(j.at("period"))), field, j.at("dim").get<std::size_t>());
    const auto& values = j.at("values");
    if (values.size() != f.size()) throw DomainError("expected one value per group element");
    for (std::size_t g = 0; g < f.size(); ++g) {
        auto v = vector_from_json(values[g], field);
        if (v.size() != f.dim()) throw DomainError("value of the wrong dimension");
        f.at(g) = std::move(v);
    }
    return f;
}

Json terms_to_json(const GroupAlgebraElement& a) {
    Json j = Json::array();
    for (const auto& [lam, c] : a.terms()) j.push_back({{"at", lam}, {"c", element_to_json(c)}});
    return j;
}

GroupAlgebraElement terms_from_json(const Json& j, const FieldContext& f, std::size_t rank) {
    GroupAlgebraElement a(f, rank);
    for (const auto& t : j) {
        const auto lam = t.at("at").get<IntVec>();
        if (lam.size() != rank) throw DomainError("term position of the wrong rank");
        a.add_term(lam, element_from_json(t.at("c"), f));
    }
    return a;
}

Json operator_to_json(const MatrixOperator& a) {
    Json j;
    j["field"] = field_to_json(a.context());
    j["rank"] = a.rank();
    j["size"] = a.size();
    j["entries"] = Json::array();
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c)
            if (!a.at(r, c).is_zero()) j["entries"].push_back({{"row", r}, {"col", c}, {"terms", terms_to_json(a.at(r, c))}});
    return j;
}

MatrixOperator operator_from_json(const Json& j) {
    const auto& field = field_from_json(j.at("field"));
    const auto rank = j.at("rank").get<std::size_t>();
    MatrixOperator a(field, rank, j.at("size").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
        const auto r = e.at("row").get<std::size_t>(), c = e.at("col").get<std::size_t>();
        if (r >= a.size() || c >= a.size()) throw DomainError("entry index out of range");
        a.set(r, c, a.at(r, c) + terms_from_json(e.at("terms"), field, rank));
    }
    return a;
}

Json solution_to_json(const ElementarySolution& e) {
    Json j;
    j["z"] = torus_point_to_json(e.z);
    j["u"] = vector_to_json(e.u);
    j["depth"] = e.depth;
    j["mu"] = element_to_json(e.mu);
    return j;
}

Json spectral_decomposition_to_json(const SpectralDecomposition& d) {
    Json j;
    j["period"] = sublattice_to_json(d.quotient->sublattice());
    j["ambient"] = field_to_json(*d.ambient);
    j["levels"] = Json::array();
    for (const auto& l : d.levels) {
        Json lj;
        lj["mu"] = element_to_json(l.mu);
        lj["subfield_degree"] = l.subfield_degree;
        lj["dimension"] = l.basis.size();
        lj["basis"] = Json::array();
        for (const auto& e : l.basis) lj["basis"].push_back(solution_to_json(e));
        j["levels"].push_back(std::move(lj));
    }
    return j;
}

Json jordan_report_to_json(const JordanReport& r) {
    Json j;
    j["period"] = sublattice_to_json(r.quotient->sublattice());
    j["ambient"] = field_to_json(*r.ambient);
    j["n"] = r.n;
    j["points"] = Json::array();
    for (const auto& pt : r.points) {
        Json pj;
        pj["z"] = torus_point_to_json(pt.z);
        pj["symbol"] = matrix_to_json(pt.symbol);
        pj["chains"] = Json::array();
        for (const auto& c : pt.form.chains) {
            Json cj;
            cj["mu"] = element_to_json(c.mu);
            cj["vectors"] = Json::array();
            for (const auto& v : c.vectors) cj["vectors"].push_back(vector_to_json(v));
            pj["chains"].push_back(std::move(cj));
        }
        pj["P"] = matrix_to_json(pt.form.P);
        pj["J"] = matrix_to_json(pt.form.J);
        j["points"].push_back(std::move(pj));
    }
    Json blocks = Json::array();
    for (const auto& [mu, sizes] : block_multisets(r)) blocks.push_back({{"mu", element_to_json(mu)}, {"sizes", sizes}});
    j["blocks"] = std::move(blocks);
    return j;
}

Json scalar_report_to_json(const ScalarSpectralReport& r) {
    Json j;
    j["period"] = sublattice_to_json(r.quotient->sublattice());
    j["ambient"] = field_to_json(*r.ambient);
    j["levels"] = Json::array();
    for (const auto& l : r.levels) {
        Json lj;
        lj["mu"] = element_to_json(l.mu);
        lj["subfield_degree"] = l.subfield_degree;
        lj["points"] = Json::array();
        for (const auto& z : l.points) lj["points"].push_back(torus_point_to_json(z));
        j["levels"].push_back(std::move(lj));
    }
    return j;
}

}  // namespace floquetp
