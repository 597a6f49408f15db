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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "floquetp/cli.hpp"
#include "floquetp/errors.hpp"
#include "floquetp/io.hpp"
#include "floquetp/json.hpp"
#include "floquetp/oracle.hpp"
#include "floquetp/trace_descent.hpp"

namespace py = pybind11;
using namespace floquetp;

namespace {

MatrixOperator load(const std::string& text) { return file_operator(parse_operator_file(text)); }

Sublattice period(const MatrixOperator& a, const std::string& text) { return parse_sublattice(text, a.rank()); }

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact spectral computations for convolution operators over finite fields";

    // Translators run newest first, so the base class goes in first.
    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<NotSaturated>(m, "NotSaturated", base.ptr());
    py::register_exception<NotInSubfield>(m, "NotInSubfield", base.ptr());

    m.def("operator_json", [](const std::string& text) { return dump(operator_to_json(load(text))); },
          "Parse an operator, voltage graph or fragmentation file and return the operator as JSON");
    m.def("format_operator", [](const std::string& json) { return format_operator_file(operator_from_json(Json::parse(json))); },
          "Render operator JSON in the text file format");

    m.def(
        "periodic_solutions",
        [](const std::string& text, const std::string& per) {
            const auto a = load(text);
            const auto sub = period(a, per);
            const auto q = make_quotient(sub);
            Json out = Json::array();
            for (const auto& e : periodic_solutions(a, sub)) {
                Json j = solution_to_json(e);
                j["values"] = periodic_function_to_json(render(q, e));
                out.push_back(std::move(j));
            }
            return dump(out);
        },
        py::arg("text"), py::arg("period"));
    m.def(
        "count_multipliers", [](const std::string& text, const std::string& per) {
            const auto a = load(text);
            return count_multipliers(a, period(a, per));
        },
        py::arg("text"), py::arg("period"));
    m.def(
        "multipliers",
        [](const std::string& text, const std::string& per) {
            const auto a = load(text);
            Json out = Json::array();
            for (const auto& z : multipliers(a, period(a, per))) out.push_back(torus_point_to_json(z));
            return dump(out);
        },
        py::arg("text"), py::arg("period"));
    m.def(
        "spectral_decomposition", [](const std::string& text, const std::string& per) {
            const auto a = load(text);
            return dump(spectral_decomposition_to_json(spectral_decomposition(a, period(a, per))));
        },
        py::arg("text"), py::arg("period"));
    m.def(
        "jordan_basis", [](const std::string& text, const std::string& per) {
            const auto a = load(text);
            return dump(jordan_report_to_json(jordan_basis(a, period(a, per))));
        },
        py::arg("text"), py::arg("period"));
    m.def(
        "oracle_nullity", [](const std::string& text, const std::string& per) {
            const auto a = load(text);
            return nullity(build_quotient_matrix(a, period(a, per)).matrix);
        },
        py::arg("text"), py::arg("period"));
    m.def(
        "descend",
        [](const std::string& text, const std::string& per, std::uint64_t q) {
            const auto a = load(text);
            const DescentRequest req{a, q, period(a, per)};
            Json out = Json::array();
            for (const auto& f : gf_q_kernel_basis(req)) out.push_back(periodic_function_to_json(f));
            return dump(out);
        },
        py::arg("text"), py::arg("period"), py::arg("q"), "A GF(q)-basis of the GF(q)-valued periodic solutions");
    m.def(
        "finite_support_solution",
        [](const std::string& text) -> py::object {
            const auto sol = finite_support_solution(load(text));
            if (!sol) return py::none();
            Json out = Json::array();
            for (const auto& x : *sol) out.push_back(terms_to_json(x));
            return py::str(dump(out));
        },
        py::arg("text"));
    m.def(
        "det_symbol", [](const std::string& text) { return dump(terms_to_json(det_symbol(load(text)))); }, py::arg("text"));
    m.def(
        "fragment",
        [](const std::string& text, const std::string& sub) {
            const auto a = load(text);
            if (a.size() != 1) throw DomainError("fragment needs a scalar operator");
            return dump(operator_to_json(fragment_operator(a.at(0, 0), FragmentationMap(parse_sublattice(sub, a.rank())))));
        },
        py::arg("text"), py::arg("sub"));
    m.def(
        "cover",
        [](const std::string& text) {
            const auto f = parse_operator_file(text);
            if (f.kind != FileKind::graph) throw DomainError("cover needs a file of kind graph");
            return format_voltage_graph(max_abelian_cover(*f.graph, *f.field));
        },
        py::arg("text"));
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a command line; returns (exit code, stdout, stderr)");
}
