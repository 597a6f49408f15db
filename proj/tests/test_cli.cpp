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

#include <sstream>

#include "floquetp/cli.hpp"
#include "floquetp/json.hpp"

using namespace floquetp;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    for (auto& a : args)
        if (a.rfind("@", 0) == 0) a = std::string(FLOQUETP_TEST_DATA) + "/" + a.substr(1);
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
    return n;
}

}  // namespace

TEST_CASE("cli: solve") {
    const auto r = run({"solve", "@three_term.op", "--period", "3"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("kernel dimension: 2\n") != std::string::npos);
    CHECK(count_lines_starting(r.out, "solution ") == 2);
    CHECK(count_lines_starting(r.out, "  character ") == 2);
    CHECK(r.out.find("of order 3") != std::string::npos);

    const auto five = run({"solve", "@three_term_p5.op", "--period", "3"});
    CHECK(five.code == exit_ok);
    CHECK(five.out.find("kernel dimension: 2\n") != std::string::npos);

    const auto id = run({"solve", "@identity.op", "--period", "5"});
    CHECK(id.code == exit_empty);
    CHECK(id.out.find("kernel is zero") != std::string::npos);

    const auto zero = run({"solve", "@zero.op", "--period", "2"});
    CHECK(zero.code == exit_ok);
    CHECK(zero.out.find("kernel dimension: 4\n") != std::string::npos);
}

TEST_CASE("cli: oracle-check") {
    const auto r = run({"oracle-check", "@three_term.op", "--period", "3"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "character method and oracle agree: dim 2\n");
    const auto ns = run({"oracle-check", "@three_term.op", "--period", "6"});
    CHECK(ns.code == exit_ok);
    CHECK(ns.out.find("not p-saturated") != std::string::npos);
    for (const char* per : {"1", "3", "5", "9", "15"})
        CHECK(run({"oracle-check", "@three_term.op", "--period", per}).code == exit_ok);
    CHECK(run({"oracle-check", "@pair.vg", "--period", "4"}).code == exit_ok);
}

TEST_CASE("cli: errors") {
    const auto bad = run({"solve", "@bad_coefficient.op", "--period", "3"});
    CHECK(bad.code == exit_error);
    CHECK(bad.err.find("parse error: line 4, column 23") != std::string::npos);
    CHECK(run({"solve", "@missing.op", "--period", "3"}).err.find("i/o error") != std::string::npos);
    CHECK(run({"solve", "@three_term.op"}).code == exit_error);
    CHECK(run({"frobnicate", "@three_term.op"}).code == exit_error);
    CHECK(run({}).code == exit_error);
    const auto ns = run({"solve", "@three_term.op", "--period", "4"});
    CHECK(ns.code == exit_error);
    CHECK(ns.err.find("not p-saturated") != std::string::npos);
    CHECK(run({"solve", "@three_term.op", "--period", "x"}).err.find("parse error: --period") != std::string::npos);
    CHECK(run({"cover", "@three_term.op"}).code == exit_error);
    CHECK(run({"solve", "@theta.graph", "--period", "3"}).code == exit_error);
    CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("cli: other commands") {
    for (std::int64_t m = 1; m <= 21; m += 2) {
        const auto r = run({"count", "@three_term.op", "--period", std::to_string(m)});
        CHECK(r.code == exit_ok);
        CHECK(r.out == (m % 3 == 0 ? "2\n" : "0\n"));
    }
    const auto d = run({"descend", "@three_term.op", "--period", "3"});
    CHECK(d.code == exit_ok);
    CHECK(d.out.find("basis over GF(2): dimension 2") != std::string::npos);
    CHECK(run({"descend", "@three_term.op", "--period", "3", "--target-q", "4"}).out.find("basis over GF(4): dimension 2") !=
          std::string::npos);
    CHECK(run({"descend", "@identity.op", "--period", "3"}).code == exit_empty);
    CHECK(run({"descend", "@three_term.op", "--period", "3", "--target-q", "3"}).code == exit_error);

    const auto s = run({"spectrum", "@three_term.op", "--period", "3"});
    CHECK(s.out.find("total dimension: 3") != std::string::npos);
    const auto lvl = run({"spectrum", "@three_term.op", "--period", "3", "--level", "0"});
    CHECK(lvl.out.find("dimension 2") != std::string::npos);

    const auto f = run({"fragment", "@shift2d.frag"});
    CHECK(f.code == exit_ok);
    CHECK(f.out.find("size 4") != std::string::npos);
    CHECK(run({"fragment", "@three_term.op", "--sub", "2"}).out.find("entry 0 1: (0) 1; (1) 1") != std::string::npos);

    const auto c = run({"cover", "@theta.graph"});
    CHECK(c.out.find("# first Betti number 2") != std::string::npos);
    CHECK(count_lines_starting(c.out, "edge ") == 6);

    const auto j = run({"jordan", "@zero.op", "--period", "2"});
    CHECK(j.out.find("  0: 1 1 1 1") != std::string::npos);
}

TEST_CASE("cli: deterministic output and JSON roundtrips") {
    const std::vector<std::vector<std::string>> cases = {
        {"solve", "@three_term.op", "--period", "3"},
        {"spectrum", "@three_term.op", "--period", "3"},
        {"spectrum", "@three_term.op", "--period", "3", "--level", "1"},
        {"jordan", "@pair.vg", "--period", "2"},
        {"multipliers", "@three_term.op", "--period", "9"},
        {"count", "@three_term.op", "--period", "9"},
        {"descend", "@three_term.op", "--period", "3", "--target-q", "4"},
        {"fragment", "@shift2d.frag", "--period", "4,0;0,2"},
        {"cover", "@theta.graph", "--laplace"},
        {"oracle-check", "@three_term.op", "--period", "3"},
    };
    for (auto args : cases) {
        CAPTURE(args[0]);
        const auto text1 = run(args), text2 = run(args);
        CHECK(text1.out == text2.out);
        args.push_back("--json");
        const auto r = run(args);
        CHECK(r.code == exit_ok);
        CHECK(run(args).out == r.out);
        const Json j = Json::parse(r.out);
        CHECK(j["command"] == args[0]);
        CHECK(j.dump(2) + "\n" == r.out);
        if (j.contains("operator")) CHECK(operator_to_json(operator_from_json(j["operator"])) == j["operator"]);
        if (j.contains("solutions"))
            for (const auto& s : j["solutions"])
                CHECK(periodic_function_to_json(periodic_function_from_json(s["values"])) == s["values"]);
        if (j.contains("basis") && args[0] == "descend")
            for (const auto& b : j["basis"])
                CHECK(periodic_function_to_json(periodic_function_from_json(b["function"])) == b["function"]);
    }
}
