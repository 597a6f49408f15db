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

#include "floquetp/io.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "floquetp/errors.hpp"
#include "floquetp/number_theory.hpp"

namespace floquetp {

namespace {

class Cursor {
   public:
    Cursor(std::string_view s, int line, int col0) : s_(s), line_(line), col0_(col0) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }
    std::int64_t integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        if (pos_ - digits > 18) {
            pos_ = start;
            fail("integer too large");
        }
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }
    std::string word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (pos_ == start) fail("expected a word");
        return std::string(s_.substr(start, pos_ - start));
    }
    /// Everything up to the end of the line, trimmed.
    std::string rest() {
        skip_ws();
        std::string r(s_.substr(pos_));
        pos_ = s_.size();
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
        return r;
    }
    void finish() {
        if (!eof()) fail("unexpected trailing text");
    }
    int column() const { return col0_ + static_cast<int>(pos_) + 1; }
    int line() const { return line_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

   private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_, col0_;
};

FieldElement element_at(Cursor& c, const FieldContext& ctx) {
    if (c.consume('[')) {
        std::vector<std::int64_t> coeffs;
        if (!c.consume(']')) {
            do {
                const int col = c.column();
                const std::int64_t v = c.integer();
                if (v < 0 || v >= static_cast<std::int64_t>(ctx.p()))
                    throw ParseError("coefficient " + std::to_string(v) + " outside 0.." + std::to_string(ctx.p() - 1),
                                     c.line(), col);
                coeffs.push_back(v);
            } while (c.consume(','));
            c.expect(']');
        }
        if (static_cast<int>(coeffs.size()) > ctx.degree())
            c.fail("coefficient vector longer than the field degree " + std::to_string(ctx.degree()));
        coeffs.resize(static_cast<std::size_t>(ctx.degree()), 0);
        return ctx.from_coeffs(coeffs);
    }
    if (c.consume('g')) {
        if (!c.consume('^')) return ctx.generator();
        return ctx.generator().pow(c.integer());
    }
    return ctx.from_int(c.integer());
}

IntVec point_at(Cursor& c, std::size_t rank) {
    c.expect('(');
    IntVec v;
    if (!c.consume(')')) {
        do v.push_back(c.integer());
        while (c.consume(','));
        c.expect(')');
    }
    if (v.size() != rank) c.fail("lattice point has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(rank));
    return v;
}

// Terms up to the end of the cursor; λ already present in `seen` is rejected.
void terms_at(Cursor& c, GroupAlgebraElement& a, std::set<IntVec>& seen) {
    while (!c.eof()) {
        const int col = c.column();
        const IntVec lam = point_at(c, a.rank());
        if (!seen.insert(lam).second) throw ParseError("duplicate term at " + format_lattice_point(lam), c.line(), col);
        a.add_term(lam, element_at(c, a.context()));
        if (!c.consume(';')) break;
    }
    c.finish();
}

template <class F>
auto whole(std::string_view text, F&& f) {
    Cursor c(text, 0, 0);
    auto r = f(c);
    c.finish();
    return r;
}

std::size_t index_at(Cursor& c, std::size_t bound, const char* what) {
    const int col = c.column();
    const std::int64_t v = c.integer();
    if (v < 0 || static_cast<std::uint64_t>(v) >= bound)
        throw ParseError(std::string(what) + " " + std::to_string(v) + " out of range 0.." + std::to_string(bound) + "-1",
                         c.line(), col);
    return static_cast<std::size_t>(v);
}

}  // namespace

FieldElement parse_field_element(std::string_view text, const FieldContext& ctx) {
    return whole(text, [&](Cursor& c) { return element_at(c, ctx); });
}

std::string format_field_element(const FieldElement& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

IntVec parse_lattice_point(std::string_view text, std::size_t rank) {
    return whole(text, [&](Cursor& c) { return point_at(c, rank); });
}

std::string format_lattice_point(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

GroupAlgebraElement parse_terms(std::string_view text, const FieldContext& ctx, std::size_t rank) {
    GroupAlgebraElement a(ctx, rank);
    std::set<IntVec> seen;
    Cursor c(text, 0, 0);
    terms_at(c, a, seen);
    return a;
}

std::string format_terms(const GroupAlgebraElement& a) {
    std::string s;
    for (const auto& [lam, c] : a.terms()) s += (s.empty() ? "" : "; ") + format_lattice_point(lam) + " " + format_field_element(c);
    return s;
}

const char* kind_name(FileKind k) {
    switch (k) {
        case FileKind::operator_matrix:
            return "operator";
        case FileKind::voltage_graph:
            return "voltage_graph";
        case FileKind::fragmentation:
            return "fragmentation";
        case FileKind::graph:
            return "graph";
    }
    return "?";
}

OperatorFile parse_operator_file(std::string_view text) {
    OperatorFile out;
    std::map<std::string, std::pair<std::string, int>> header;
    std::optional<std::int64_t> p, degree, rank, size, vertices;
    std::optional<std::vector<std::uint32_t>> modulus;
    bool in_body = false;
    // State for the body, set up once the header is complete.
    std::set<std::tuple<std::size_t, std::size_t, IntVec>> seen_entries;
    std::set<IntVec> seen_scalar;

    auto start_body = [&](int line) {
        if (!p) throw ParseError("missing 'p' header", line, 1);
        const auto pv = *p;
        if (pv < 2 || pv > 0x7fffffff || !is_prime(static_cast<std::uint64_t>(pv)))
            throw DomainError("line " + std::to_string(header.at("p").second) + ": characteristic " + std::to_string(pv) +
                              " is not prime");
        if (modulus) {
            if (degree && static_cast<std::int64_t>(modulus->size()) != *degree + 1)
                throw ParseError("modulus length does not match degree", header.at("modulus").second, 1);
            for (auto& c : *modulus) c %= static_cast<std::uint32_t>(pv);
            out.field = &build_field_with_modulus(static_cast<std::uint32_t>(pv), *modulus);
        } else {
            const std::int64_t m = degree.value_or(1);
            if (m < 1 || m > 64) throw DomainError("line " + std::to_string(header.at("degree").second) + ": degree out of range");
            out.field = &build_field(static_cast<std::uint32_t>(pv), static_cast<int>(m));
        }
        auto need = [&](const std::optional<std::int64_t>& v, const char* key) {
            if (!v) throw ParseError(std::string("missing '") + key + "' header for kind " + kind_name(out.kind), line, 1);
            if (*v < 0 || *v > 4096) throw ParseError(std::string("'") + key + "' out of range", header.at(key).second, 1);
            return static_cast<std::size_t>(*v);
        };
        switch (out.kind) {
            case FileKind::operator_matrix:
                out.op.emplace(*out.field, need(rank, "rank"), need(size, "size"));
                break;
            case FileKind::voltage_graph:
                out.voltage = VoltageGraph{out.field, need(vertices, "vertices"), need(rank, "rank"), {}};
                break;
            case FileKind::fragmentation:
                out.fragmentation = FragmentationSpec{GroupAlgebraElement(*out.field, need(rank, "rank")), std::nullopt};
                if (header.count("sub")) {
                    const auto& [txt, ln] = header.at("sub");
                    try {
                        out.fragmentation->sub = parse_sublattice(txt, need(rank, "rank"));
                    } catch (const ParseError& e) {
                        throw ParseError(e.what(), ln, 1);
                    }
                }
                break;
            case FileKind::graph:
                out.graph = Multigraph{need(vertices, "vertices"), {}};
                break;
        }
        in_body = true;
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Cursor c(line, line_no, 0);
        if (c.eof()) {
            if (end == text.size()) break;
            continue;
        }
        const int key_col = c.column();
        const std::string key = c.word();
        if (key == "entry" || key == "edge" || key == "scalar") {
            if (!in_body) start_body(line_no);
            if (key == "entry") {
                if (out.kind != FileKind::operator_matrix) throw ParseError("'entry' needs kind operator", line_no, key_col);
                const std::size_t i = index_at(c, out.op->size(), "row");
                const std::size_t j = index_at(c, out.op->size(), "column");
                c.expect(':');
                GroupAlgebraElement a(*out.field, out.op->rank());
                std::set<IntVec> local;
                const int terms_col = c.column();
                terms_at(c, a, local);
                for (const auto& lam : local)
                    if (!seen_entries.insert({i, j, lam}).second)
                        throw ParseError("duplicate term " + format_lattice_point(lam) + " in entry " + std::to_string(i) +
                                             " " + std::to_string(j),
                                         line_no, terms_col);
                out.op->set(i, j, out.op->at(i, j) + a);
            } else if (key == "scalar") {
                if (out.kind != FileKind::fragmentation) throw ParseError("'scalar' needs kind fragmentation", line_no, key_col);
                c.expect(':');
                GroupAlgebraElement a(*out.field, out.fragmentation->a.rank());
                terms_at(c, a, seen_scalar);
                out.fragmentation->a = out.fragmentation->a + a;
            } else if (out.kind == FileKind::voltage_graph) {
                const std::size_t t = index_at(c, out.voltage->vertices, "tail");
                const std::size_t h = index_at(c, out.voltage->vertices, "head");
                c.expect(':');
                const IntVec label = point_at(c, out.voltage->rank);
                const FieldElement w = c.eof() ? out.field->one() : element_at(c, *out.field);
                c.finish();
                out.voltage->edges.push_back({t, h, label, w});
            } else if (out.kind == FileKind::graph) {
                const std::size_t u = index_at(c, out.graph->vertices, "vertex");
                const std::size_t v = index_at(c, out.graph->vertices, "vertex");
                c.finish();
                out.graph->edges.emplace_back(u, v);
            } else {
                throw ParseError("'edge' needs kind voltage_graph or graph", line_no, key_col);
            }
            continue;
        }
        if (in_body) throw ParseError("header line '" + key + "' after the body started", line_no, key_col);
        if (header.count(key)) throw ParseError("repeated header '" + key + "'", line_no, key_col);
        if (key == "kind") {
            const std::string v = c.word();
            c.finish();
            if (v == "operator") out.kind = FileKind::operator_matrix;
            else if (v == "voltage_graph") out.kind = FileKind::voltage_graph;
            else if (v == "fragmentation") out.kind = FileKind::fragmentation;
            else if (v == "graph") out.kind = FileKind::graph;
            else throw ParseError("unknown kind '" + v + "'", line_no, key_col);
        } else if (key == "p" || key == "degree" || key == "rank" || key == "size" || key == "vertices") {
            const std::int64_t v = c.integer();
            c.finish();
            (key == "p" ? p : key == "degree" ? degree : key == "rank" ? rank : key == "size" ? size : vertices) = v;
        } else if (key == "modulus") {
            std::vector<std::uint32_t> m;
            while (!c.eof()) {
                const int col = c.column();
                const std::int64_t v = c.integer();
                if (v < 0) throw ParseError("negative modulus coefficient", line_no, col);
                m.push_back(static_cast<std::uint32_t>(v));
            }
            modulus = m;
        } else if (key == "variant") {
            const std::string v = c.word();
            c.finish();
            if (v == "adjacency") out.variant = GraphOperatorKind::adjacency;
            else if (v == "laplace") out.variant = GraphOperatorKind::laplace;
            else throw ParseError("unknown variant '" + v + "'", line_no, key_col);
        } else if (key == "sub") {
            header[key] = {c.rest(), line_no};
            continue;
        } else {
            throw ParseError("unknown key '" + key + "'", line_no, key_col);
        }
        header[key] = {"", line_no};
    }
    if (!in_body) start_body(line_no);
    return out;
}

MatrixOperator file_operator(const OperatorFile& f) {
    switch (f.kind) {
        case FileKind::operator_matrix:
            return *f.op;
        case FileKind::voltage_graph:
            return voltage_operator(*f.voltage, f.variant);
        case FileKind::fragmentation:
            return MatrixOperator::scalar(f.fragmentation->a);
        case FileKind::graph:
            break;
    }
    throw DomainError("a plain graph file has no operator; build its cover first");
}

namespace {

void field_header(std::ostringstream& os, const FieldContext& f) {
    os << "p " << f.p() << "\n";
    if (f.degree() > 1) {
        os << "degree " << f.degree() << "\n";
        if (!f.canonical()) {
            os << "modulus";
            for (auto c : f.modulus()) os << ' ' << c;
            os << "\n";
        }
    }
}

}  // namespace

std::string format_operator_file(const MatrixOperator& a) {
    std::ostringstream os;
    os << "kind operator\n";
    field_header(os, a.context());
    os << "rank " << a.rank() << "\nsize " << a.size() << "\n";
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!a.at(i, j).is_zero()) os << "entry " << i << ' ' << j << ": " << format_terms(a.at(i, j)) << "\n";
    return os.str();
}

std::string format_voltage_graph(const VoltageGraph& g, GraphOperatorKind variant) {
    std::ostringstream os;
    os << "kind voltage_graph\n";
    field_header(os, *g.field);
    os << "rank " << g.rank << "\nvertices " << g.vertices << "\n";
    if (variant == GraphOperatorKind::laplace) os << "variant laplace\n";
    for (const auto& e : g.edges)
        os << "edge " << e.tail << ' ' << e.head << ": " << format_lattice_point(e.label) << ' '
           << format_field_element(e.weight) << "\n";
    return os.str();
}

}  // namespace floquetp
