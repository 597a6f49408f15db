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

#include "floquetp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "floquetp/errors.hpp"
#include "floquetp/io.hpp"
#include "floquetp/json.hpp"
#include "floquetp/oracle.hpp"
#include "floquetp/trace_descent.hpp"

namespace floquetp {

namespace {

class FileError : public Error {
   public:
    using Error::Error;
};

struct Options {
    std::string file;
    std::string period;
    std::string level;
    std::string sub;
    std::uint64_t target_q = 0;
    bool json = false;
    bool laplace = false;
};

std::string field_name(const FieldContext& f) {
    std::string s = "GF(" + std::to_string(f.p());
    if (f.degree() > 1) s += "^" + std::to_string(f.degree());
    s += ")";
    if (!f.canonical()) {
        s += " modulus";
        for (auto c : f.modulus()) s += " " + std::to_string(c);
    }
    return s;
}

std::string vector_text(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_field_element(v[i]);
    return s + ")";
}

std::string point_text(const TorusPoint& z) {
    std::string s = vector_text(z.coords()) + " of order " + std::to_string(z.order());
    if (!z.label().empty()) s += ", label " + format_lattice_point(z.label());
    return s;
}

void print_values(std::ostream& out, const PeriodicFunction& f, const std::string& indent) {
    for (std::size_t g = 0; g < f.size(); ++g) {
        out << indent << format_lattice_point(f.quotient().lift_of_index(g)) << " ";
        out << (f.dim() == 1 ? format_field_element(f.at(g)[0]) : vector_text(f.at(g))) << "\n";
    }
}

/// Degree over GF(p) of the smallest field holding every value of f.
int minimal_subfield_degree(const PeriodicFunction& f) {
    int d = 1;
    for (std::size_t g = 0; g < f.size(); ++g)
        for (const auto& x : f.at(g)) d = std::lcm(d, subfield_degree(x));
    return d;
}

std::string gf_name(std::uint32_t p, int d) {
    return "GF(" + std::to_string(p) + (d > 1 ? "^" + std::to_string(d) : "") + ")";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Session {
   public:
    Session(const Options& o, std::ostream& out) : o_(o), out_(out), file_(parse_operator_file(read_file(o.file))) {}

    int solve() {
        const auto a = op();
        const auto sub = period(a);
        const auto sols = periodic_solutions(a, sub);
        const auto q = make_quotient(sub);
        if (o_.json) {
            Json j = header("solve", a, sub);
            j["dimension"] = sols.size();
            j["solutions"] = Json::array();
            for (const auto& e : sols) {
                Json sj = solution_to_json(e);
                sj["values"] = periodic_function_to_json(render(q, e));
                j["solutions"].push_back(std::move(sj));
            }
            emit(j);
        } else {
            print_header(a, sub);
            out_ << "kernel dimension: " << sols.size() << "\n";
            if (sols.empty()) out_ << "kernel is zero\n";
            for (std::size_t k = 0; k < sols.size(); ++k) {
                out_ << "solution " << k + 1 << "\n";
                out_ << "  character " << point_text(sols[k].z) << "\n";
                out_ << "  vector " << vector_text(sols[k].u) << "\n";
                out_ << "  values\n";
                print_values(out_, render(q, sols[k]), "    ");
            }
        }
        return sols.empty() ? exit_empty : exit_ok;
    }

    int spectrum() {
        const auto a = op();
        const auto sub = period(a);
        if (!o_.level.empty()) {
            const QuotientData q(sub);
            const auto& amb = matrix_ambient_field(a, q);
            const auto mu = literal(o_.level, amb, "--level");
            const auto basis = generalized_eigenspace(a, mu, sub);
            if (o_.json) {
                Json j = header("spectrum", a, sub);
                j["level_field"] = field_to_json(amb);
                j["mu"] = element_to_json(mu);
                j["dimension"] = basis.size();
                j["basis"] = Json::array();
                for (const auto& e : basis) j["basis"].push_back(solution_to_json(e));
                emit(j);
            } else {
                print_header(a, sub);
                out_ << "level " << format_field_element(mu) << " in " << field_name(amb) << ": dimension " << basis.size()
                     << "\n";
                for (const auto& e : basis) print_solution(e);
            }
            return exit_ok;
        }
        const auto d = spectral_decomposition(a, sub);
        std::size_t total = 0;
        for (const auto& l : d.levels) total += l.basis.size();
        if (o_.json) {
            Json j = header("spectrum", a, sub);
            j["decomposition"] = spectral_decomposition_to_json(d);
            j["total_dimension"] = total;
            emit(j);
        } else {
            print_header(a, sub);
            out_ << "ambient field: " << field_name(*d.ambient) << "\n";
            for (const auto& l : d.levels) {
                out_ << "level " << format_field_element(l.mu) << " (in " << gf_name(a.context().p(), l.subfield_degree)
                     << "): dimension " << l.basis.size() << "\n";
                for (const auto& e : l.basis) print_solution(e);
            }
            out_ << "total dimension: " << total << "\n";
        }
        return exit_ok;
    }

    int jordan() {
        const auto a = op();
        const auto sub = period(a);
        const auto r = jordan_basis(a, sub);
        if (o_.json) {
            Json j = header("jordan", a, sub);
            j["report"] = jordan_report_to_json(r);
            emit(j);
            return exit_ok;
        }
        print_header(a, sub);
        out_ << "ambient field: " << field_name(*r.ambient) << "\n";
        for (const auto& pt : r.points) {
            out_ << "character " << point_text(pt.z) << "\n";
            for (const auto& c : pt.form.chains) {
                out_ << "  block " << format_field_element(c.mu) << " size " << c.vectors.size() << "\n";
                for (const auto& v : c.vectors) out_ << "    " << vector_text(v) << "\n";
            }
        }
        out_ << "block sizes\n";
        for (const auto& [mu, sizes] : block_multisets(r)) {
            out_ << "  " << format_field_element(mu) << ":";
            for (auto s : sizes) out_ << ' ' << s;
            out_ << "\n";
        }
        return exit_ok;
    }

    int multipliers_cmd() {
        const auto a = op();
        const auto sub = period(a);
        const auto zs = multipliers(a, sub);
        if (o_.json) {
            Json j = header("multipliers", a, sub);
            j["count"] = zs.size();
            j["multipliers"] = Json::array();
            for (const auto& z : zs) j["multipliers"].push_back(torus_point_to_json(z));
            emit(j);
        } else {
            print_header(a, sub);
            if (!zs.empty()) out_ << "ambient field: " << field_name(zs.front().context()) << "\n";
            for (const auto& z : zs) out_ << "multiplier " << point_text(z) << "\n";
            out_ << "count: " << zs.size() << "\n";
        }
        return exit_ok;
    }

    int count() {
        const auto a = op();
        const auto sub = period(a);
        const auto n = count_multipliers(a, sub);
        if (o_.json) {
            Json j = header("count", a, sub);
            j["count"] = n;
            emit(j);
        } else {
            out_ << n << "\n";
        }
        return exit_ok;
    }

    int descend() {
        const auto a = op();
        const auto sub = period(a);
        const std::uint32_t p = a.context().p();
        std::uint64_t q = o_.target_q;
        if (q == 0) {
            q = 1;
            for (int i = 0; i < a.context().degree(); ++i) q *= p;
        }
        const DescentRequest req{a, q, sub};
        const auto one = descend_kernel(req);
        const auto basis = one ? gf_q_kernel_basis(req) : std::vector<PeriodicFunction>{};
        const auto& gfq = subfield_of_order(p, q);
        if (o_.json) {
            Json j = header("descend", a, sub);
            j["q"] = q;
            j["target"] = field_to_json(gfq);
            j["dimension"] = basis.size();
            j["solution"] = one ? periodic_function_to_json(*one) : Json();
            j["solution_subfield_degree"] = one ? Json(minimal_subfield_degree(*one)) : Json();
            j["basis"] = Json::array();
            for (const auto& f : basis)
                j["basis"].push_back({{"subfield_degree", minimal_subfield_degree(f)}, {"function", periodic_function_to_json(f)}});
            emit(j);
        } else {
            print_header(a, sub);
            out_ << "target field: " << field_name(gfq) << " (q = " << q << ")\n";
            if (!one) {
                out_ << "kernel is zero: no nonzero solution with values in GF(" << q << ")\n";
                return exit_empty;
            }
            out_ << "descended solution, values in " << gf_name(p, minimal_subfield_degree(*one)) << "\n";
            print_values(out_, *one, "  ");
            out_ << "basis over GF(" << q << "): dimension " << basis.size() << "\n";
            for (std::size_t k = 0; k < basis.size(); ++k) {
                out_ << "solution " << k + 1 << ", values in " << gf_name(p, minimal_subfield_degree(basis[k])) << "\n";
                print_values(out_, basis[k], "  ");
            }
        }
        return one ? exit_ok : exit_empty;
    }

    int fragment() {
        GroupAlgebraElement scalar = [&] {
            if (file_.kind == FileKind::fragmentation) return file_.fragmentation->a;
            const auto a = op();
            if (a.size() != 1) throw DomainError("fragment needs a scalar operator (size 1)");
            return a.at(0, 0);
        }();
        std::optional<Sublattice> lam;
        if (!o_.sub.empty()) lam = sublattice_flag(o_.sub, scalar.rank(), "--sub");
        else if (file_.kind == FileKind::fragmentation) lam = file_.fragmentation->sub;
        if (!lam) throw DomainError("fragment needs --sub or a 'sub' header");
        const FragmentationMap map(*lam);
        const auto b = fragment_operator(scalar, map);
        std::optional<Sublattice> inner;
        if (!o_.period.empty()) inner = map.inner_period(sublattice_flag(o_.period, scalar.rank(), "--period"));
        if (o_.json) {
            Json j;
            j["command"] = "fragment";
            j["sub"] = sublattice_to_json(*lam);
            j["representatives"] = map.representatives();
            j["operator"] = operator_to_json(b);
            if (inner) j["inner_period"] = sublattice_to_json(*inner);
            emit(j);
        } else {
            out_ << "# sublattice " << lam->to_string() << ", index " << lam->index() << "\n";
            out_ << "# coset representatives";
            for (const auto& v : map.representatives()) out_ << ' ' << format_lattice_point(v);
            out_ << "\n";
            if (inner) out_ << "# inner period " << inner->to_string() << "\n";
            out_ << format_operator_file(b);
        }
        return exit_ok;
    }

    int cover() {
        if (file_.kind != FileKind::graph) throw DomainError("cover needs a file of kind graph");
        const auto v = max_abelian_cover(*file_.graph, *file_.field);
        const auto variant = o_.laplace ? GraphOperatorKind::laplace : GraphOperatorKind::adjacency;
        if (o_.json) {
            Json j;
            j["command"] = "cover";
            j["rank"] = v.rank;
            j["vertices"] = v.vertices;
            j["variant"] = o_.laplace ? "laplace" : "adjacency";
            j["edges"] = Json::array();
            for (const auto& e : v.edges)
                j["edges"].push_back({{"tail", e.tail}, {"head", e.head}, {"label", e.label}, {"weight", element_to_json(e.weight)}});
            j["operator"] = operator_to_json(voltage_operator(v, variant));
            emit(j);
        } else {
            out_ << "# first Betti number " << v.rank << "\n";
            out_ << format_voltage_graph(v, variant);
        }
        return exit_ok;
    }

    int oracle_check() {
        const auto a = op();
        const auto sub = sublattice_flag(o_.period, a.rank(), "--period");
        const auto qm = build_quotient_matrix(a, sub);
        const std::size_t oracle_dim = nullity(qm.matrix);
        Json j;
        if (o_.json) {
            j = header("oracle-check", a, sub);
            j["oracle_dimension"] = oracle_dim;
        }
        if (!is_p_saturated(sub, a.context().p())) {
            if (o_.json) {
                j["saturated"] = false;
                emit(j);
            } else {
                out_ << "period is not p-saturated; oracle only: dim " << oracle_dim << "\n";
            }
            return exit_ok;
        }
        const std::size_t char_dim = periodic_solutions(a, sub).size();
        const auto r = jordan_basis(a, sub);
        const bool blocks_agree = block_multisets(r) == oracle_block_multisets(qm.matrix, *r.ambient);
        const bool agree = char_dim == oracle_dim && blocks_agree;
        if (o_.json) {
            j["saturated"] = true;
            j["character_dimension"] = char_dim;
            j["jordan_blocks_agree"] = blocks_agree;
            j["agree"] = agree;
            emit(j);
        } else if (agree) {
            out_ << "character method and oracle agree: dim " << char_dim << "\n";
        } else {
            out_ << "character method and oracle disagree: dim " << char_dim << " vs " << oracle_dim
                 << (blocks_agree ? "" : ", Jordan blocks differ") << "\n";
        }
        return agree ? exit_ok : exit_error;
    }

   private:
    MatrixOperator op() const { return file_operator(file_); }

    Sublattice period(const MatrixOperator& a) const {
        auto sub = sublattice_flag(o_.period, a.rank(), "--period");
        if (!is_p_saturated(sub, a.context().p()))
            throw NotSaturated("period " + sub.to_string() + " has index " + std::to_string(sub.index()) + ", divisible by p = " +
                               std::to_string(a.context().p()));
        return sub;
    }

    static Sublattice sublattice_flag(const std::string& text, std::size_t rank, const char* flag) {
        try {
            return parse_sublattice(text, rank);
        } catch (const ParseError& e) {
            throw ParseError(std::string(flag) + ": " + e.what());
        }
    }

    static FieldElement literal(const std::string& text, const FieldContext& f, const char* flag) {
        try {
            return parse_field_element(text, f);
        } catch (const ParseError& e) {
            throw ParseError(std::string(flag) + ": " + e.what());
        }
    }

    Json header(const char* command, const MatrixOperator& a, const Sublattice& sub) const {
        Json j;
        j["command"] = command;
        j["field"] = field_to_json(a.context());
        j["rank"] = a.rank();
        j["size"] = a.size();
        j["period"] = sublattice_to_json(sub);
        j["index"] = sub.index();
        return j;
    }

    void print_header(const MatrixOperator& a, const Sublattice& sub) const {
        out_ << "operator: " << a.size() << "x" << a.size() << " over " << field_name(a.context()) << ", rank " << a.rank()
             << "\n";
        out_ << "period: " << sub.to_string() << ", index " << sub.index() << "\n";
    }

    void print_solution(const ElementarySolution& e) const {
        out_ << "  character " << point_text(e.z) << ", vector " << vector_text(e.u) << ", depth " << e.depth << "\n";
    }

    void emit(const Json& j) const { out_ << j.dump(2) << "\n"; }

    const Options& o_;
    std::ostream& out_;
    OperatorFile file_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Harmonic solutions, spectra and descent for convolution operators over finite fields", "floquetp"};
    app.require_subcommand(1);
    Options o;

    struct Command {
        const char* name;
        const char* help;
        bool needs_period;
    };
    const Command commands[] = {
        {"solve", "basis of the periodic kernel", true},
        {"spectrum", "spectral decomposition, or one generalized eigenspace with --level", true},
        {"jordan", "Jordan chains of the symbol at every character", true},
        {"multipliers", "characters at which the symbol is singular", true},
        {"count", "number of multipliers", true},
        {"descend", "kernel solutions with values in GF(q)", true},
        {"fragment", "matrix operator of a scalar operator restricted to a sublattice", false},
        {"cover", "maximal abelian cover of a graph as a voltage graph", false},
        {"oracle-check", "compare with dense linear algebra on the quotient", true},
    };
    for (const auto& c : commands) {
        auto* sc = app.add_subcommand(c.name, c.help);
        sc->add_option("file", o.file, "input file")->required();
        if (std::string(c.name) != "cover") {
            auto* per = sc->add_option("--period", o.period, "period sublattice, e.g. 3 or 2,1;0,3");
            if (c.needs_period) per->required();
        }
        if (std::string(c.name) == "spectrum") sc->add_option("--level", o.level, "eigenvalue literal over the ambient field");
        if (std::string(c.name) == "descend") sc->add_option("--target-q", o.target_q, "order of the target field");
        if (std::string(c.name) == "fragment") sc->add_option("--sub", o.sub, "sublattice to fragment by");
        if (std::string(c.name) == "cover") sc->add_flag("--laplace", o.laplace, "emit the Laplace operator");
        sc->add_flag("--json", o.json, "single JSON document on stdout");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        Session s(o, out);
        if (name == "solve") return s.solve();
        if (name == "spectrum") return s.spectrum();
        if (name == "jordan") return s.jordan();
        if (name == "multipliers") return s.multipliers_cmd();
        if (name == "count") return s.count();
        if (name == "descend") return s.descend();
        if (name == "fragment") return s.fragment();
        if (name == "cover") return s.cover();
        return s.oracle_check();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const NotSaturated& e) {
        err << "period not p-saturated: " << e.what() << "\n";
    } catch (const NotInSubfield& e) {
        err << "coefficients outside the target field: " << e.what() << "\n";
    } catch (const ContextMismatch& e) {
        err << "field mismatch: " << e.what() << "\n";
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << "\n";
    } catch (const FileError& e) {
        err << "i/o error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_error;
}

}  // namespace floquetp
