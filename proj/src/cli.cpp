#include "lie3/cli.hpp"

#include "lie3/algebra_io.hpp"
#include "lie3/dual.hpp"
#include "lie3/expr.hpp"
#include "lie3/hopf.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace lie3 {

namespace {

struct Options {
    std::string algebra = "builtin:iso3_1_3";
    int cutoff = 4;
    int degree = 3;
    std::string format = "text";
    std::vector<std::string> exprs;
    int d = 0, n = 0, k = 0;
    bool machine() const { return format == "machine"; }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Loaded {
    AlgebraSpec spec;
    std::optional<MatrixRep> rep;
};

Loaded load(const std::string& ref) {
    if (ref.rfind("builtin:", 0) == 0) {
        Builtin b = builtin(ref.substr(8));
        return {std::move(b.spec), std::move(b.rep)};
    }
    return {load_algebra(ref), std::nullopt};
}

void print_scalar(std::ostream& out, const CycQ& c) { out << c.str() << '\n'; }

void print_element(std::ostream& out, const Options& o, const Formatter& f, const Element& e) {
    if (o.machine()) out << f.element_machine(e);
    else out << f.element(e) << '\n';
}

int cmd_validate(const Options& o, std::ostream& out) {
    Loaded a = load(o.algebra);
    auto emit = [&](const ValidationReport& r) {
        for (const auto& c : r.checks) {
            if (o.machine()) {
                out << c.name << '\t' << (c.passed ? "pass" : "fail") << '\t' << c.cases << '\n';
            } else {
                out << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.cases << " cases)";
                if (!c.passed) out << "\n  counterexample: " << c.counterexample;
                out << '\n';
            }
        }
        return r.all_passed();
    };
    bool ok = emit(validate(a.spec));
    if (a.rep) ok = emit(check_representation(a.spec, *a.rep)) && ok;
    return ok ? 0 : 1;
}

int cmd_hopf_check(const Options& o, std::ostream& out) {
    HopfAlgebra H(load(o.algebra).spec);
    const Formatter& f = H.fmt();
    bool ok = true;
    auto emit = [&](const AxiomReport& r) {
        ok = ok && r.passed();
        out << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.cases << " monomials)\n";
        for (const auto& fl : r.failures) out << "  " << f.monomial(fl.monomial) << ": " << fl.residual << '\n';
    };
    emit(H.check_coassoc(o.degree));
    emit(H.check_counit(o.degree));
    emit(H.check_grading(o.degree));

    AntipodeReport ar = H.check_antipode(o.degree);
    auto fails = ar.failures();
    ok = ok && fails.empty();
    out << "antipode: " << (fails.empty() ? "pass" : "FAIL") << " (" << ar.entries.size() << " monomials";
    if (!fails.empty()) out << ", " << fails.size() << " failing";
    out << ")\n";
    for (const AntipodeEntry* e : fails)
        out << "  " << f.monomial(e->monomial) << ": m(S x id)D - eps = " << f.element(e->left_residual)
            << "; m(id x S)D - eps = " << f.element(e->right_residual) << '\n';

    // primitivity of generators, [X, Y] and symmetrized triples
    Enveloping& U = H.U();
    const int p = U.p(), n = U.n();
    std::size_t cases = 0;
    std::vector<std::string> bad;
    auto prim = [&](const Element& e, const std::string& what) {
        ++cases;
        if (!H.check_primitive(e)) bad.push_back(what);
    };
    for (int i = 0; i < p; ++i) prim(U.gen_x(i), H.spec().g0_names()[i]);
    for (int j = 0; j < n; ++j) prim(U.gen_y(j), H.spec().g1_names()[j]);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j)
            prim(U.mul(U.gen_x(i), U.gen_y(j)) - U.mul(U.gen_y(j), U.gen_x(i)),
                 "[" + H.spec().g0_names()[i] + "," + H.spec().g1_names()[j] + "]");
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) {
                std::array<int, 3> t{a, b, c};
                WordComb w;
                do w.push_back({{Letter::y(t[0]), Letter::y(t[1]), Letter::y(t[2])}, CycQ(1)});
                while (std::next_permutation(t.begin(), t.end()));
                // the S3 sum counts each distinct arrangement 6/|orbit| times
                CycQ mult(static_cast<long>(6 / w.size()));
                for (auto& [word, coef] : w) coef = mult;
                const auto& g1 = H.spec().g1_names();
                prim(U.normalize(w), "{" + g1[a] + "," + g1[b] + "," + g1[c] + "}");
            }
    ok = ok && bad.empty();
    out << "primitive: " << (bad.empty() ? "pass" : "FAIL") << " (" << cases << " elements)\n";
    for (const auto& b : bad) out << "  not primitive: " << b << '\n';
    return ok ? 0 : 1;
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
    if (cmd == "validate") return cmd_validate(o, out);
    if (cmd == "roby-dim") {
        out << roby_dim(o.d, o.n, o.k).get_str() << '\n';
        return 0;
    }
    if (cmd == "roby-basis") {
        for (const Sequence& s : roby_basis(o.d, o.n, o.k)) {
            for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
            out << '\n';
        }
        return 0;
    }
    if (cmd == "hopf-check") return cmd_hopf_check(o, out);
    if (cmd == "algebra-dump") {
        out << algebra_to_json(load(o.algebra).spec);
        return 0;
    }
    if (cmd == "pbw-dim") {
        Enveloping U(load(o.algebra).spec);
        if (o.degree < 0) throw UsageError("--degree must be >= 0");
        auto dims = U.pbw_graded_dims(o.degree);
        mpz_class total = 0;
        if (!o.machine()) out << "degree\tdim\tfiltered\n";
        for (std::size_t k = 0; k < dims.size(); ++k) {
            total += dims[k];
            out << k << '\t' << dims[k].get_str() << '\t' << total.get_str() << '\n';
        }
        return 0;
    }
    if (cmd.rfind("dual-", 0) == 0) {
        DualAlgebra D(load(o.algebra).spec, o.cutoff);
        auto emit = [&](const DualElement& f) {
            if (o.machine()) out << D.render_machine(f);
            else out << D.render(f) << '\n';
        };
        if (cmd == "dual-check") {
            DualCheckReport r = D.three_exterior_check(o.cutoff);
            out << "three-exterior: " << (r.passed() ? "pass" : "FAIL") << " (" << r.cases
                << " identities, cutoff " << o.cutoff << ")\n";
            for (const auto& f : r.failures) out << "  " << f << '\n';
            return r.passed() ? 0 : 1;
        }
        std::vector<DualElement> fs;
        for (const auto& e : o.exprs) fs.push_back(parse_dual(e, D));
        if (cmd == "dual-mul") {
            emit(D.mul(fs, o.cutoff));
        } else {  // dual-coprod
            DualTensor t = D.coproduct(fs.at(0), o.cutoff);
            if (o.machine()) out << D.render_machine(t);
            else out << D.render(t) << '\n';
        }
        return 0;
    }

    HopfAlgebra H(load(o.algebra).spec);
    Enveloping& U = H.U();
    std::vector<Element> es;
    for (const auto& e : o.exprs) es.push_back(parse_element(e, U));
    if (cmd == "normalize") {
        print_element(out, o, H.fmt(), es.at(0));
    } else if (cmd == "mul") {
        Element acc = es.at(0);
        for (std::size_t k = 1; k < es.size(); ++k) acc = U.mul(acc, es[k]);
        print_element(out, o, H.fmt(), acc);
    } else if (cmd == "coprod") {
        TensorElement t = H.coproduct(es.at(0));
        if (o.machine()) out << H.render_machine(t);
        else out << H.render(t) << '\n';
    } else if (cmd == "counit") {
        print_scalar(out, HopfAlgebra::counit(es.at(0)));
    } else if (cmd == "antipode") {
        print_element(out, o, H.fmt(), H.antipode(es.at(0)));
    } else {
        throw UsageError("unknown command '" + cmd + "'");
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"lie3: enveloping algebras of Lie algebras of order three"};
    app.name("lie3");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--algebra", o.algebra, "Algebra definition: a JSON file or builtin:NAME")
        ->capture_default_str();
    app.add_option("--cutoff", o.cutoff, "Degree cutoff for dual computations")
        ->check(CLI::Range(0, 6))
        ->capture_default_str();
    app.add_option("--degree", o.degree, "Degree bound for checks and dimensions")
        ->check(CLI::Range(0, 8))
        ->capture_default_str();
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();

    auto sub_expr = [&](const char* name, const char* help, int count) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("expr", o.exprs, "Expression")->required()->expected(count);
        return s;
    };
    app.add_subcommand("validate", "Check the algebra axioms (and a shipped representation)");
    sub_expr("normalize", "PBW normal form of an expression", 1);
    sub_expr("mul", "Product of two or more expressions", -2);
    sub_expr("coprod", "Twisted coproduct", 1);
    sub_expr("counit", "Counit", 1);
    sub_expr("antipode", "Antipode", 1);
    app.add_subcommand("hopf-check", "Hopf axiom suite on PBW monomials up to --degree");
    sub_expr("dual-mul", "Product of dual elements (left-nested)", -2);
    sub_expr("dual-coprod", "Coproduct of a dual element", 1);
    app.add_subcommand("dual-check", "Three-exterior relations among dual generators");
    for (const char* name : {"roby-dim", "roby-basis"}) {
        CLI::App* s = app.add_subcommand(name, std::string(name) == "roby-dim"
                                                   ? "Dimension of the degree-k part of Lambda(V, n)"
                                                   : "Rise-free words spanning that part");
        s->add_option("d", o.d, "dim V")->required();
        s->add_option("n", o.n, "rise length")->required();
        s->add_option("k", o.k, "degree")->required();
    }
    app.add_subcommand("pbw-dim", "Graded and filtered PBW dimensions up to --degree");
    app.add_subcommand("algebra-dump", "Print the algebra as JSON");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run 'lie3 --help' for usage\n";
        return 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, o, out);
    } catch (const ExprError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const AlgebraFileError& e) {
        err << "algebra error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

}  // namespace lie3
