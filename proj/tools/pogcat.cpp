#include <CLI11.hpp>

#include <iostream>

#include "commands_graded.hpp"

using namespace pogcat;
using namespace pogcat::cli;

namespace {

Rational parse_positive(const std::string& flag, const std::string& v) {
    Rational r;
    try {
        r = Rational::parse(v);
    } catch (const std::exception&) {
        throw UsageError(flag + ": '" + v + "' is not a rational number");
    }
    if (r.sign() <= 0) throw UsageError(flag + " must be positive");
    return r;
}

// Flags override the file header; the tables are re-read under the new
// header so truncation and coefficient reduction apply.
CategoryFile load(const Options& o) {
    CategoryFile f = load_category(o.file);
    bool changed = false;
    if (o.dmax) f.dmax = *o.dmax, changed = true;
    if (o.lmax) f.lmax = *o.lmax, changed = true;
    if (o.cutoff) f.cutoff = parse_positive("--cutoff", *o.cutoff), changed = true;
    if (o.eps) f.eps = parse_positive("--eps", *o.eps), changed = true;
    if (o.coeff) {
        if (*o.coeff == "z")
            f.coeff = Coeff::Z;
        else if (*o.coeff == "f2")
            f.coeff = Coeff::F2;
        else
            throw UsageError("--coeff must be z or f2");
        changed = true;
    }
    if (changed) f = parse_category(write_category(f));
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pogcat: exact computations with pog-graded and curved categories"};
    app.require_subcommand(1);
    Options o;

    auto file_cmd = [&](const std::string& name, const std::string& help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("file", o.file, "category file")->required()->check(CLI::ExistingFile);
        s->add_option("--dmax", o.dmax, "largest arity checked");
        s->add_option("--lmax", o.lmax, "largest number of bars in quotient words");
        s->add_option("--cutoff", o.cutoff, "filtration cutoff p/q");
        s->add_option("--eps", o.eps, "curvature gap p/q");
        s->add_option("--coeff", o.coeff, "z or f2");
        s->add_flag("--json", o.json, "machine-readable report");
        return s;
    };
    file_cmd("check", "relation, unit, degree and filtration sweep");
    file_cmd("homology", "ranks of Gr H of every hom");
    file_cmd("quotient", "quotient by the `sub` objects and the module lemmas");
    file_cmd("localize", "invert the `arrow` morphisms and compare with telescopes");
    file_cmd("tw", "twisted complexes: objects and cones on the arrows");
    auto* bc = file_cmd("bc", "bounding cochains and the comparison with flat twisted complexes");
    bc->add_option("--search-cutoff", o.search_cutoff, "shift steps of eps tried for candidate terms");
    bc->add_option("--window", o.window, "shift steps for diagonal twisting in the comparison");
    file_cmd("orbit", "orbit category of a graded file with `step` lines")->add_option("--window", o.window, "grades on each side of 0");
    file_cmd("unorbit", "unorbit category of a graded file")->add_option("--window", o.window, "grades on each side of 0");
    file_cmd("reconstruct", "colimit over an exhaustion of Q/Z")->add_option("--depth", o.depth, "exhaustion steps");
    file_cmd("pipeline", "exhaustion, colimit, orbit and completion stages")->add_option("--depth", o.depth, "exhaustion steps");
    CLI::App* nov = app.add_subcommand("demo-novikov", "the completion example M/I^k M");
    nov->add_option("--n", o.n, "denominator bound");
    nov->add_option("--cutoff", o.novikov_cutoff, "truncation level");
    nov->add_flag("--json", o.json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Report rep;
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "demo-novikov") {
            rep = cmd_demo_novikov(o.n, parse_positive("--cutoff", o.novikov_cutoff));
        } else {
            CategoryFile f = load(o);
            if (cmd == "check")
                rep = f.kind == FileKind::graded ? cmd_check_graded(f) : cmd_check_curved(f);
            else if (cmd == "homology")
                rep = cmd_homology(f);
            else if (cmd == "quotient")
                rep = cmd_quotient(f);
            else if (cmd == "localize")
                rep = cmd_localize(f);
            else if (cmd == "tw")
                rep = cmd_tw(f);
            else if (cmd == "bc")
                rep = cmd_bc(f, o.search_cutoff, o.window);
            else if (cmd == "orbit")
                rep = cmd_orbit(f, o.window);
            else if (cmd == "unorbit")
                rep = cmd_unorbit(f, o.window);
            else if (cmd == "reconstruct")
                rep = cmd_reconstruct(f, o.depth);
            else if (cmd == "pipeline")
                rep = cmd_pipeline(f, o.depth);
            rep.input = o.file;
        }
    } catch (const ParseError& e) {
        std::cerr << o.file << ": " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    rep.command = cmd;
    if (o.json)
        std::cout << rep.json().dump(2) << "\n";
    else
        std::cout << rep.text();
    return rep.exit_code();
}
