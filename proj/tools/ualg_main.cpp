#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ualg/context.hpp"
#include "ualg/errors.hpp"
#include "ualg/io.hpp"
#include "ualg/verify.hpp"

namespace {

using namespace ualg;

void emit(const Json& report, bool as_json) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << render_text(report);
}

int run(int argc, char** argv) {
    CLI::App app{"Finite universal algebra toolkit: congruence lattices, commutators, "
                 "spectra, classifications and extension analysis"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit reports as JSON instead of text");
    app.fallthrough(); // lets --json appear after the subcommand

    std::string file, alpha_spec, beta_spec, sub_spec, what = "con";
    std::uint64_t seed = 0;
    int max_size = 5;

    CLI::App* con = app.add_subcommand("con", "enumerate the congruence lattice");
    con->add_option("file", file, "algebra file")->required();

    CLI::App* comm = app.add_subcommand("commutator", "commutator of two congruences");
    comm->add_option("file", file, "algebra file")->required();
    comm->add_option("--alpha", alpha_spec, "generating pairs, e.g. 0-2,1-3")->required();
    comm->add_option("--beta", beta_spec, "generating pairs")->required();

    CLI::App* spec = app.add_subcommand("spectrum", "prime spectrum, radicals and Min topology");
    spec->add_option("file", file, "algebra file")->required();

    CLI::App* cls = app.add_subcommand("classify", "semiprime/Baer/hyperarchimedean profile");
    cls->add_option("file", file, "algebra file")->required();

    CLI::App* ext = app.add_subcommand("extension", "analyze a subalgebra extension");
    ext->add_option("file", file, "algebra file")->required();
    ext->add_option("--sub", sub_spec, "comma-separated subuniverse, e.g. 0,3")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--seed", seed, "seed for the randomized suites");
    verify->add_option("--max-size", max_size, "universe bound for generated algebras");

    CLI::App* dot = app.add_subcommand("export-dot", "DOT diagram of the lattice or a topology");
    dot->add_option("file", file, "algebra file")->required();
    dot->add_option("--what", what, "con | spec-topology | min-topology")
        ->check(CLI::IsMember({"con", "spec-topology", "min-topology"}));

    CLI11_PARSE(app, argc, argv);

    if (con->parsed()) {
        AlgebraFile f = load_algebra_file(file);
        ConLattice lat = con_lattice(f.algebra);
        emit(con_report(f, lat), as_json);
        return 0;
    }
    if (comm->parsed()) {
        AlgebraFile f = load_algebra_file(file);
        AlgebraContext cx = make_algebra_context(f.algebra);
        Congruence alpha = cg(f.algebra, parse_pair_list(alpha_spec, f.algebra.size()));
        Congruence beta = cg(f.algebra, parse_pair_list(beta_spec, f.algebra.size()));
        Congruence value = commutator(f.algebra, alpha, beta);
        emit(commutator_report(f, cx.lat, alpha, beta, value), as_json);
        return 0;
    }
    if (spec->parsed()) {
        AlgebraFile f = load_algebra_file(file);
        AlgebraContext cx = make_algebra_context(f.algebra);
        emit(spectrum_report(f, cx.lat, cx.comm, cx.spec), as_json);
        return 0;
    }
    if (cls->parsed()) {
        AlgebraFile f = load_algebra_file(file);
        AlgebraContext cx = make_algebra_context(f.algebra);
        emit(classification_json(f, cx.lat, classification_report(cx.alg, cx.lat, cx.comm)),
             as_json);
        return 0;
    }
    if (ext->parsed()) {
        AlgebraFile f = load_algebra_file(file);
        std::vector<Element> sub;
        for (const std::string& tok : CLI::detail::split(sub_spec, ',')) {
            try {
                sub.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw input_error("--sub expects comma-separated element indices, got '" + tok +
                                  "'");
            }
        }
        AlgebraContext big = make_algebra_context(f.algebra);
        ExtensionContext cx = extension_context(make_extension(f.algebra, sub), big);
        emit(extension_report(f, cx, analyze_extension(cx)), as_json);
        return 0;
    }
    if (verify->parsed()) {
        VerifyOptions options;
        options.seed = seed;
        options.max_size = max_size;
        VerifyResult result = run_verify(options);
        std::cout << result.report.dump(2) << "\n";
        return result.violation ? 2 : 0;
    }
    if (dot->parsed()) {
        AlgebraFile f = load_algebra_file(file);
        AlgebraContext cx = make_algebra_context(f.algebra);
        if (what == "con") {
            BooleanCenter center = boolean_center(cx.lat);
            std::cout << export_dot_con(cx.lat, &cx.spec, &center);
        } else {
            SpectrumPoints points =
                what == "min-topology" ? SpectrumPoints::Min : SpectrumPoints::Spec;
            Topology topo = stone_topology(cx.alg, cx.lat, cx.spec, points);
            std::cout << export_dot_topology(cx.lat, topo, f.algebra.name() + " " + what);
        }
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ualg::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const ualg::enumeration_limit_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const ualg::hypothesis_violation& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
