#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"

#include "skewhad/autgroup.hpp"
#include "skewhad/hadamard.hpp"
#include "skewhad/scheme.hpp"
#include "skewhad/schurian.hpp"
#include "skewhad/sign_matrix.hpp"
#include "skewhad/triples.hpp"

namespace skewhad::cli {

namespace {

// Axiom failures on inputs of verbs other than `verify` are precondition
// violations, reported on stderr with exit code 2.
AssociationScheme load_verified_scheme(const std::string& path) {
    AssociationScheme x = load_scheme(path);
    verify_scheme_axioms(x.relations());
    return x;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact skew-Hadamard matrices, doublings, and class-2 association schemes"};
    app.name("skewhad");
    app.require_subcommand(1);

    std::string in_path, out_path;
    int q = 0;
    bool assert_lemma1 = false;
    int code = 0;
    std::string verb = "skewhad";

    auto* cmd_paley = app.add_subcommand("paley", "write the Paley skew-Hadamard matrix of order q+1");
    cmd_paley->add_option("--q,-q", q, "odd prime with q = 3 (mod 4)")->required();
    cmd_paley->add_option("-o,--output", out_path, "output .shm path")->required();
    cmd_paley->callback([&] {
        verb = "paley";
        save_sign_matrix(out_path, paley_skew_hadamard(q));
    });

    auto* cmd_double = app.add_subcommand("double", "double a skew-Hadamard matrix");
    cmd_double->add_option("-i,--input", in_path, "input .shm path")->required();
    cmd_double->add_option("-o,--output", out_path, "output .shm path")->required();
    cmd_double->callback([&] {
        verb = "double";
        save_sign_matrix(out_path, doubling(load_sign_matrix(in_path)));
    });

    auto* cmd_extract = app.add_subcommand(
        "extract", "normalize a skew-Hadamard matrix and extract its class-2 association scheme");
    cmd_extract->add_option("-i,--input", in_path, "input .shm path")->required();
    cmd_extract->add_option("-o,--output", out_path, "output .asc path")->required();
    cmd_extract->callback([&] {
        verb = "extract";
        save_scheme(out_path, scheme_from_skew_hadamard(normalize(load_sign_matrix(in_path))));
    });

    auto* cmd_doubled = app.add_subcommand("doubled", "double a non-symmetric class-2 scheme");
    cmd_doubled->add_option("-i,--input", in_path, "input .asc path")->required();
    cmd_doubled->add_option("-o,--output", out_path, "output .asc path")->required();
    cmd_doubled->callback([&] {
        verb = "doubled";
        save_scheme(out_path, doubled_scheme(load_scheme(in_path)));
    });

    auto* cmd_verify = app.add_subcommand("verify", "check the scheme axioms and the class-2 products");
    cmd_verify->add_option("-i,--input", in_path, "input .asc path")->required();
    cmd_verify->callback([&] {
        verb = "verify";
        const AssociationScheme x = load_scheme(in_path);
        SchemeVerification ver = [&] {
            try {
                return verify_scheme_axioms(x.relations());
            } catch (const axiom_error& e) {
                out << "axioms: FAIL (" << e.what() << ")\n";
                code = 1;
                throw;
            }
        }();
        out << "axioms: PASS classes=" << x.class_count()
            << " symmetric=" << (ver.symmetric ? "true" : "false")
            << " commutative=" << (ver.commutative ? "true" : "false") << "\n";
        if (x.is_nonsymmetric_class2() && x.order() % 4 == 3) {
            if (verify_class2_products(x)) {
                out << "class2_products: PASS\n";
            } else {
                out << "class2_products: FAIL\n";
                code = 1;
            }
        } else {
            out << "class2_products: SKIP (not a non-symmetric class-2 scheme)\n";
        }
    });

    auto* cmd_nu = app.add_subcommand("nu", "enumerate triple intersection numbers");
    cmd_nu->add_option("-i,--input", in_path, "input .asc path")->required();
    cmd_nu->add_flag("--assert-lemma1", assert_lemma1,
                     "require the doubled-scheme extremal characterization: max nu = (n-2)/2 exactly "
                     "on the triples (a, n, n+a)");
    cmd_nu->callback([&] {
        verb = "nu";
        const AssociationScheme y = load_verified_scheme(in_path);
        if (assert_lemma1) {
            const NuExtremesCheck c = nu_extremes(y);
            write_nu_report(out, c.report);
            out << "check_max: " << (c.max_ok ? "PASS" : "FAIL") << " expected=" << c.expected_max << "\n";
            out << "check_extremal_set: " << (c.extremal_ok ? "PASS" : "FAIL")
                << " expected_count=" << (c.report.order + 1) / 2 - 1 << "\n";
            out << "check_through_center: " << (c.through_center_ok ? "PASS" : "FAIL")
                << " expected=" << c.expected_through_center << "\n";
            if (!c.all_ok()) code = 1;
        } else {
            write_nu_report(out, nu_survey(y));
        }
    });

    auto* cmd_aut = app.add_subcommand("aut", "compute the automorphism group");
    cmd_aut->add_option("-i,--input", in_path, "input .asc path")->required();
    cmd_aut->callback([&] {
        verb = "aut";
        const AssociationScheme x = load_verified_scheme(in_path);
        const PermutationGroup g = automorphism_group(x);
        write_permutation_group(out, g);
        out << "order " << group_order(g) << "\n";
        const auto parts = orbits(g);
        out << "orbits " << parts.size() << "\n";
        for (const auto& orbit : parts) {
            for (std::size_t i = 0; i < orbit.size(); ++i) {
                if (i) out << ' ';
                out << orbit[i];
            }
            out << "\n";
        }
    });

    auto* cmd_schurian = app.add_subcommand("schurian", "decide whether the scheme is schurian");
    cmd_schurian->add_option("-i,--input", in_path, "input .asc path")->required();
    cmd_schurian->callback([&] {
        verb = "schurian";
        const SchurianVerdict v = is_schurian(load_verified_scheme(in_path));
        out << "schurian: " << (v.is_schurian ? "true" : "false") << "\n";
        out << "reason: " << to_string(v.reason) << "\n";
        out << "orbital_classes: " << v.orbital_class_count << "\n";
        out << "aut_order: " << v.aut_order << "\n";
        if (!v.is_schurian) code = 1;
    });

    auto* cmd_theorem = app.add_subcommand(
        "theorem", "verify the full doubling pipeline: intransitive automorphism group, "
                   "restriction isomorphism, non-schurian verdict");
    cmd_theorem->add_option("-i,--input", in_path, "input .asc path")->required();
    cmd_theorem->callback([&] {
        verb = "theorem";
        const TheoremReport report = verify_main_theorem(load_verified_scheme(in_path));
        out << report.to_text();
        if (!report.verified) code = 1;
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int cli_code = app.exit(e, out, err);
        return cli_code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        err << verb << ": format error: " << e.what() << "\n";
        return 2;
    } catch (const axiom_error& e) {
        if (code == 1) return 1;  // `verify` already printed its verdict
        err << verb << ": precondition: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << verb << ": error: " << e.what() << "\n";
        return 2;
    }
    return code;
}

}  // namespace skewhad::cli
