// cubiccert: build and verify non-rationality obstruction certificates for
// smooth cubic hypersurfaces over iterated Laurent-series fields.
// See docs/formats.md for the input grammar, JSON schema and exit codes.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cubic/certificates.hpp"
#include "cubic/parse.hpp"

namespace {

using namespace cubic;

struct CliError {
    int code;
    std::string message;
};

void print_certificate(const certs::ObstructionCertificate& cert, bool as_json) {
    if (as_json) {
        std::cout << cert.to_json().dump(2) << "\n";
        return;
    }
    std::cout << "method:     " << certs::to_string(cert.method) << "\n";
    std::cout << "field:      " << cert.field.to_text() << "\n";
    std::cout << "N:          " << cert.ambient_dim << " (cubic in P^" << cert.ambient_dim
              << ")\n";
    std::cout << "equation:   " << cert.equation << "\n";
    std::cout << "checks:\n";
    for (const auto& check : cert.checks) {
        std::cout << "  [" << (check.passed ? "ok" : "FAIL") << "] " << check.name << "\n";
    }
    std::cout << "axioms:\n";
    for (const auto& axiom : cert.axioms) {
        std::cout << "  - " << certs::to_string(axiom.name);
        if (!axiom.variant.empty()) std::cout << " (" << axiom.variant << ")";
        std::cout << "\n";
    }
    std::cout << "conclusion: " << certs::to_string(cert.conclusion) << "\n";
}

// Runs a parser, turning position errors into caret-annotated diagnostics.
template <typename Fn>
auto with_diagnostic(const std::string& input, Fn&& fn) {
    try {
        return fn();
    } catch (const cubic::parse_error& e) {
        throw CliError{2, parse::format_parse_error(input, e)};
    }
}

tower::TowerField field_arg(const std::string& text) {
    return with_diagnostic(text, [&] { return parse::parse_field(text); });
}

int run(int argc, char** argv) {
    CLI::App app{"obstruction certificates for cubic hypersurfaces over Laurent towers"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    // ---- certificate ----
    auto* cert_cmd = app.add_subcommand("certificate", "build an obstruction certificate");
    cert_cmd->require_subcommand(1);

    std::string field_text, a_text, phi_text, rho_text;
    unsigned n_value = 0;
    unsigned m_value = 0;
    unsigned lexp_value = 0;

    auto* diag = cert_cmd->add_subcommand("diagonal", "diagonal cubic over a tower");
    diag->add_option("--field", field_text, "tower field, e.g. Fq(7)[[l1]][[l2]]")->required();
    diag->add_option("--a", a_text, "non-cube coefficient (monomial)")->required();
    diag->add_option("--n", n_value, "chain length")->required();

    auto* diagp = cert_cmd->add_subcommand("diagonal-padic",
                                           "diagonal cubic with a uniformizer term");
    diagp->add_option("--field", field_text, "tower with Qp base, e.g. Qp(7;7)[[l1]]")
        ->required();
    diagp->add_option("--a", a_text, "unit non-cube (monomial)")->required();
    diagp->add_option("--n", n_value, "chain length")->required();

    auto* fib = cert_cmd->add_subcommand("fibered", "quadric bundle over the line");
    fib->add_option("--field", field_text, "base tower k (the cubic lives over k((t)))")
        ->required();
    fib->add_option("--phi", phi_text, "anisotropic Pfister form, e.g. \"<<l1,l2>>\"")
        ->required();
    fib->add_option("--rho", rho_text, "value not represented by phi")->required();
    fib->add_option("--m", m_value, "quadratic form dimension, 2 <= m <= 2^slots")
        ->required();

    auto* qp = cert_cmd->add_subcommand("quadric-pair", "quadric-plus-hyperplane special fiber");
    qp->add_option("--field", field_text, "base tower k (the cubic lives over k((t)))")
        ->required();
    qp->add_option("--lexp", lexp_value, "N = 2^lexp, lexp >= 2")->required();

    auto* real = cert_cmd->add_subcommand("real", "two real components");
    real->add_option("--n", n_value, "number of squares, n >= 2")->required();

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "verify a certificate file");
    std::string verify_path;
    verify_cmd->add_option("file", verify_path, "certificate JSON file")->required();

    // ---- quadform ----
    auto* quadform_cmd = app.add_subcommand("quadform", "quadratic form queries");
    auto* aniso = quadform_cmd->add_subcommand("anisotropic", "decide anisotropy");
    std::string form_text;
    aniso->add_option("--field", field_text, "tower field")->required();
    aniso->add_option("--form", form_text, "diagonal form, e.g. \"<1,l1,l2,l1*l2>\"")
        ->required();

    // ---- pfister ----
    auto* pfister_cmd = app.add_subcommand("pfister", "Pfister form queries");
    auto* represents = pfister_cmd->add_subcommand("represents", "value-group membership");
    represents->add_option("--field", field_text, "tower field")->required();
    represents->add_option("--phi", phi_text, "Pfister form")->required();
    represents->add_option("--rho", rho_text, "candidate value (monomial)")->required();

    // ---- survey ----
    auto* survey_cmd = app.add_subcommand("survey", "ambient dimensions per method");
    std::string base_text;
    unsigned survey_n = 0;
    survey_cmd->add_option("--base", base_text, "complex or padic")->required();
    survey_cmd->add_option("--n", survey_n, "tower height")->required();

    // ---- real-components ----
    auto* comp_cmd = app.add_subcommand("real-components",
                                        "component count of sum x_i^2 * v = f(u) homogenized");
    std::string f_text;
    comp_cmd->add_option("--n", n_value, "number of squares, n >= 2")->required();
    comp_cmd->add_option("--f", f_text, "monic squarefree cubic, e.g. \"u^3-u\"")->required();

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        throw CliError{code == 0 ? 0 : 2, ""};
    }

    if (diag->parsed() || diagp->parsed()) {
        tower::TowerField field = field_arg(field_text);
        tower::MonomialElement a =
            with_diagnostic(a_text, [&] { return parse::parse_monomial(a_text); });
        auto cert = diag->parsed() ? certs::build_diagonal_certificate(field, a, n_value)
                                   : certs::build_diagonal_padic_certificate(field, a, n_value);
        print_certificate(cert, as_json);
        return 0;
    }
    if (fib->parsed()) {
        tower::TowerField k = field_arg(field_text);
        auto phi = with_diagnostic(phi_text, [&] { return parse::parse_pfister(phi_text, k); });
        auto rho = with_diagnostic(rho_text, [&] { return parse::parse_monomial(rho_text); });
        auto cert = certs::build_fibered_quadric_witness(k, phi, rho, m_value);
        print_certificate(cert, as_json);
        return 0;
    }
    if (qp->parsed()) {
        tower::TowerField k = field_arg(field_text);
        auto cert = certs::build_quadric_pair_witness(k, lexp_value);
        print_certificate(cert, as_json);
        return 0;
    }
    if (real->parsed()) {
        auto cert = certs::build_real_witness(n_value);
        print_certificate(cert, as_json);
        return 0;
    }
    if (verify_cmd->parsed()) {
        std::ifstream in(verify_path);
        if (!in) throw CliError{2, "cannot open " + verify_path};
        certs::Json j;
        try {
            in >> j;
        } catch (const certs::Json::exception& e) {
            throw CliError{2, "invalid JSON in " + verify_path + ": " + e.what()};
        }
        certs::ObstructionCertificate cert;
        try {
            cert = certs::ObstructionCertificate::from_json(j);
        } catch (const std::exception& e) {
            throw CliError{2, "malformed certificate: " + std::string(e.what())};
        }
        auto verdict = certs::verify_certificate(cert);
        if (as_json) {
            std::cout << certs::Json{{"valid", verdict.valid}, {"reason", verdict.reason}}
                             .dump(2)
                      << "\n";
        } else if (verdict.valid) {
            std::cout << "Valid\n";
        } else {
            std::cout << "Invalid: " << verdict.reason << "\n";
        }
        return verdict.valid ? 0 : 1;
    }
    if (aniso->parsed()) {
        tower::TowerField field = field_arg(field_text);
        auto q = with_diagnostic(form_text, [&] { return parse::parse_form(form_text, field); });
        bool result = quadforms::is_anisotropic(q);
        if (as_json) {
            std::cout << certs::Json{{"anisotropic", result}}.dump(2) << "\n";
        } else {
            std::cout << (result ? "true" : "false") << "\n";
        }
        return 0;
    }
    if (represents->parsed()) {
        tower::TowerField field = field_arg(field_text);
        auto phi = with_diagnostic(phi_text, [&] { return parse::parse_pfister(phi_text, field); });
        auto rho = with_diagnostic(rho_text, [&] { return parse::parse_monomial(rho_text); });
        bool result = quadforms::pfister_represents(phi, rho);
        if (as_json) {
            std::cout << certs::Json{{"represents", result}}.dump(2) << "\n";
        } else {
            std::cout << (result ? "true" : "false") << "\n";
        }
        return 0;
    }
    if (survey_cmd->parsed()) {
        tower::BaseKind base;
        if (base_text == "complex") {
            base = tower::BaseKind::Complex;
        } else if (base_text == "padic") {
            base = tower::BaseKind::PAdic;
        } else {
            throw CliError{2, "--base must be 'complex' or 'padic', got '" + base_text + "'"};
        }
        auto table = certs::survey(base, survey_n);
        if (as_json) {
            std::cout << table.to_json().dump(2) << "\n";
        } else {
            std::cout << table.to_text();
        }
        return 0;
    }
    if (comp_cmd->parsed()) {
        auto f = with_diagnostic(f_text, [&] { return parse::parse_cubic(f_text); });
        auto report = realtopo::components_report(n_value, f);
        if (as_json) {
            certs::Json intervals = certs::Json::array();
            for (const auto& s : report.intervals) intervals.push_back(s);
            std::cout << certs::Json{{"components", report.components},
                                     {"intervals", intervals}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << report.components << "\n";
            for (const auto& s : report.intervals) std::cout << "  " << s << "\n";
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        if (!e.message.empty()) std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const cubic::parse_error& e) {
        std::cerr << "error: " << e.what() << " at " << e.line << ":" << e.column << "\n";
        return 2;
    } catch (const cubic::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
