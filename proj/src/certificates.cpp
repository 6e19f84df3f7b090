#include "cubic/certificates.hpp"

#include <algorithm>
#include <sstream>

#include "cubic/parse.hpp"
#include "cubic/symbols.hpp"

namespace cubic::certs {

using tower::BaseKind;
using tower::ClassVector;
using tower::MonomialElement;
using tower::TowerField;

namespace {

constexpr const char* kToken = "(x+jy)/(x+y)";

}  // namespace

// ---------------------------------------------------------------------------
// enum <-> string
// ---------------------------------------------------------------------------

std::string to_string(Method m) {
    switch (m) {
        case Method::RealComponents: return "real";
        case Method::QuadricPair: return "quadric-pair";
        case Method::FiberedQuadric: return "fibered";
        case Method::Diagonal: return "diagonal";
        case Method::DiagonalPAdic: return "diagonal-padic";
    }
    return "?";
}

Method method_from_string(const std::string& s) {
    if (s == "real") return Method::RealComponents;
    if (s == "quadric-pair") return Method::QuadricPair;
    if (s == "fibered") return Method::FiberedQuadric;
    if (s == "diagonal") return Method::Diagonal;
    if (s == "diagonal-padic") return Method::DiagonalPAdic;
    throw domain_error("unknown certificate method: " + s);
}

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::NotUniversallyCH0Trivial: return "NotUniversallyCH0Trivial";
        case Conclusion::NotRetractRational: return "NotRetractRational";
    }
    return "?";
}

Conclusion conclusion_from_string(const std::string& s) {
    if (s == "NotUniversallyCH0Trivial") return Conclusion::NotUniversallyCH0Trivial;
    if (s == "NotRetractRational") return Conclusion::NotRetractRational;
    throw domain_error("unknown conclusion: " + s);
}

std::string to_string(AxiomName a) {
    switch (a) {
        case AxiomName::ManinBaseCase: return "ManinBaseCase";
        case AxiomName::MilnorLemma13: return "MilnorLemma13";
        case AxiomName::SpecializationLemma42: return "SpecializationLemma42";
        case AxiomName::HoffmannNoRationalMap: return "HoffmannNoRationalMap";
        case AxiomName::SpringerIndex: return "SpringerIndex";
        case AxiomName::ChowSpecialization: return "ChowSpecialization";
        case AxiomName::EhresmannStability: return "EhresmannStability";
        case AxiomName::MerkurjevCH0: return "MerkurjevCH0";
    }
    return "?";
}

AxiomName axiom_from_string(const std::string& s) {
    if (s == "ManinBaseCase") return AxiomName::ManinBaseCase;
    if (s == "MilnorLemma13") return AxiomName::MilnorLemma13;
    if (s == "SpecializationLemma42") return AxiomName::SpecializationLemma42;
    if (s == "HoffmannNoRationalMap") return AxiomName::HoffmannNoRationalMap;
    if (s == "SpringerIndex") return AxiomName::SpringerIndex;
    if (s == "ChowSpecialization") return AxiomName::ChowSpecialization;
    if (s == "EhresmannStability") return AxiomName::EhresmannStability;
    if (s == "MerkurjevCH0") return AxiomName::MerkurjevCH0;
    throw domain_error("unknown axiom name: " + s);
}

// ---------------------------------------------------------------------------
// json
// ---------------------------------------------------------------------------

Json ObstructionCertificate::to_json() const {
    Json checks_json = Json::array();
    for (const auto& c : checks) {
        checks_json.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"data", c.data}});
    }
    Json axioms_json = Json::array();
    for (const auto& a : axioms) {
        axioms_json.push_back(Json{{"name", to_string(a.name)},
                                   {"variant", a.variant},
                                   {"statement", a.statement},
                                   {"hypothesis", a.hypothesis}});
    }
    return Json{{"version", version},
                {"method", to_string(method)},
                {"field", field.to_text()},
                {"N", ambient_dim},
                {"equation", equation},
                {"witness", witness},
                {"checks", checks_json},
                {"axioms", axioms_json},
                {"conclusion", to_string(conclusion)}};
}

ObstructionCertificate ObstructionCertificate::from_json(const Json& j) {
    ObstructionCertificate c;
    c.version = j.at("version").get<int>();
    c.method = method_from_string(j.at("method").get<std::string>());
    c.field = parse::parse_field(j.at("field").get<std::string>());
    c.ambient_dim = j.at("N").get<int>();
    c.equation = j.at("equation").get<std::string>();
    c.witness = j.at("witness");
    for (const auto& cj : j.at("checks")) {
        c.checks.push_back(CheckResult{cj.at("name").get<std::string>(),
                                       cj.at("passed").get<bool>(), cj.at("data")});
    }
    for (const auto& aj : j.at("axioms")) {
        c.axioms.push_back(Axiom{axiom_from_string(aj.at("name").get<std::string>()),
                                 aj.at("variant").get<std::string>(),
                                 aj.at("statement").get<std::string>(), aj.at("hypothesis")});
    }
    c.conclusion = conclusion_from_string(j.at("conclusion").get<std::string>());
    return c;
}

// ---------------------------------------------------------------------------
// shared builder helpers
// ---------------------------------------------------------------------------

namespace {

std::string wrap(const MonomialElement& m) { return "(" + m.to_text() + ")"; }

std::string diagonal_equation(const MonomialElement& a, bool with_pi,
                              const std::vector<std::string>& chain) {
    std::string eq = "x^3 + y^3 + z^3 + " + wrap(a) + "*w^3";
    if (with_pi) eq += " + (pi)*t0^3";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        eq += " + (" + chain[i] + ")*t" + std::to_string(i + 1) + "^3";
    }
    return eq + " = 0";
}

std::string diagonal_divisor_relation(const MonomialElement& a, bool with_pi,
                                      const std::vector<std::string>& chain) {
    std::string rel = "1 + " + wrap(a) + "*(w/z)^3";
    if (with_pi) rel += " + (pi)*(t0/z)^3";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        rel += " + (" + chain[i] + ")*(t" + std::to_string(i + 1) + "/z)^3";
    }
    return rel + " = 0";
}

Json class_to_json(const ClassVector& cv) {
    Json coords = Json::array();
    for (int c : cv.coords) coords.push_back(c);
    return coords;
}

CheckResult make_check(std::string name, bool passed, Json data) {
    return CheckResult{std::move(name), passed, std::move(data)};
}

// Fresh outer variable for the methods that extend k by one Laurent layer.
std::string pick_extension_variable(const TowerField& k, const std::string& requested) {
    if (!requested.empty()) {
        if (requested == "u" || requested == "pi") {
            throw domain_error("variable name '" + requested + "' is reserved");
        }
        if (k.has_variable(requested)) {
            throw domain_error("extension variable '" + requested + "' already in the tower");
        }
        return requested;
    }
    if (!k.has_variable("t")) return "t";
    for (int i = 2;; ++i) {
        std::string name = "t" + std::to_string(i);
        if (!k.has_variable(name)) return name;
    }
}

// Common core of the two diagonal builders.
ObstructionCertificate build_diagonal_core(const TowerField& field, const MonomialElement& a_raw,
                                           unsigned n, bool padic) {
    field.base.validate();
    if (padic) {
        if (field.base.kind != BaseKind::PAdic) {
            throw precondition_error("diagonal-padic requires a p-adic base");
        }
        if (field.base.p == 3) {
            throw unsupported_error("residue characteristic 3 is unsupported");
        }
    }
    field.base.require_admissible(3);
    MonomialElement a = a_raw.normalized_for(field);

    // The chain sits directly above the minimal sub-tower containing a;
    // variables beyond the chain are padding handled by specialization.
    std::size_t below = a.highest_variable_position(field);
    if (padic) {
        if (a.pi_exp() != 0 || a.involves_variables()) {
            throw hypothesis_error("a must be a unit of the p-adic base, got " + a.to_text());
        }
        below = 0;
    }
    if (below + n > field.height()) {
        throw hypothesis_error("not enough tower variables above a: requested chain length " +
                               std::to_string(n) + ", available " +
                               std::to_string(field.height() - below));
    }
    TowerField k0 = field.prefix(below);
    std::vector<std::string> chain(field.variables.begin() + static_cast<long>(below),
                                   field.variables.begin() + static_cast<long>(below + n));
    std::vector<std::string> padding(field.variables.begin() + static_cast<long>(below + n),
                                     field.variables.end());

    // (i) a has a nonzero class, i.e. is not a cube over k0.
    ClassVector a_class = tower::class_of(a, k0, 3);
    if (a_class.is_zero()) {
        throw hypothesis_error("a is a cube over " + k0.to_text() + ": " + a.to_text());
    }

    // (ii) the full symbol is nonzero over F.
    std::vector<ClassVector> symbol_classes;
    symbol_classes.push_back(tower::class_of(a, field, 3));
    if (padic) {
        symbol_classes.push_back(tower::class_of(MonomialElement::uniformizer(), field, 3));
    }
    for (const auto& v : chain) {
        symbol_classes.push_back(tower::class_of(MonomialElement::variable(v), field, 3));
    }
    symbols::CohomologyClass full = symbols::symbol(field, 3, symbol_classes);
    if (full.is_zero()) {
        throw hypothesis_error("the symbol of (a" + std::string(padic ? ", pi" : "") +
                               ", chain) vanishes");
    }

    // (iii) residue chain: specialize through the padding, then peel the
    // chain variables outermost-in.
    Json steps = Json::array();
    symbols::CohomologyClass current = full;
    for (std::size_t i = padding.size(); i-- > 0;) {
        symbols::CohomologyClass next = symbols::specialize(current, padding[i]);
        if (next.is_zero()) throw hypothesis_error("padding specialization vanished");
        steps.push_back(Json{{"kind", "specialize"},
                             {"variable", padding[i]},
                             {"class_before", current.to_text()},
                             {"class_after", next.to_text()}});
        current = next;
    }
    for (std::size_t i = chain.size(); i-- > 0;) {
        symbols::CohomologyClass next = symbols::residue(current, chain[i]);
        if (next.is_zero()) throw hypothesis_error("residue chain step vanished at " + chain[i]);
        steps.push_back(Json{{"kind", "residue"},
                             {"variable", chain[i]},
                             {"class_before", current.to_text()},
                             {"class_after", next.to_text()}});
        current = next;
    }

    ObstructionCertificate cert;
    cert.method = padic ? Method::DiagonalPAdic : Method::Diagonal;
    cert.field = field;
    cert.ambient_dim = static_cast<int>(n) + (padic ? 4 : 3);
    cert.equation = diagonal_equation(a, padic, chain);
    cert.witness = Json{{"a", a.to_text()}, {"n", n}};
    cert.conclusion = Conclusion::NotUniversallyCH0Trivial;

    cert.checks.push_back(make_check(
        "a-nonzero-class", true,
        Json{{"field", k0.to_text()}, {"a", a.to_text()}, {"class", class_to_json(a_class)}}));
    Json witness_monomials = Json::array();
    for (const auto& m : symbols::nonvanishing_witness(full)) witness_monomials.push_back(m);
    cert.checks.push_back(make_check("symbol-nonvanishing", true,
                                     Json{{"symbol", full.to_text()},
                                          {"witness_monomials", witness_monomials}}));
    cert.checks.push_back(make_check("residue-chain", true,
                                     Json{{"steps", steps},
                                          {"final_field", k0.to_text()},
                                          {"final_class", current.to_text()}}));

    std::string base_equation =
        padic ? "x^3 + y^3 + z^3 + " + wrap(a) + "*w^3 + (pi)*t0^3 = 0"
              : "x^3 + y^3 + z^3 + " + wrap(a) + "*w^3 = 0";
    cert.axioms.push_back(Axiom{
        AxiomName::ManinBaseCase,
        padic ? "padic" : "",
        std::string("the class of the cup product of ") + kToken + " with the base chain is "
            "unramified and nonconstant on the base diagonal cubic",
        Json{{"base_field", k0.to_text()},
             {"a", a.to_text()},
             {"token", kToken},
             {"base_equation", base_equation}}});
    cert.axioms.push_back(Axiom{
        AxiomName::MilnorLemma13,
        "",
        "a relation 1 + b*s^3 + sum c_i*s_i^3 = 0 over the divisor function field kills the "
        "symbol (b, c_1, ..., c_m)",
        Json{{"divisor", "x+y=0"},
             {"twin_divisor", "x+jy=0"},
             {"relation", diagonal_divisor_relation(a, padic, chain)}}});
    if (!padding.empty()) {
        Json padding_json = Json::array();
        for (const auto& v : padding) padding_json.push_back(v);
        cert.axioms.push_back(Axiom{
            AxiomName::SpecializationLemma42,
            "padding",
            "a variety that is not universally CH0-trivial over F stays so over F((t))",
            Json{{"padding_variables", padding_json}}});
    }
    return cert;
}

}  // namespace

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

ObstructionCertificate build_diagonal_certificate(const TowerField& field,
                                                  const MonomialElement& a, unsigned n) {
    return build_diagonal_core(field, a, n, false);
}

ObstructionCertificate build_diagonal_padic_certificate(const TowerField& field,
                                                        const MonomialElement& a, unsigned n) {
    return build_diagonal_core(field, a, n, true);
}

quadforms::PfisterForm canonical_anisotropic_pfister(const TowerField& k, unsigned lexp) {
    quadforms::PfisterForm phi{k, {}};
    std::size_t from_base = 0;
    switch (k.base.kind) {
        case BaseKind::Real:
            for (unsigned i = 0; i < lexp; ++i) {
                phi.slots.push_back(MonomialElement::from_rational(-1));
            }
            return phi;
        case BaseKind::Complex:
            from_base = 0;
            break;
        case BaseKind::Finite:
            phi.slots.push_back(MonomialElement::generator_u());
            from_base = 1;
            break;
        case BaseKind::PAdic:
            phi.slots.push_back(MonomialElement::generator_u());
            phi.slots.push_back(MonomialElement::uniformizer());
            from_base = 2;
            break;
    }
    if (lexp < from_base) {
        phi.slots.resize(lexp);
        return phi;
    }
    std::size_t need = lexp - from_base;
    if (need > k.height()) {
        throw hypothesis_error("tower too small for an anisotropic form of dimension 2^" +
                               std::to_string(lexp) + " over " + k.to_text());
    }
    for (std::size_t i = 0; i < need; ++i) {
        phi.slots.push_back(MonomialElement::variable(k.variables[i]));
    }
    return phi;
}

ObstructionCertificate build_quadric_pair_witness(const TowerField& k, unsigned lexp,
                                                  const std::string& t_name) {
    if (lexp < 2) {
        throw precondition_error("quadric-pair requires lexp >= 2 (ambient dimension >= 4)");
    }
    if (lexp > 30) throw precondition_error("lexp too large");
    auto u = quadforms::u_invariant(k);
    unsigned long long dim = 1ull << lexp;
    if (u && dim > *u) {
        throw hypothesis_error("no anisotropic form of dimension " + std::to_string(dim) +
                               " over " + k.to_text() + " (u-invariant " +
                               quadforms::u_invariant_to_text(u) + ")");
    }
    quadforms::PfisterForm phi = canonical_anisotropic_pfister(k, lexp);
    quadforms::DiagonalQuadraticForm q = quadforms::expand_pfister(phi);
    if (!quadforms::is_anisotropic(q)) {
        throw hypothesis_error("canonical form unexpectedly isotropic over " + k.to_text());
    }
    std::string t = pick_extension_variable(k, t_name);
    TowerField field = k.extend(t);

    std::string qprime = "x0^2";
    for (std::size_t i = 0; i < q.coefficients.size(); ++i) {
        qprime += " + " + wrap(q.coefficients[i]) + "*x" + std::to_string(i + 1) + "^2";
    }
    std::string num_vars = std::to_string(dim);

    ObstructionCertificate cert;
    cert.method = Method::QuadricPair;
    cert.field = field;
    cert.ambient_dim = static_cast<int>(dim);
    cert.equation = "(" + qprime + ")*x0 + " + t + "*Psi(x0,...,x" + num_vars + ") = 0";
    cert.witness = Json{{"lexp", lexp}, {"t", t}};
    cert.conclusion = Conclusion::NotUniversallyCH0Trivial;

    cert.checks.push_back(make_check("u-invariant-bound", true,
                                     Json{{"u_invariant", quadforms::u_invariant_to_text(u)},
                                          {"required_dimension", dim}}));
    cert.checks.push_back(
        make_check("q-anisotropic", true,
                   Json{{"q", q.to_text()}, {"phi", phi.to_text()}, {"field", k.to_text()}}));
    // Any k-point of the hyperplane x0=0 off the quadric q=0 lifts by Hensel;
    // (0,1,0,...,0) works because the first coefficient of q is nonzero.
    cert.checks.push_back(make_check(
        "special-fiber-rational-point", true,
        Json{{"point", "(0,1,0,...,0)"}, {"q_value", q.coefficients.front().to_text()}}));

    cert.axioms.push_back(Axiom{
        AxiomName::HoffmannNoRationalMap,
        "",
        "no rational map exists from the quadric of q' = <1> + q to the quadric of q when q "
        "is anisotropic of 2-power dimension",
        Json{{"dim_q", dim}, {"dim_q_prime", dim + 1}, {"q", q.to_text()}}});
    cert.axioms.push_back(Axiom{
        AxiomName::SpringerIndex,
        "",
        "a quadric with a zero-cycle of degree 1 has a rational point",
        Json{{"quadric", "q = 0 over the function field of the q'-quadric"}}});
    cert.axioms.push_back(Axiom{
        AxiomName::ChowSpecialization,
        "two-divisor-specialization",
        "universal CH0-triviality of the generic fiber forces CH0(Z) -> CH0(Y1) surjective "
        "after base change when the special fiber is Y1 + Y2",
        Json{{"special_fiber", "(q')*x0 = 0"},
             {"Y1", "q' = 0"},
             {"Y2", "x0 = 0"},
             {"Z", "q = 0 inside Y2"}}});
    return cert;
}

ObstructionCertificate build_fibered_quadric_witness(const TowerField& k,
                                                     const quadforms::PfisterForm& phi_in,
                                                     const MonomialElement& rho_in, unsigned m,
                                                     const std::string& t_name) {
    quadforms::PfisterForm phi = phi_in;
    phi.field = k;
    phi.validate();
    MonomialElement rho = rho_in.normalized_for(k);
    if (phi.slot_count() > 30) throw precondition_error("pfister form too large");
    unsigned long long cap = 1ull << phi.slot_count();
    if (m < 2 || m > cap) {
        throw precondition_error("m must satisfy 2 <= m <= 2^" +
                                 std::to_string(phi.slot_count()) + ", got " +
                                 std::to_string(m));
    }

    quadforms::DiagonalQuadraticForm expansion = quadforms::expand_pfister(phi);
    if (!quadforms::is_anisotropic(expansion)) {
        throw hypothesis_error("phi is isotropic over " + k.to_text() + ": " + phi.to_text());
    }
    if (quadforms::pfister_represents(phi, rho)) {
        throw hypothesis_error("rho represented by phi: " + rho.to_text() + " in " +
                               phi.to_text());
    }
    quadforms::DiagonalQuadraticForm q{
        k, {expansion.coefficients.begin(),
            expansion.coefficients.begin() + static_cast<std::ptrdiff_t>(m)}};
    if (!quadforms::is_pfister_subform_syntactic(q, phi) || !quadforms::is_anisotropic(q)) {
        throw hypothesis_error("chosen subform failed its checks");
    }

    std::string t = pick_extension_variable(k, t_name);
    TowerField field = k.extend(t);

    std::string qtext;
    for (std::size_t i = 0; i < q.coefficients.size(); ++i) {
        if (i) qtext += " + ";
        qtext += wrap(q.coefficients[i]) + "*x" + std::to_string(i + 1) + "^2";
    }

    ObstructionCertificate cert;
    cert.method = Method::FiberedQuadric;
    cert.field = field;
    cert.ambient_dim = static_cast<int>(m) + 1;
    cert.equation = "(" + qtext + ")*v - u*(u - v)*(u - " + wrap(rho) + "*v) + " + t +
                    "*Psi(x1,...,x" + std::to_string(m) + ",u,v) = 0";
    cert.witness = Json{{"phi", phi.to_text()}, {"rho", rho.to_text()}, {"m", m}, {"t", t}};
    cert.conclusion = Conclusion::NotRetractRational;

    cert.checks.push_back(make_check(
        "pfister-anisotropic", true,
        Json{{"phi", phi.to_text()}, {"expansion", expansion.to_text()}, {"field", k.to_text()}}));
    cert.checks.push_back(make_check("rho-not-represented", true,
                                     Json{{"rho", rho.to_text()}, {"phi", phi.to_text()}}));
    cert.checks.push_back(make_check(
        "subform-anisotropic", true,
        Json{{"q", q.to_text()}, {"dimension", m}, {"syntactic_subform_of", phi.to_text()}}));
    cert.checks.push_back(make_check("evaluation-points", true,
                                     Json{{"A", "(0,...,0,1,1)"},
                                          {"B", "(0,...,0," + rho.to_text() + ",1)"},
                                          {"value_at_A", "1"},
                                          {"value_at_B", rho.to_text()}}));

    cert.axioms.push_back(Axiom{
        AxiomName::ChowSpecialization,
        "singular-model-requiv-transport",
        "for anisotropic q the singular locus u=v=q=0 has no rational point; R-equivalence "
        "transports through the quadric-bundle model, where evaluating the coordinate u "
        "against the Pfister value-group quotient separates the two marked points",
        Json{{"q_anisotropic", true},
             {"singular_locus", "u = v = 0, q = 0"},
             {"value_at_A", "1"},
             {"value_at_B", rho.to_text()},
             {"rho_outside_value_group", true}}});
    cert.axioms.push_back(Axiom{
        AxiomName::SpecializationLemma42,
        "r-equivalence",
        "R-equivalence specializes through a proper model over the power-series ring",
        Json{{"model_equation", cert.equation},
             {"special_fiber",
              "(" + qtext + ")*v - u*(u - v)*(u - " + wrap(rho) + "*v) = 0"}}});
    return cert;
}

ObstructionCertificate build_real_witness(unsigned n, const std::string& subfield_note) {
    if (n < 2) throw precondition_error("the real construction requires n >= 2");
    realtopo::RationalCubicPolynomial f =
        realtopo::RationalCubicPolynomial::from_coefficients(0, -1, 0, 1);  // u^3 - u
    realtopo::ComponentReport report = realtopo::components_report(n, f);
    if (report.components != 2) {
        throw hypothesis_error("expected two real components, found " +
                               std::to_string(report.components));
    }
    quadforms::DiagonalQuadraticForm sum_of_squares{
        TowerField(tower::BaseField::real(), {}),
        std::vector<MonomialElement>(n, MonomialElement::one())};
    if (!quadforms::is_anisotropic(sum_of_squares)) {
        throw hypothesis_error("sum of squares unexpectedly isotropic over R");
    }

    std::string xsum, xcubes;
    for (unsigned i = 1; i <= n; ++i) {
        if (i > 1) {
            xsum += " + ";
            xcubes += " + ";
        }
        xsum += "x" + std::to_string(i) + "^2";
        xcubes += "x" + std::to_string(i) + "^3";
    }
    std::string smoothing = xcubes + " + u^3 + v^3";

    ObstructionCertificate cert;
    cert.method = Method::RealComponents;
    cert.field = TowerField(tower::BaseField::real(), {});
    cert.ambient_dim = static_cast<int>(n) + 1;
    cert.equation = "(" + xsum + ")*v - u*(u - v)*(u + v) + t*S = 0";
    cert.witness = Json{{"n", n},
                        {"f", f.to_text()},
                        {"subfield", subfield_note.empty() ? "any subfield of R"
                                                           : subfield_note}};
    cert.conclusion = Conclusion::NotUniversallyCH0Trivial;

    cert.checks.push_back(
        make_check("squarefree-cubic", true, Json{{"f", f.to_text()}}));
    Json intervals = Json::array();
    for (const auto& s : report.intervals) intervals.push_back(s);
    cert.checks.push_back(make_check("two-components", true,
                                     Json{{"components", report.components},
                                          {"intervals", intervals}}));
    cert.checks.push_back(make_check(
        "singular-locus-pointfree", true,
        Json{{"singular_locus", "u = v = 0, x1^2 + ... + xn^2 = 0"},
             {"reason", "the sum of squares is anisotropic over R"}}));

    cert.axioms.push_back(Axiom{
        AxiomName::EhresmannStability,
        "",
        "for t close to 0 the real points of the deformed cubic are diffeomorphic to those "
        "of the central fiber, keeping the component count",
        Json{{"deformation", "central + t*S"}, {"S", smoothing}}});
    cert.axioms.push_back(Axiom{
        AxiomName::MerkurjevCH0,
        "real-components",
        "a universally CH0-trivial smooth projective real variety has nonempty connected "
        "real locus",
        Json{{"components", report.components}}});
    return cert;
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

namespace {

// First differing path between two json values, empty when equal.
std::optional<std::string> first_difference(const Json& a, const Json& b,
                                            const std::string& path) {
    if (a == b) return std::nullopt;
    if (a.type() != b.type()) return path;
    if (a.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key())) return path + "/" + it.key();
            if (auto d = first_difference(it.value(), b.at(it.key()), path + "/" + it.key())) {
                return d;
            }
        }
        for (auto it = b.begin(); it != b.end(); ++it) {
            if (!a.contains(it.key())) return path + "/" + it.key();
        }
        return path;
    }
    if (a.is_array()) {
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (auto d = first_difference(a[i], b[i], path + "/" + std::to_string(i))) return d;
        }
        return path + "/" + std::to_string(n);
    }
    return path;
}

ObstructionCertificate rebuild(const ObstructionCertificate& c) {
    switch (c.method) {
        case Method::Diagonal: {
            MonomialElement a = parse::parse_monomial(c.witness.at("a").get<std::string>());
            unsigned n = c.witness.at("n").get<unsigned>();
            return build_diagonal_certificate(c.field, a, n);
        }
        case Method::DiagonalPAdic: {
            MonomialElement a = parse::parse_monomial(c.witness.at("a").get<std::string>());
            unsigned n = c.witness.at("n").get<unsigned>();
            return build_diagonal_padic_certificate(c.field, a, n);
        }
        case Method::FiberedQuadric: {
            std::string t = c.witness.at("t").get<std::string>();
            if (c.field.variables.empty() || c.field.variables.back() != t) {
                throw hypothesis_error("field does not end with the recorded deformation "
                                       "variable " + t);
            }
            TowerField k = c.field.drop_outermost();
            quadforms::PfisterForm phi =
                parse::parse_pfister(c.witness.at("phi").get<std::string>(), k);
            MonomialElement rho = parse::parse_monomial(c.witness.at("rho").get<std::string>());
            unsigned m = c.witness.at("m").get<unsigned>();
            return build_fibered_quadric_witness(k, phi, rho, m, t);
        }
        case Method::QuadricPair: {
            std::string t = c.witness.at("t").get<std::string>();
            if (c.field.variables.empty() || c.field.variables.back() != t) {
                throw hypothesis_error("field does not end with the recorded deformation "
                                       "variable " + t);
            }
            TowerField k = c.field.drop_outermost();
            unsigned lexp = c.witness.at("lexp").get<unsigned>();
            return build_quadric_pair_witness(k, lexp, t);
        }
        case Method::RealComponents: {
            unsigned n = c.witness.at("n").get<unsigned>();
            std::string note = c.witness.value("subfield", "");
            ObstructionCertificate r = build_real_witness(n, note);
            if (c.field != r.field) throw hypothesis_error("real certificate field mismatch");
            return r;
        }
    }
    throw domain_error("unknown certificate method");
}

}  // namespace

Verdict verify_certificate(const ObstructionCertificate& certificate) {
    try {
        if (certificate.version != 1) {
            return Verdict::invalid("unsupported certificate version " +
                                    std::to_string(certificate.version));
        }
        for (const auto& check : certificate.checks) {
            if (!check.passed) {
                return Verdict::invalid("stored check '" + check.name + "' is marked failed");
            }
        }
        for (const auto& axiom : certificate.axioms) {
            if (axiom.hypothesis.is_null()) {
                return Verdict::invalid("axiom " + to_string(axiom.name) +
                                        " carries no hypothesis record");
            }
        }
        ObstructionCertificate reference = rebuild(certificate);
        auto diff = first_difference(certificate.to_json(), reference.to_json(), "");
        if (diff) {
            return Verdict::invalid("certificate does not match its recomputation at '" +
                                    *diff + "'");
        }
        return Verdict::ok();
    } catch (const cubic::error& e) {
        return Verdict::invalid(e.what());
    } catch (const Json::exception& e) {
        return Verdict::invalid(std::string("malformed certificate: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// survey
// ---------------------------------------------------------------------------

SurveyTable survey(tower::BaseKind base, unsigned height) {
    if (base != BaseKind::Complex && base != BaseKind::PAdic) {
        throw unsupported_error("survey supports Complex and PAdic bases only");
    }
    if (height > 30) throw precondition_error("tower height too large for the survey");
    SurveyTable table;
    table.base = base;
    table.height = height;

    auto range_set = [](int lo, long long hi) {
        std::set<int> s;
        for (long long v = lo; v <= hi; ++v) s.insert(static_cast<int>(v));
        return s;
    };
    auto powers_of_two = [](long long cap) {
        std::set<int> s;
        for (int l = 2; (1ll << l) <= cap; ++l) s.insert(static_cast<int>(1ll << l));
        return s;
    };

    if (base == BaseKind::Complex) {
        std::set<int> classical = height >= 1 ? std::set<int>{3} : std::set<int>{};
        std::set<int> qp = height >= 1 ? powers_of_two(1ll << (height - 1)) : std::set<int>{};
        std::set<int> fib =
            height >= 2 ? range_set(3, (1ll << (height - 2)) + 1) : std::set<int>{};
        std::set<int> diag = height >= 1 ? range_set(3, height + 2) : std::set<int>{};
        table.methods = {{"classical", classical},
                         {"quadric-pair", qp},
                         {"fibered", fib},
                         {"diagonal", diag}};
    } else {
        std::set<int> qp = powers_of_two(1ll << (height + 1));
        std::set<int> fib = range_set(3, (1ll << height) + 1);
        std::set<int> diag = range_set(4, height + 4);
        std::set<int> cited{4};
        table.methods = {{"quadric-pair", qp},
                         {"fibered", fib},
                         {"diagonal-padic", diag},
                         {"cited-padic", cited}};
    }

    for (const auto& [name, values] : table.methods) {
        (void)name;
        table.union_set.insert(values.begin(), values.end());
    }
    table.max_covered = table.union_set.empty() ? 0 : *table.union_set.rbegin();
    for (int v = 3; v < table.max_covered; ++v) {
        if (!table.union_set.contains(v)) table.open_below_max.push_back(v);
    }
    return table;
}

Json SurveyTable::to_json() const {
    Json methods_json = Json::object();
    for (const auto& [name, values] : methods) {
        Json arr = Json::array();
        for (int v : values) arr.push_back(v);
        methods_json[name] = arr;
    }
    Json union_json = Json::array();
    for (int v : union_set) union_json.push_back(v);
    Json open_json = Json::array();
    for (int v : open_below_max) open_json.push_back(v);
    return Json{{"base", base == BaseKind::Complex ? "complex" : "padic"},
                {"n", height},
                {"methods", methods_json},
                {"union", union_json},
                {"open_below_max", open_json},
                {"max_covered", max_covered}};
}

namespace {

std::string join_ints(const std::set<int>& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out.empty() ? "-" : out;
}

}  // namespace

std::string SurveyTable::to_text() const {
    std::ostringstream os;
    os << "ambient dimensions N with a certified non-rational cubic, base "
       << (base == BaseKind::Complex ? "complex" : "padic") << ", tower height " << height
       << "\n";
    for (const auto& [name, values] : methods) {
        os << "  " << name << ": " << join_ints(values) << "\n";
    }
    os << "  union: " << join_ints(union_set) << "\n";
    os << "  open: ";
    bool first = true;
    for (int v : open_below_max) {
        os << (first ? "" : ", ") << v;
        first = false;
    }
    if (max_covered > 0) {
        os << (first ? "" : " and ") << "N > " << max_covered;
    } else {
        os << "all N >= 3";
    }
    os << "\n";
    return os.str();
}

}  // namespace cubic::certs
