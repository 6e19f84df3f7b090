#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubic/quadforms.hpp"
#include "cubic/realtopo.hpp"
#include "cubic/tower.hpp"

namespace cubic::certs {

using Json = nlohmann::json;

enum class Method {
    RealComponents,   // two real components of a perturbed cubic
    QuadricPair,      // quadric-plus-hyperplane special fiber
    FiberedQuadric,   // quadric bundle over the line, R-equivalence evaluation
    Diagonal,         // diagonal cubic over a Laurent tower
    DiagonalPAdic,    // diagonal cubic with a uniformizer term
};

enum class Conclusion {
    NotUniversallyCH0Trivial,
    NotRetractRational,
};

enum class AxiomName {
    ManinBaseCase,
    MilnorLemma13,
    SpecializationLemma42,
    HoffmannNoRationalMap,
    SpringerIndex,
    ChowSpecialization,
    EhresmannStability,
    MerkurjevCH0,
};

std::string to_string(Method m);
Method method_from_string(const std::string& s);
std::string to_string(Conclusion c);
Conclusion conclusion_from_string(const std::string& s);
std::string to_string(AxiomName a);
AxiomName axiom_from_string(const std::string& s);

/// A cited external statement together with the syntactic data it is applied
/// to; the verifier re-derives the hypothesis record from the witness data
/// and compares.
struct Axiom {
    AxiomName name;
    std::string variant;   // distinguishes several uses of one statement
    std::string statement; // human-readable form of what is being assumed
    Json hypothesis;       // syntactic application data, re-checked
};

struct CheckResult {
    std::string name;
    bool passed = false;
    Json data;  // recomputable payload (classes, monomials, chain steps, ...)
};

struct ObstructionCertificate {
    int version = 1;
    Method method = Method::Diagonal;
    tower::TowerField field;  // field of definition of the cubic
    int ambient_dim = 0;      // N: the cubic lives in P^N
    std::string equation;     // canonical equation string
    Json witness;             // structured inputs the verifier recomputes from
    std::vector<CheckResult> checks;
    std::vector<Axiom> axioms;
    Conclusion conclusion = Conclusion::NotUniversallyCH0Trivial;

    Json to_json() const;  // sorted keys, canonical monomial order: byte-stable
    static ObstructionCertificate from_json(const Json& j);
};

struct Verdict {
    bool valid = false;
    std::string reason;  // empty for Valid
    static Verdict ok() { return {true, ""}; }
    static Verdict invalid(std::string why) { return {false, std::move(why)}; }
};

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

// Diagonal cubic x^3+y^3+z^3+a*w^3 + sum lambda_i t_i^3 over F.  The chain
// uses the n innermost tower variables above the sub-tower generated by `a`;
// any remaining outer variables are padding handled by the specialization
// axiom.  N = n+3.
ObstructionCertificate build_diagonal_certificate(const tower::TowerField& field,
                                                  const tower::MonomialElement& a,
                                                  unsigned n);

// p-adic variant with a uniformizer term pi*t0^3; chain (a, pi, lambda_i);
// N = n+4.  Requires residue characteristic p != 3 and a unit non-cube a.
ObstructionCertificate build_diagonal_padic_certificate(const tower::TowerField& field,
                                                        const tower::MonomialElement& a,
                                                        unsigned n);

// Quadric bundle method over k((t)): q(x)v = u(u-v)(u-rho*v) with q the
// first m diagonal entries of the Pfister expansion.  N = m+1; conclusion
// NotRetractRational.  `t_name` picks the fresh outer variable, default "t"
// (suffixed when taken).
ObstructionCertificate build_fibered_quadric_witness(const tower::TowerField& k,
                                                     const quadforms::PfisterForm& phi,
                                                     const tower::MonomialElement& rho,
                                                     unsigned m,
                                                     const std::string& t_name = "");

// Quadric-plus-hyperplane special fiber q'(x)*x0 over k((t)), with q the
// canonical anisotropic form of dimension 2^lexp over k.  N = 2^lexp.
ObstructionCertificate build_quadric_pair_witness(const tower::TowerField& k, unsigned lexp,
                                                  const std::string& t_name = "");

// Real cubic sum x_i^2 v = u(u-v)(u+v) with two real components; valid over
// any subfield of R.  N = n+1.
ObstructionCertificate build_real_witness(unsigned n, const std::string& subfield_note = "");

// Recomputes every mechanical check from the witness data, re-matches each
// axiom hypothesis against its required syntactic pattern and confirms the
// conclusion follows the method template.  Failures are Invalid verdicts.
Verdict verify_certificate(const ObstructionCertificate& certificate);

// The canonical anisotropic 2^lexp-dimensional form used by the quadric-pair
// builder (Pfister expansion over base generators and tower variables).
quadforms::PfisterForm canonical_anisotropic_pfister(const tower::TowerField& k, unsigned lexp);

// ---------------------------------------------------------------------------
// survey
// ---------------------------------------------------------------------------

/// Admissible ambient dimensions per method over a height-n tower, their
/// union, and the explicitly open dimensions.
struct SurveyTable {
    tower::BaseKind base = tower::BaseKind::Complex;
    unsigned height = 0;
    std::vector<std::pair<std::string, std::set<int>>> methods;
    std::set<int> union_set;
    std::vector<int> open_below_max;  // gaps under the largest covered N
    int max_covered = 0;              // every N above it is open (0: none covered)

    Json to_json() const;
    std::string to_text() const;
};

SurveyTable survey(tower::BaseKind base, unsigned height);

}  // namespace cubic::certs
