#pragma once

#include <map>
#include <string>
#include <vector>

#include "cubic/errors.hpp"
#include "cubic/tower.hpp"

namespace cubic::symbols {

/// An opaque degree-1 generator representing a function-field class that is
/// not in F*/F*^ell, e.g. "(x+jy)/(x+y)".  Tokens are carried verbatim: they
/// wedge like any generator and survive residues at tower variables.
struct GeometricToken {
    std::string label;
    bool operator==(const GeometricToken&) const = default;
    auto operator<=>(const GeometricToken&) const = default;
};

/// Element of H^m(F, Z/ell) for odd ell, in exterior-monomial normal form.
/// Generators 0..base_gens-1 are the base-unit generators, then the tower
/// variables innermost first, then the geometric tokens (sorted by label).
/// Terms map strictly increasing index tuples to coefficients in (0, ell).
class CohomologyClass {
public:
    CohomologyClass(int ell, std::vector<std::string> tower_gens, std::size_t base_gens,
                    std::vector<std::string> tokens, int degree);

    static CohomologyClass zero(int ell, std::vector<std::string> tower_gens,
                                std::size_t base_gens, int degree);

    int ell() const { return ell_; }
    int degree() const { return degree_; }
    std::size_t base_gens() const { return base_gens_; }
    const std::vector<std::string>& tower_gens() const { return tower_gens_; }
    const std::vector<std::string>& tokens() const { return tokens_; }
    std::size_t generator_count() const { return tower_gens_.size() + tokens_.size(); }
    const std::map<std::vector<int>, int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    void add_term(const std::vector<int>& monomial, int coefficient);
    std::string generator_name(int index) const;

    std::string to_text() const;  // canonical, e.g. "1*(u^l1^l2) + 2*(l1^l3)"

    bool operator==(const CohomologyClass&) const = default;

private:
    int ell_;
    std::vector<std::string> tower_gens_;  // base generators then variables
    std::size_t base_gens_;
    std::vector<std::string> tokens_;
    int degree_;
    std::map<std::vector<int>, int> terms_;
};

// Degree-1 class attached to a ClassVector (plus optional tokens occupying
// the reserved indices).  All vectors must share (ell, dim).
CohomologyClass symbol(const tower::TowerField& field, int ell,
                       const std::vector<tower::ClassVector>& classes,
                       const std::vector<GeometricToken>& tokens = {});

// Graded-alternating bilinear product in normal form.
CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b);

// Residue at the outermost tower variable v: deletes v from each monomial
// containing it, with sign (-1)^(number of generators listed after v); drops
// the other monomials.  The result lives over the sub-tower without v.
CohomologyClass residue(const CohomologyClass& a, const std::string& variable);

// Complementary projection: keeps exactly the monomials not containing v.
CohomologyClass specialize(const CohomologyClass& a, const std::string& variable);

// Embeds a class over F' into F'((variable)): together with residue and
// specialize this realizes H^m(F) = H^m(F') + H^(m-1)(F').
CohomologyClass lift(const CohomologyClass& a, const std::string& variable);

bool is_zero(const CohomologyClass& a);

// The surviving monomials, printed (empty for the zero class).
std::vector<std::string> nonvanishing_witness(const CohomologyClass& a);

}  // namespace cubic::symbols
