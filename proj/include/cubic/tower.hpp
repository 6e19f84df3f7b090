#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubic/errors.hpp"
#include "cubic/rational.hpp"

namespace cubic::tower {

enum class BaseKind { Complex, Real, Finite, PAdic };

std::string to_string(BaseKind kind);

/// Base field of a Laurent tower.  Finite fields are described by their
/// cardinality q (a prime power); p-adic fields by the residue characteristic
/// p and the residue cardinality q = p^k, taken unramified so that p itself
/// serves as the uniformizer.
struct BaseField {
    BaseKind kind = BaseKind::Complex;
    std::int64_t q = 0;  // Finite / PAdic: residue cardinality
    std::int64_t p = 0;  // PAdic: residue characteristic

    static BaseField complex();
    static BaseField real();
    static BaseField finite(std::int64_t q);
    static BaseField padic(std::int64_t p, std::int64_t q);

    // Throws domain_error when the descriptor is malformed (q not a prime
    // power, p not prime, q not a power of p).
    void validate() const;

    // Characteristic of the base field (0 for Complex/Real/PAdic).
    std::int64_t characteristic() const;

    // True when ell is invertible and the base contains the ell-th roots of
    // unity: Complex always, Real only ell=2, Finite ell | q-1,
    // PAdic ell | q-1 and ell != p.
    bool admits(int ell) const;
    void require_admissible(int ell) const;  // admissibility_error otherwise

    std::string to_text() const;  // canonical descriptor, e.g. "Fq(7)"

    bool operator==(const BaseField&) const = default;
};

/// F = k((v1))((v2))...((vn)); variables listed innermost first.
struct TowerField {
    BaseField base;
    std::vector<std::string> variables;

    TowerField() = default;
    TowerField(BaseField base_, std::vector<std::string> variables_);

    std::size_t height() const { return variables.size(); }
    bool has_variable(const std::string& name) const;
    std::size_t variable_index(const std::string& name) const;  // throws domain_error

    // The sub-tower with the outermost variable removed.
    TowerField drop_outermost() const;
    // The sub-tower keeping only the first `count` variables.
    TowerField prefix(std::size_t count) const;
    // The tower extended outward by one fresh variable.
    TowerField extend(const std::string& name) const;

    std::string to_text() const;  // e.g. "C[[l1]][[l2]]"

    bool operator==(const TowerField&) const = default;
};

/// A nonzero element of monomial shape c * u^a * pi^b * prod v_i^{e_i}.
/// `unit` is an exact rational; `u_exp` counts the canonical generator of the
/// (residue) unit classes for Finite/PAdic bases; `pi_exp` counts the
/// uniformizer for PAdic bases.  Variables are kept sparsely by name.
class MonomialElement {
public:
    MonomialElement() : unit_(1) {}

    static MonomialElement from_rational(const Rational& value);
    static MonomialElement variable(const std::string& name, long long exponent = 1);
    static MonomialElement generator_u(long long exponent = 1);
    static MonomialElement uniformizer(long long exponent = 1);
    static MonomialElement one() { return MonomialElement(); }

    const Rational& unit() const { return unit_; }
    long long u_exp() const { return u_exp_; }
    long long pi_exp() const { return pi_exp_; }
    const std::map<std::string, long long>& variable_exponents() const { return vars_; }
    long long exponent_of(const std::string& name) const;

    MonomialElement operator*(const MonomialElement& other) const;
    MonomialElement negated() const;
    MonomialElement power(long long e) const;
    MonomialElement with_variable_cleared(const std::string& name) const;

    bool is_one() const;
    bool involves_variables() const { return !vars_.empty(); }
    // Highest tower position (1-based) among the element's variables, 0 if none.
    std::size_t highest_variable_position(const TowerField& field) const;

    // Checks the element makes sense over `field`: variables all present,
    // u/pi parts only where the base supports them, unit nonzero in the
    // residue field.  For PAdic bases the p-valuation of the rational unit is
    // folded into pi_exp by normalized_for().
    void validate_for(const TowerField& field) const;
    MonomialElement normalized_for(const TowerField& field) const;

    std::string to_text() const;  // canonical, e.g. "3*l1^2*l2^-1"

    bool operator==(const MonomialElement&) const = default;

private:
    Rational unit_;
    long long u_exp_ = 0;
    long long pi_exp_ = 0;
    std::map<std::string, long long> vars_;  // no zero exponents stored
};

/// Coordinates of a class in F*/F*^ell over Z/ell.  Basis order: base
/// generators first (Finite: u; PAdic: u then pi; Real(ell=2): -1), then the
/// tower variables innermost first.
struct ClassVector {
    int ell = 0;
    std::vector<int> coords;

    bool is_zero() const;
    ClassVector operator+(const ClassVector& other) const;  // shape-checked

    bool operator==(const ClassVector&) const = default;
};

// Number of base generators of k*/k*^ell for an admissible pair.
std::size_t base_class_dim(const BaseField& base, int ell);

// d = base_class_dim + height.  Throws admissibility_error when the base
// does not admit ell.
std::size_t class_dim(const TowerField& field, int ell);

// Names of the H^1 generators in ClassVector basis order ("u", "pi", "-1",
// then the variable names).  Used for printing cohomology classes.
std::vector<std::string> class_generator_names(const TowerField& field, int ell);

// Reduction of x to its class vector in F*/F*^ell.
ClassVector class_of(const MonomialElement& x, const TowerField& field, int ell);

bool is_lth_power(const MonomialElement& x, const TowerField& field, int ell);

// ---- finite-field helpers (shared with quadforms) ----

bool is_prime(std::int64_t n);
// Writes p and k such that n = p^k; false when n is not a prime power > 1.
bool is_prime_power(std::int64_t n, std::int64_t* p_out = nullptr, int* k_out = nullptr);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);

// Is the integer v (living in the prime subfield of F_q, q = p^k) an ell-th
// power in F_q?  Requires gcd(v, p) = 1 and ell | q-1.
bool is_power_residue(std::int64_t v, std::int64_t q, int ell);

// Smallest positive integer representative that is not an ell-th power in
// F_q; 0 when no integer representative generates (possible only for
// non-prime q).  Requires ell | q-1.
std::int64_t canonical_generator(std::int64_t q, int ell);

// Class exponent e in [0, ell) with v ~ u^e modulo ell-th powers, for the
// canonical generator u.  Throws domain_error when v is not classifiable
// (cannot happen for prime q).
int finite_class_exponent(std::int64_t v, std::int64_t q, int ell);

}  // namespace cubic::tower
