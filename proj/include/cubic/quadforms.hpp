#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic/errors.hpp"
#include "cubic/tower.hpp"

namespace cubic::quadforms {

/// Diagonal quadratic form <c1,...,cn> over a tower field with base of
/// characteristic != 2.  Coefficients are monomial elements; the empty form
/// (dimension 0) appears as a residue of Springer splitting and is vacuously
/// anisotropic.
struct DiagonalQuadraticForm {
    tower::TowerField field;
    std::vector<tower::MonomialElement> coefficients;

    std::size_t dimension() const { return coefficients.size(); }
    void validate() const;  // coefficients nonzero and defined over `field`
    std::string to_text() const;  // "<c1,c2,...>"
};

/// Pfister form <<a1,...,am>>, the tensor product of the binary forms
/// <1,-ai>.  The expansion has dimension 2^m.
struct PfisterForm {
    tower::TowerField field;
    std::vector<tower::MonomialElement> slots;

    std::size_t slot_count() const { return slots.size(); }
    void validate() const;
    std::string to_text() const;  // "<<a1,...,am>>"
};

// Diagonal entries: products of -ai over all slot subsets, in binary subset
// order (empty product first).
DiagonalQuadraticForm expand_pfister(const PfisterForm& phi);

// Splits q over F'((v)) at the outermost variable v into (q1, q2) over F'
// with q ~ q1 + v*q2: after clearing squares of v, even v-exponents go to
// q1 and odd ones, one factor v removed, to q2.
std::pair<DiagonalQuadraticForm, DiagonalQuadraticForm> springer_split(
    const DiagonalQuadraticForm& q);

// Recursive Springer decision.  Base cases: Complex dim <= 1; Real all signs
// equal; Finite(odd) dim <= 2 with -(c1*c2) a non-square; PAdic(odd p) one
// more Springer split into the residue field.
bool is_anisotropic(const DiagonalQuadraticForm& q);

// nullopt encodes an infinite u-invariant (Real base).  Doubles per tower
// variable from the base values C:1, R:inf, Finite:2, PAdic:4.
std::optional<unsigned long long> u_invariant(const tower::TowerField& field);

std::string u_invariant_to_text(const std::optional<unsigned long long>& u);

// Value-group membership: an isotropic Pfister form represents everything;
// an anisotropic one represents rho iff expansion + <-rho> is isotropic.
bool pfister_represents(const PfisterForm& phi, const tower::MonomialElement& rho);

// Sufficient syntactic criterion: every coefficient of q matches a distinct
// diagonal entry of the expansion up to squares (variable exponents mod 2,
// base-unit classes mod squares).
bool is_pfister_subform_syntactic(const DiagonalQuadraticForm& q, const PfisterForm& phi);

// Square-class signature used by the syntactic subform test; exposed for
// tests.  bit 0 of `unit_bit` is the residue/sign class, pi parity separate.
struct SquareSignature {
    int unit_bit = 0;
    int pi_bit = 0;
    std::vector<std::pair<std::string, int>> var_bits;  // nonzero parities only
    bool operator==(const SquareSignature&) const = default;
};

SquareSignature square_signature(const tower::MonomialElement& x,
                                 const tower::TowerField& field);

}  // namespace cubic::quadforms
