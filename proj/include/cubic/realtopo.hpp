#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubic/errors.hpp"
#include "cubic/rational.hpp"

namespace cubic::realtopo {

/// Univariate polynomial of degree <= 3 with exact rational coefficients,
/// stored low degree first.
class RationalCubicPolynomial {
public:
    RationalCubicPolynomial() = default;
    explicit RationalCubicPolynomial(std::vector<Rational> coefficients);

    static RationalCubicPolynomial from_coefficients(const Rational& c0, const Rational& c1,
                                                     const Rational& c2, const Rational& c3);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return coeffs_.empty(); }
    Rational leading() const;

    Rational evaluate(const Rational& x) const;
    RationalCubicPolynomial derivative() const;
    bool is_squarefree() const;  // gcd(f, f') constant
    bool is_monic_cubic() const;

    std::string to_text() const;  // e.g. "u^3 - u"

    bool operator==(const RationalCubicPolynomial&) const = default;

private:
    std::vector<Rational> coeffs_;  // normalized: no trailing zeros
};

/// Half-open interval (lo, hi]; absent endpoints mean -inf / +inf.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    static Interval whole() { return {}; }
};

// Number of distinct real roots of f in the half-open interval, by Sturm
// chain sign-variation counts in exact rational arithmetic.  Throws
// domain_error on the zero polynomial.
unsigned real_root_count(const RationalCubicPolynomial& f, const Interval& interval = {});

// A real root, either exactly rational or bracketed by a rational isolating
// interval (lo, hi) with f(lo)*f(hi) < 0.
struct RootDescription {
    std::optional<Rational> exact;
    Rational lo;
    Rational hi;
    std::string to_text() const;
};

// Distinct real roots of f in increasing order, isolated by Sturm bisection.
// Rational roots are reported exactly.
std::vector<RootDescription> isolate_real_roots(const RationalCubicPolynomial& f);

// Connected components of the real projective hypersurface
// sum_{i<=n} x_i^2 * v = homogenized f(u), for monic squarefree cubic f and
// n >= 2: two when f has three real roots (a bounded piece where f >= 0
// between the lower roots, plus the unbounded piece closed up through the
// points at infinity), one when f has a single real root.  Throws
// singular_model_error when f is not squarefree.
unsigned components_count(unsigned n, const RationalCubicPolynomial& f);

/// Report of the nonnegativity intervals backing the component count.
struct ComponentReport {
    unsigned components = 0;
    std::vector<std::string> intervals;  // e.g. "[-1, 0]", "[1, +inf) (closed up at infinity)"
};

ComponentReport components_report(unsigned n, const RationalCubicPolynomial& f);

}  // namespace cubic::realtopo
