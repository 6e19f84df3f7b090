#pragma once

#include <string>

#include "cubic/quadforms.hpp"
#include "cubic/realtopo.hpp"
#include "cubic/tower.hpp"

namespace cubic::parse {

// Grammar (see docs/formats.md):
//   field    := ("C" | "R" | "Fq(" int ")" | "Qp(" int ";" int ")") ("[[" name "]]")*
//   monomial := ["-"] factor ("*" factor)*
//   factor   := rational | ident ("^" int)?       ident: variable, "u", "pi"
//   form     := "<" monomial ("," monomial)* ">"
//   pfister  := "<<" [monomial ("," monomial)*] ">>"
//   cubic    := polynomial in u with rational coefficients, e.g. "u^3 - u"
// All parsers consume the whole input and throw parse_error with a 1-based
// column on failure.  print/parse round-trips on canonical forms.

tower::TowerField parse_field(const std::string& text);

tower::MonomialElement parse_monomial(const std::string& text);

quadforms::DiagonalQuadraticForm parse_form(const std::string& text,
                                            const tower::TowerField& field);

quadforms::PfisterForm parse_pfister(const std::string& text, const tower::TowerField& field);

realtopo::RationalCubicPolynomial parse_cubic(const std::string& text);

Rational parse_rational(const std::string& text);

// "error: <msg>\n  <input>\n  ^ at 1:<col>" style diagnostic for CLIs.
std::string format_parse_error(const std::string& input, const cubic::parse_error& err);

}  // namespace cubic::parse
