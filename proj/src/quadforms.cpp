#include "cubic/quadforms.hpp"

#include <algorithm>

namespace cubic::quadforms {

using tower::BaseKind;
using tower::MonomialElement;
using tower::TowerField;

namespace {

void require_decidable_base(const tower::BaseField& base) {
    switch (base.kind) {
        case BaseKind::Complex:
        case BaseKind::Real:
            return;
        case BaseKind::Finite:
            if (base.characteristic() == 2) {
                throw unsupported_error("quadratic forms over characteristic-2 base");
            }
            return;
        case BaseKind::PAdic:
            if (base.p == 2) {
                throw unsupported_error("quadratic forms over dyadic p-adic base");
            }
            return;
    }
}

// Square class (0 or 1) of a base unit value * u^uexp for Finite/PAdic
// residue fields of odd cardinality q.
int finite_square_bit(const tower::BaseField& base, const Rational& unit, long long uexp) {
    std::int64_t p = base.kind == BaseKind::PAdic ? base.p : base.characteristic();
    BigInt num = numerator(unit) % p;
    BigInt den = denominator(unit) % p;
    std::int64_t n = static_cast<std::int64_t>(((num % p) + p) % p);
    std::int64_t d = static_cast<std::int64_t>(((den % p) + p) % p);
    if (n == 0 || d == 0) throw domain_error("unit not invertible in the residue field");
    std::int64_t dinv = tower::mod_pow(d, p - 2, p);
    std::int64_t v = static_cast<std::int64_t>((static_cast<unsigned __int128>(n) * dinv) % p);
    int bit = tower::is_power_residue(v, base.q, 2) ? 0 : 1;
    // The canonical generator u is a non-square by definition.
    return (bit + static_cast<int>(((uexp % 2) + 2) % 2)) % 2;
}

bool base_anisotropic_finite(const tower::BaseField& base,
                             const std::vector<MonomialElement>& coeffs) {
    if (coeffs.size() <= 1) return true;
    if (coeffs.size() >= 3) return false;  // Chevalley-Warning
    MonomialElement prod = coeffs[0] * coeffs[1];
    return finite_square_bit(base, -prod.unit(), prod.u_exp()) == 1;
}

bool recurse_anisotropic(const TowerField& field, std::vector<MonomialElement> coeffs);

bool base_anisotropic(const tower::BaseField& base, const std::vector<MonomialElement>& coeffs) {
    switch (base.kind) {
        case BaseKind::Complex:
            return coeffs.size() <= 1;
        case BaseKind::Real: {
            if (coeffs.empty()) return true;
            int s = sign_of(coeffs.front().unit());
            return std::all_of(coeffs.begin(), coeffs.end(), [s](const MonomialElement& c) {
                return sign_of(c.unit()) == s;
            });
        }
        case BaseKind::Finite:
            return base_anisotropic_finite(base, coeffs);
        case BaseKind::PAdic: {
            // One more Springer split along the p-adic valuation: unit part
            // and uniformizer part are forms over the residue field.
            tower::BaseField residue = tower::BaseField::finite(base.q);
            std::vector<MonomialElement> unit_part, pi_part;
            for (const auto& c : coeffs) {
                long long e = c.pi_exp();
                MonomialElement r =
                    MonomialElement::from_rational(c.unit()) *
                    MonomialElement::generator_u(c.u_exp());
                (((e % 2) + 2) % 2 == 0 ? unit_part : pi_part).push_back(r);
            }
            return base_anisotropic_finite(residue, unit_part) &&
                   base_anisotropic_finite(residue, pi_part);
        }
    }
    return false;
}

bool recurse_anisotropic(const TowerField& field, std::vector<MonomialElement> coeffs) {
    if (field.variables.empty()) return base_anisotropic(field.base, coeffs);
    const std::string v = field.variables.back();
    TowerField sub = field.drop_outermost();
    std::vector<MonomialElement> even, odd;
    for (const auto& c : coeffs) {
        long long e = c.exponent_of(v);
        (((e % 2) + 2) % 2 == 0 ? even : odd).push_back(c.with_variable_cleared(v));
    }
    return recurse_anisotropic(sub, std::move(even)) && recurse_anisotropic(sub, std::move(odd));
}

}  // namespace

void DiagonalQuadraticForm::validate() const {
    require_decidable_base(field.base);
    for (const auto& c : coefficients) c.normalized_for(field);
}

std::string DiagonalQuadraticForm::to_text() const {
    std::string s = "<";
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (i) s += ",";
        s += coefficients[i].to_text();
    }
    return s + ">";
}

void PfisterForm::validate() const {
    require_decidable_base(field.base);
    for (const auto& a : slots) a.normalized_for(field);
}

std::string PfisterForm::to_text() const {
    std::string s = "<<";
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) s += ",";
        s += slots[i].to_text();
    }
    return s + ">>";
}

DiagonalQuadraticForm expand_pfister(const PfisterForm& phi) {
    phi.validate();
    const std::size_t m = phi.slots.size();
    if (m > 20) throw precondition_error("pfister expansion too large");
    DiagonalQuadraticForm q{phi.field, {}};
    q.coefficients.reserve(std::size_t{1} << m);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        MonomialElement entry = MonomialElement::one();
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (std::size_t{1} << i)) entry = entry * phi.slots[i].negated();
        }
        q.coefficients.push_back(entry.normalized_for(phi.field));
    }
    return q;
}

std::pair<DiagonalQuadraticForm, DiagonalQuadraticForm> springer_split(
    const DiagonalQuadraticForm& q) {
    q.validate();
    if (q.field.variables.empty()) {
        throw precondition_error("springer split needs a tower variable");
    }
    const std::string v = q.field.variables.back();
    TowerField sub = q.field.drop_outermost();
    DiagonalQuadraticForm q1{sub, {}}, q2{sub, {}};
    for (const auto& c : q.coefficients) {
        long long e = c.exponent_of(v);
        MonomialElement cleared = c.with_variable_cleared(v);
        (((e % 2) + 2) % 2 == 0 ? q1 : q2).coefficients.push_back(cleared);
    }
    return {q1, q2};
}

bool is_anisotropic(const DiagonalQuadraticForm& q) {
    q.validate();
    std::vector<MonomialElement> coeffs;
    coeffs.reserve(q.coefficients.size());
    for (const auto& c : q.coefficients) coeffs.push_back(c.normalized_for(q.field));
    return recurse_anisotropic(q.field, std::move(coeffs));
}

std::optional<unsigned long long> u_invariant(const tower::TowerField& field) {
    require_decidable_base(field.base);
    std::optional<unsigned long long> u;
    switch (field.base.kind) {
        case BaseKind::Complex: u = 1; break;
        case BaseKind::Real: u = std::nullopt; break;
        case BaseKind::Finite: u = 2; break;
        case BaseKind::PAdic: u = 4; break;
    }
    if (!u) return u;
    for (std::size_t i = 0; i < field.height(); ++i) {
        if (*u > (1ull << 62)) throw precondition_error("u-invariant overflow");
        *u *= 2;
    }
    return u;
}

std::string u_invariant_to_text(const std::optional<unsigned long long>& u) {
    return u ? std::to_string(*u) : "inf";
}

bool pfister_represents(const PfisterForm& phi, const tower::MonomialElement& rho) {
    rho.normalized_for(phi.field);
    DiagonalQuadraticForm expanded = expand_pfister(phi);
    if (!is_anisotropic(expanded)) return true;  // N_phi = F*
    DiagonalQuadraticForm probe = expanded;
    probe.coefficients.push_back(rho.negated().normalized_for(phi.field));
    return !is_anisotropic(probe);
}

SquareSignature square_signature(const tower::MonomialElement& x, const TowerField& field) {
    require_decidable_base(field.base);
    MonomialElement m = x.normalized_for(field);
    SquareSignature sig;
    switch (field.base.kind) {
        case BaseKind::Complex:
            sig.unit_bit = 0;
            break;
        case BaseKind::Real:
            sig.unit_bit = m.unit() < 0 ? 1 : 0;
            break;
        case BaseKind::Finite:
            sig.unit_bit = finite_square_bit(field.base, m.unit(), m.u_exp());
            break;
        case BaseKind::PAdic:
            sig.unit_bit = finite_square_bit(field.base, m.unit(), m.u_exp());
            sig.pi_bit = static_cast<int>(((m.pi_exp() % 2) + 2) % 2);
            break;
    }
    for (const auto& name : field.variables) {
        int bit = static_cast<int>(((m.exponent_of(name) % 2) + 2) % 2);
        if (bit) sig.var_bits.emplace_back(name, bit);
    }
    return sig;
}

bool is_pfister_subform_syntactic(const DiagonalQuadraticForm& q, const PfisterForm& phi) {
    q.validate();
    DiagonalQuadraticForm expanded = expand_pfister(phi);
    if (q.dimension() > expanded.dimension()) return false;

    std::vector<SquareSignature> want, have;
    for (const auto& c : q.coefficients) want.push_back(square_signature(c, q.field));
    for (const auto& c : expanded.coefficients) have.push_back(square_signature(c, phi.field));

    // Bipartite matching (augmenting paths) of q entries onto distinct
    // expansion entries with equal signatures.
    std::vector<int> matched_to(have.size(), -1);
    std::vector<char> visited;
    auto try_match = [&](auto&& self, std::size_t qi) -> bool {
        for (std::size_t e = 0; e < have.size(); ++e) {
            if (visited[e] || !(want[qi] == have[e])) continue;
            visited[e] = 1;
            if (matched_to[e] < 0 || self(self, static_cast<std::size_t>(matched_to[e]))) {
                matched_to[e] = static_cast<int>(qi);
                return true;
            }
        }
        return false;
    };
    for (std::size_t qi = 0; qi < want.size(); ++qi) {
        visited.assign(have.size(), 0);
        if (!try_match(try_match, qi)) return false;
    }
    return true;
}

}  // namespace cubic::quadforms
