#include "cubic/tower.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cubic::tower {

std::string to_string(BaseKind kind) {
    switch (kind) {
        case BaseKind::Complex: return "Complex";
        case BaseKind::Real: return "Real";
        case BaseKind::Finite: return "Finite";
        case BaseKind::PAdic: return "PAdic";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// finite-field helpers
// ---------------------------------------------------------------------------

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_prime_power(std::int64_t n, std::int64_t* p_out, int* k_out) {
    if (n < 2) return false;
    std::int64_t p = n;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    std::int64_t m = n;
    int k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    if (mod <= 1) return 0;
    unsigned __int128 acc = 1;
    unsigned __int128 b = static_cast<unsigned __int128>(((base % mod) + mod) % mod);
    while (exp > 0) {
        if (exp & 1) acc = acc * b % static_cast<unsigned __int128>(mod);
        b = b * b % static_cast<unsigned __int128>(mod);
        exp >>= 1;
    }
    return static_cast<std::int64_t>(acc);
}

bool is_power_residue(std::int64_t v, std::int64_t q, int ell) {
    std::int64_t p = 0;
    int k = 0;
    if (!is_prime_power(q, &p, &k)) throw domain_error("not a prime power: " + std::to_string(q));
    if ((q - 1) % ell != 0) throw domain_error("ell does not divide q-1");
    std::int64_t r = ((v % p) + p) % p;
    if (r == 0) throw domain_error("zero residue has no power class");
    // v lies in the prime subfield, so its order divides p-1; reduce the
    // exponent (q-1)/ell accordingly before computing mod p.
    std::int64_t e = (q - 1) / ell;
    if (p > 2) e %= (p - 1);
    return mod_pow(r, e, p) == 1;
}

std::int64_t canonical_generator(std::int64_t q, int ell) {
    std::int64_t p = 0;
    int k = 0;
    if (!is_prime_power(q, &p, &k)) throw domain_error("not a prime power: " + std::to_string(q));
    std::int64_t limit = (k == 1) ? q : p;
    for (std::int64_t c = 2; c < limit; ++c) {
        if (!is_power_residue(c, q, ell)) return c;
    }
    return 0;
}

int finite_class_exponent(std::int64_t v, std::int64_t q, int ell) {
    if (is_power_residue(v, q, ell)) return 0;
    std::int64_t u = canonical_generator(q, ell);
    if (u == 0) throw domain_error("no integer generator available for the unit classes");
    std::int64_t p = 0;
    is_prime_power(q, &p, nullptr);
    std::int64_t r = ((v % p) + p) % p;
    for (int e = 1; e < ell; ++e) {
        // v ~ u^e  iff  v * u^(ell-e) is an ell-th power.
        std::int64_t rest = mod_pow(u, ell - e, p);
        std::int64_t probe = static_cast<std::int64_t>(
            (static_cast<unsigned __int128>(r) * rest) % p);
        if (is_power_residue(probe, q, ell)) return e;
    }
    throw domain_error("unit class not generated by the canonical generator");
}

// ---------------------------------------------------------------------------
// BaseField
// ---------------------------------------------------------------------------

BaseField BaseField::complex() { return BaseField{BaseKind::Complex, 0, 0}; }
BaseField BaseField::real() { return BaseField{BaseKind::Real, 0, 0}; }

BaseField BaseField::finite(std::int64_t q) {
    BaseField b{BaseKind::Finite, q, 0};
    is_prime_power(q, &b.p, nullptr);
    b.validate();
    return b;
}

BaseField BaseField::padic(std::int64_t p, std::int64_t q) {
    BaseField b{BaseKind::PAdic, q, p};
    b.validate();
    return b;
}

void BaseField::validate() const {
    switch (kind) {
        case BaseKind::Complex:
        case BaseKind::Real:
            return;
        case BaseKind::Finite: {
            if (!is_prime_power(q)) {
                throw domain_error("finite base cardinality must be a prime power, got " +
                                   std::to_string(q));
            }
            return;
        }
        case BaseKind::PAdic: {
            if (!is_prime(p)) {
                throw domain_error("p-adic residue characteristic must be prime, got " +
                                   std::to_string(p));
            }
            std::int64_t rp = 0;
            if (!is_prime_power(q, &rp, nullptr) || rp != p) {
                throw domain_error("p-adic residue cardinality must be a power of p");
            }
            return;
        }
    }
}

std::int64_t BaseField::characteristic() const {
    if (kind == BaseKind::Finite) {
        std::int64_t pp = 0;
        is_prime_power(q, &pp, nullptr);
        return pp;
    }
    return 0;
}

bool BaseField::admits(int ell) const {
    if (ell < 2 || !is_prime(ell)) return false;
    switch (kind) {
        case BaseKind::Complex: return true;
        case BaseKind::Real: return ell == 2;
        case BaseKind::Finite: return (q - 1) % ell == 0;
        case BaseKind::PAdic: return (q - 1) % ell == 0 && ell != p;
    }
    return false;
}

void BaseField::require_admissible(int ell) const {
    if (!admits(ell)) {
        throw admissibility_error("base field " + to_text() + " does not admit ell=" +
                                  std::to_string(ell));
    }
}

std::string BaseField::to_text() const {
    switch (kind) {
        case BaseKind::Complex: return "C";
        case BaseKind::Real: return "R";
        case BaseKind::Finite: return "Fq(" + std::to_string(q) + ")";
        case BaseKind::PAdic:
            return "Qp(" + std::to_string(p) + ";" + std::to_string(q) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// TowerField
// ---------------------------------------------------------------------------

TowerField::TowerField(BaseField base_, std::vector<std::string> variables_)
    : base(base_), variables(std::move(variables_)) {
    base.validate();
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw domain_error("empty tower variable name");
        if (v == "u" || v == "pi") {
            throw domain_error("variable name '" + v + "' is reserved for base generators");
        }
        if (!seen.insert(v).second) {
            throw domain_error("duplicate tower variable: " + v);
        }
    }
}

bool TowerField::has_variable(const std::string& name) const {
    return std::find(variables.begin(), variables.end(), name) != variables.end();
}

std::size_t TowerField::variable_index(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw domain_error("no such tower variable: " + name);
    return static_cast<std::size_t>(it - variables.begin());
}

TowerField TowerField::drop_outermost() const {
    if (variables.empty()) throw precondition_error("tower has no variables to drop");
    TowerField sub = *this;
    sub.variables.pop_back();
    return sub;
}

TowerField TowerField::prefix(std::size_t count) const {
    if (count > variables.size()) throw precondition_error("prefix longer than tower");
    TowerField sub = *this;
    sub.variables.resize(count);
    return sub;
}

TowerField TowerField::extend(const std::string& name) const {
    std::vector<std::string> vars = variables;
    vars.push_back(name);
    return TowerField(base, std::move(vars));
}

std::string TowerField::to_text() const {
    std::string s = base.to_text();
    for (const auto& v : variables) s += "[[" + v + "]]";
    return s;
}

// ---------------------------------------------------------------------------
// MonomialElement
// ---------------------------------------------------------------------------

MonomialElement MonomialElement::from_rational(const Rational& value) {
    if (value == 0) throw domain_error("zero is not a monomial field element");
    MonomialElement m;
    m.unit_ = value;
    return m;
}

MonomialElement MonomialElement::variable(const std::string& name, long long exponent) {
    MonomialElement m;
    if (exponent != 0) m.vars_[name] = exponent;
    return m;
}

MonomialElement MonomialElement::generator_u(long long exponent) {
    MonomialElement m;
    m.u_exp_ = exponent;
    return m;
}

MonomialElement MonomialElement::uniformizer(long long exponent) {
    MonomialElement m;
    m.pi_exp_ = exponent;
    return m;
}

long long MonomialElement::exponent_of(const std::string& name) const {
    auto it = vars_.find(name);
    return it == vars_.end() ? 0 : it->second;
}

MonomialElement MonomialElement::operator*(const MonomialElement& other) const {
    MonomialElement m;
    m.unit_ = unit_ * other.unit_;
    m.u_exp_ = u_exp_ + other.u_exp_;
    m.pi_exp_ = pi_exp_ + other.pi_exp_;
    m.vars_ = vars_;
    for (const auto& [name, e] : other.vars_) {
        long long sum = m.vars_[name] + e;
        if (sum == 0) {
            m.vars_.erase(name);
        } else {
            m.vars_[name] = sum;
        }
    }
    return m;
}

MonomialElement MonomialElement::negated() const {
    MonomialElement m = *this;
    m.unit_ = -m.unit_;
    return m;
}

MonomialElement MonomialElement::power(long long e) const {
    MonomialElement m;
    if (e >= 0) {
        m.unit_ = 1;
        for (long long i = 0; i < e; ++i) m.unit_ *= unit_;
    } else {
        m.unit_ = 1;
        for (long long i = 0; i < -e; ++i) m.unit_ /= unit_;
    }
    m.u_exp_ = u_exp_ * e;
    m.pi_exp_ = pi_exp_ * e;
    for (const auto& [name, ve] : vars_) {
        if (ve * e != 0) m.vars_[name] = ve * e;
    }
    return m;
}

MonomialElement MonomialElement::with_variable_cleared(const std::string& name) const {
    MonomialElement m = *this;
    m.vars_.erase(name);
    return m;
}

bool MonomialElement::is_one() const {
    return unit_ == 1 && u_exp_ == 0 && pi_exp_ == 0 && vars_.empty();
}

std::size_t MonomialElement::highest_variable_position(const TowerField& field) const {
    std::size_t top = 0;
    for (const auto& [name, e] : vars_) {
        (void)e;
        top = std::max(top, field.variable_index(name) + 1);
    }
    return top;
}

void MonomialElement::validate_for(const TowerField& field) const {
    if (unit_ == 0) throw domain_error("zero is not a monomial field element");
    for (const auto& [name, e] : vars_) {
        (void)e;
        if (!field.has_variable(name)) {
            throw domain_error("element mentions variable '" + name +
                               "' absent from " + field.to_text());
        }
    }
    switch (field.base.kind) {
        case BaseKind::Complex:
        case BaseKind::Real:
            if (u_exp_ != 0) throw shape_error("generator u has no meaning over " + field.base.to_text());
            if (pi_exp_ != 0) throw shape_error("uniformizer pi has no meaning over " + field.base.to_text());
            break;
        case BaseKind::Finite: {
            if (pi_exp_ != 0) throw shape_error("uniformizer pi has no meaning over " + field.base.to_text());
            std::int64_t p = field.base.characteristic();
            BigInt num = numerator(unit_);
            BigInt den = denominator(unit_);
            if (num % p == 0) throw domain_error("unit " + rational_to_string(unit_) +
                                                 " vanishes in the residue field");
            if (den % p == 0) throw domain_error("unit " + rational_to_string(unit_) +
                                                 " has a pole in the residue field");
            break;
        }
        case BaseKind::PAdic: {
            // p-valuation is handled by normalized_for(); here only the
            // denominator-free residue condition is checked.
            break;
        }
    }
}

MonomialElement MonomialElement::normalized_for(const TowerField& field) const {
    MonomialElement m = *this;
    if (field.base.kind == BaseKind::PAdic) {
        std::int64_t p = field.base.p;
        BigInt num = numerator(m.unit_);
        BigInt den = denominator(m.unit_);
        while (num % p == 0) {
            num /= p;
            ++m.pi_exp_;
        }
        while (den % p == 0) {
            den /= p;
            --m.pi_exp_;
        }
        m.unit_ = Rational(num, den);
    }
    m.validate_for(field);
    return m;
}

std::string MonomialElement::to_text() const {
    std::vector<std::string> factors;
    auto add_power = [&factors](const std::string& name, long long e) {
        if (e == 0) return;
        if (e == 1) {
            factors.push_back(name);
        } else {
            factors.push_back(name + "^" + std::to_string(e));
        }
    };
    add_power("u", u_exp_);
    add_power("pi", pi_exp_);
    for (const auto& [name, e] : vars_) add_power(name, e);

    std::string head;
    if (factors.empty()) {
        head = rational_to_string(unit_);
    } else if (unit_ == 1) {
        head = "";
    } else if (unit_ == -1) {
        head = "-";
    } else {
        head = rational_to_string(unit_) + "*";
    }
    std::string body;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) body += "*";
        body += factors[i];
    }
    return head + body;
}

// ---------------------------------------------------------------------------
// ClassVector and the class map
// ---------------------------------------------------------------------------

bool ClassVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

ClassVector ClassVector::operator+(const ClassVector& other) const {
    if (ell != other.ell || coords.size() != other.coords.size()) {
        throw shape_error("class vectors with mixed modulus or dimension");
    }
    ClassVector sum = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        sum.coords[i] = (coords[i] + other.coords[i]) % ell;
    }
    return sum;
}

std::size_t base_class_dim(const BaseField& base, int ell) {
    base.require_admissible(ell);
    switch (base.kind) {
        case BaseKind::Complex: return 0;
        case BaseKind::Real: return 1;
        case BaseKind::Finite: return 1;
        case BaseKind::PAdic: return 2;
    }
    return 0;
}

std::size_t class_dim(const TowerField& field, int ell) {
    return base_class_dim(field.base, ell) + field.height();
}

std::vector<std::string> class_generator_names(const TowerField& field, int ell) {
    field.base.require_admissible(ell);
    std::vector<std::string> names;
    switch (field.base.kind) {
        case BaseKind::Complex: break;
        case BaseKind::Real: names.push_back("-1"); break;
        case BaseKind::Finite: names.push_back("u"); break;
        case BaseKind::PAdic:
            names.push_back("u");
            names.push_back("pi");
            break;
    }
    for (const auto& v : field.variables) names.push_back(v);
    return names;
}

namespace {

int mod_coord(long long value, int ell) {
    long long r = value % ell;
    if (r < 0) r += ell;
    return static_cast<int>(r);
}

// Residue of a rational unit in the prime subfield of F_q (q = p^k).
std::int64_t residue_mod_p(const Rational& unit, std::int64_t p) {
    BigInt num = numerator(unit) % p;
    BigInt den = denominator(unit) % p;
    std::int64_t n = static_cast<std::int64_t>(((num % p) + p) % p);
    std::int64_t d = static_cast<std::int64_t>(((den % p) + p) % p);
    if (n == 0) throw domain_error("unit vanishes in the residue field");
    if (d == 0) throw domain_error("unit has a pole in the residue field");
    std::int64_t dinv = mod_pow(d, p - 2, p);
    return static_cast<std::int64_t>((static_cast<unsigned __int128>(n) * dinv) % p);
}

}  // namespace

ClassVector class_of(const MonomialElement& element, const TowerField& field, int ell) {
    field.base.require_admissible(ell);
    MonomialElement x = element.normalized_for(field);

    ClassVector cv;
    cv.ell = ell;
    switch (field.base.kind) {
        case BaseKind::Complex:
            break;
        case BaseKind::Real: {
            cv.coords.push_back(x.unit() < 0 ? 1 : 0);
            break;
        }
        case BaseKind::Finite: {
            std::int64_t v = residue_mod_p(x.unit(), field.base.characteristic());
            int e = finite_class_exponent(v, field.base.q, ell);
            cv.coords.push_back(mod_coord(e + x.u_exp(), ell));
            break;
        }
        case BaseKind::PAdic: {
            std::int64_t v = residue_mod_p(x.unit(), field.base.p);
            int e = finite_class_exponent(v, field.base.q, ell);
            cv.coords.push_back(mod_coord(e + x.u_exp(), ell));
            cv.coords.push_back(mod_coord(x.pi_exp(), ell));
            break;
        }
    }
    for (const auto& name : field.variables) {
        cv.coords.push_back(mod_coord(x.exponent_of(name), ell));
    }
    return cv;
}

bool is_lth_power(const MonomialElement& x, const TowerField& field, int ell) {
    return class_of(x, field, ell).is_zero();
}

}  // namespace cubic::tower
