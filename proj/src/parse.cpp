#include "cubic/parse.hpp"

#include <cctype>

namespace cubic::parse {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    char get() {
        if (done()) fail("unexpected end of input");
        return text_[pos_++];
    }
    std::size_t column() const { return pos_ + 1; }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool try_consume(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool try_consume(const std::string& s) {
        skip_ws();
        if (text_.compare(pos_, s.size(), s) == 0) {
            pos_ += s.size();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        skip_ws();
        if (peek() != c) fail("expected " + what);
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, 1, column());
    }

    void expect_done() {
        skip_ws();
        if (!done()) fail("trailing input");
    }

    std::int64_t integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::int64_t v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            int d = get() - '0';
            if (v > (INT64_MAX - d) / 10) fail("integer literal too large");
            v = v * 10 + d;
        }
        return neg ? -v : v;
    }

    BigInt big_integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        BigInt v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
        }
        return neg ? -v : v;
    }

    Rational rational() {
        BigInt num = big_integer();
        if (try_consume('/')) {
            BigInt den = big_integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::string identifier() {
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
            fail("expected an identifier");
        }
        std::string name;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            name += get();
        }
        return name;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

tower::MonomialElement monomial_body(Cursor& c) {
    tower::MonomialElement m = tower::MonomialElement::one();
    bool negate = c.try_consume('-');
    bool first = true;
    do {
        c.skip_ws();
        char head = c.peek();
        if (std::isdigit(static_cast<unsigned char>(head)) ||
            (head == '-' && !first)) {
            Rational r = c.rational();
            if (r == 0) c.fail("zero is not a monomial field element");
            m = m * tower::MonomialElement::from_rational(r);
        } else if (std::isalpha(static_cast<unsigned char>(head)) || head == '_') {
            std::string name = c.identifier();
            long long exp = 1;
            if (c.try_consume('^')) exp = c.integer();
            if (name == "u") {
                m = m * tower::MonomialElement::generator_u(exp);
            } else if (name == "pi") {
                m = m * tower::MonomialElement::uniformizer(exp);
            } else {
                m = m * tower::MonomialElement::variable(name, exp);
            }
        } else {
            c.fail("expected a rational or a variable");
        }
        first = false;
    } while (c.try_consume('*'));
    return negate ? m.negated() : m;
}

tower::MonomialElement monomial_until(Cursor& c) {
    // Monomial inside a form: stops before ',' '>' etc.
    return monomial_body(c);
}

}  // namespace

tower::TowerField parse_field(const std::string& text) {
    Cursor c(text);
    c.skip_ws();
    tower::BaseField base;
    if (c.try_consume("Fq")) {
        c.expect('(', "'(' after Fq");
        std::int64_t q = c.integer();
        c.expect(')', "')'");
        if (!tower::is_prime_power(q)) {
            c.fail("finite base cardinality must be a prime power, got " + std::to_string(q));
        }
        base = tower::BaseField::finite(q);
    } else if (c.try_consume("Qp")) {
        c.expect('(', "'(' after Qp");
        std::int64_t p = c.integer();
        c.expect(';', "';'");
        std::int64_t q = c.integer();
        c.expect(')', "')'");
        std::int64_t rp = 0;
        if (!tower::is_prime(p)) c.fail("p must be prime, got " + std::to_string(p));
        if (!tower::is_prime_power(q, &rp, nullptr) || rp != p) {
            c.fail("residue cardinality must be a power of p");
        }
        base = tower::BaseField::padic(p, q);
    } else if (c.try_consume('C')) {
        base = tower::BaseField::complex();
    } else if (c.try_consume('R')) {
        base = tower::BaseField::real();
    } else {
        c.fail("expected a base field: C, R, Fq(q) or Qp(p;q)");
    }
    std::vector<std::string> vars;
    while (c.try_consume("[[")) {
        std::string name = c.identifier();
        if (name == "u" || name == "pi") c.fail("variable name '" + name + "' is reserved");
        c.expect(']', "']]'");
        c.expect(']', "']]'");
        vars.push_back(name);
    }
    c.expect_done();
    try {
        return tower::TowerField(base, vars);
    } catch (const cubic::error& e) {
        throw parse_error(e.what(), 1, c.column());
    }
}

tower::MonomialElement parse_monomial(const std::string& text) {
    Cursor c(text);
    tower::MonomialElement m = monomial_body(c);
    c.expect_done();
    return m;
}

quadforms::DiagonalQuadraticForm parse_form(const std::string& text,
                                            const tower::TowerField& field) {
    Cursor c(text);
    c.expect('<', "'<'");
    quadforms::DiagonalQuadraticForm q{field, {}};
    do {
        q.coefficients.push_back(monomial_until(c));
    } while (c.try_consume(','));
    c.expect('>', "'>'");
    c.expect_done();
    try {
        q.validate();
        for (auto& coeff : q.coefficients) coeff = coeff.normalized_for(field);
    } catch (const cubic::error& e) {
        throw parse_error(e.what(), 1, c.column());
    }
    return q;
}

quadforms::PfisterForm parse_pfister(const std::string& text, const tower::TowerField& field) {
    Cursor c(text);
    c.expect('<', "'<<'");
    c.expect('<', "'<<'");
    quadforms::PfisterForm phi{field, {}};
    c.skip_ws();
    if (c.peek() != '>') {
        do {
            phi.slots.push_back(monomial_until(c));
        } while (c.try_consume(','));
    }
    c.expect('>', "'>>'");
    c.expect('>', "'>>'");
    c.expect_done();
    try {
        phi.validate();
        for (auto& slot : phi.slots) slot = slot.normalized_for(field);
    } catch (const cubic::error& e) {
        throw parse_error(e.what(), 1, c.column());
    }
    return phi;
}

realtopo::RationalCubicPolynomial parse_cubic(const std::string& text) {
    Cursor c(text);
    std::vector<Rational> coeffs(4, Rational(0));
    bool any = false;
    int pending_sign = 1;
    c.skip_ws();
    if (c.try_consume('-')) pending_sign = -1;
    while (true) {
        c.skip_ws();
        Rational coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = c.rational();
            saw_coeff = true;
        }
        int degree = 0;
        c.skip_ws();
        bool has_var = false;
        if (saw_coeff && c.try_consume('*')) {
            has_var = true;
        } else if (!saw_coeff || c.peek() == 'u') {
            has_var = c.peek() == 'u';
        }
        if (has_var) {
            std::string name = c.identifier();
            if (name != "u") c.fail("polynomial variable must be 'u'");
            degree = 1;
            if (c.try_consume('^')) {
                std::int64_t d = c.integer();
                if (d < 0 || d > 3) c.fail("degree must be between 0 and 3");
                degree = static_cast<int>(d);
            }
        } else if (!saw_coeff) {
            c.fail("expected a term");
        }
        coeffs[static_cast<std::size_t>(degree)] += Rational(pending_sign) * coeff;
        any = true;
        c.skip_ws();
        if (c.try_consume('+')) {
            pending_sign = 1;
        } else if (c.try_consume('-')) {
            pending_sign = -1;
        } else {
            break;
        }
    }
    c.expect_done();
    if (!any) c.fail("empty polynomial");
    return realtopo::RationalCubicPolynomial(coeffs);
}

Rational parse_rational(const std::string& text) {
    Cursor c(text);
    Rational r = c.rational();
    c.expect_done();
    return r;
}

std::string format_parse_error(const std::string& input, const cubic::parse_error& err) {
    std::string out = "parse error at " + std::to_string(err.line) + ":" +
                      std::to_string(err.column) + ": " + err.what();
    out += "\n  " + input + "\n  ";
    for (std::size_t i = 1; i < err.column; ++i) out += " ";
    out += "^";
    return out;
}

}  // namespace cubic::parse
