#include "cubic/realtopo.hpp"

#include <algorithm>

namespace cubic::realtopo {

namespace {

using Poly = std::vector<Rational>;  // low degree first, no trailing zeros

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly rem(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= factor * b[i];
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    return d;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly divide_exact(const Poly& a, const Poly& b) {
    Poly quotient(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    Poly r = a;
    while (r.size() >= b.size() && !r.empty()) {
        Rational factor = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        quotient[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= factor * b[i];
        r.pop_back();
        trim(r);
    }
    trim(quotient);
    return quotient;
}

// Canonical Sturm chain of a squarefree polynomial.
std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain;
    chain.push_back(f);
    Poly d = derivative(f);
    trim(d);
    if (!d.empty()) chain.push_back(d);
    while (chain.size() >= 2) {
        Poly r = rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_at(const Poly& p, const Rational& x) { return sign_of(eval(p, x)); }

int sign_at_infinity(const Poly& p, bool positive) {
    if (p.empty()) return 0;
    int lead = sign_of(p.back());
    if (positive) return lead;
    return (p.size() - 1) % 2 == 0 ? lead : -lead;
}

unsigned variations(const std::vector<int>& signs) {
    unsigned count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

unsigned variations_at(const std::vector<Poly>& chain, const std::optional<Rational>& x,
                       bool positive_infinity) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) {
        signs.push_back(x ? sign_at(p, *x) : sign_at_infinity(p, positive_infinity));
    }
    return variations(signs);
}

// Cauchy bound: all real roots lie in (-B, B).
Rational cauchy_bound(const Poly& f) {
    Rational max_ratio = 0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        Rational r = abs(f[i] / f.back());
        if (r > max_ratio) max_ratio = r;
    }
    return max_ratio + 1;
}

}  // namespace

RationalCubicPolynomial::RationalCubicPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim(coeffs_);
    if (coeffs_.size() > 4) {
        throw domain_error("polynomial degree exceeds 3");
    }
}

RationalCubicPolynomial RationalCubicPolynomial::from_coefficients(const Rational& c0,
                                                                   const Rational& c1,
                                                                   const Rational& c2,
                                                                   const Rational& c3) {
    return RationalCubicPolynomial(std::vector<Rational>{c0, c1, c2, c3});
}

int RationalCubicPolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

Rational RationalCubicPolynomial::leading() const {
    if (coeffs_.empty()) throw domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational RationalCubicPolynomial::evaluate(const Rational& x) const { return eval(coeffs_, x); }

RationalCubicPolynomial RationalCubicPolynomial::derivative() const {
    return RationalCubicPolynomial(realtopo::derivative(coeffs_));
}

bool RationalCubicPolynomial::is_squarefree() const {
    if (coeffs_.empty()) return false;
    Poly g = gcd(coeffs_, realtopo::derivative(coeffs_));
    return g.size() <= 1;
}

bool RationalCubicPolynomial::is_monic_cubic() const {
    return degree() == 3 && coeffs_.back() == 1;
}

std::string RationalCubicPolynomial::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        Rational a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string var = d == 0 ? "" : (d == 1 ? "u" : "u^" + std::to_string(d));
        if (a != 1 || d == 0) {
            out += rational_to_string(a);
            if (!var.empty()) out += "*";
        }
        out += var;
    }
    return out;
}

unsigned real_root_count(const RationalCubicPolynomial& f, const Interval& interval) {
    if (f.is_zero()) throw domain_error("zero polynomial");
    if (f.degree() == 0) return 0;
    // Distinct roots of f = roots of its squarefree part.
    Poly p = f.coefficients();
    Poly g = gcd(p, derivative(p));
    if (g.size() > 1) p = divide_exact(p, g);
    std::vector<Poly> chain = sturm_chain(p);
    // With zero signs skipped, the variation count at a root equals its
    // right-hand limit, so V(a) - V(b) counts roots in (a, b].
    unsigned va = variations_at(chain, interval.lo, false);
    unsigned vb = variations_at(chain, interval.hi, true);
    if (interval.lo && interval.hi && *interval.lo > *interval.hi) {
        throw domain_error("interval endpoints out of order");
    }
    return va >= vb ? va - vb : 0;
}

std::string RootDescription::to_text() const {
    if (exact) return rational_to_string(*exact);
    return "(" + rational_to_string(lo) + ", " + rational_to_string(hi) + ")";
}

namespace {

// Divisors of |n|, capped; empty when n is too expensive to factor.
std::vector<BigInt> bounded_divisors(const BigInt& n) {
    std::vector<BigInt> divs;
    BigInt a = abs(n);
    if (a == 0) return divs;
    const long long kMaxTrial = 1000000;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (d > kMaxTrial) return {};  // give up, isolating intervals only
        if (a % d == 0) {
            divs.push_back(d);
            divs.push_back(a / d);
        }
    }
    return divs;
}

// Exact rational roots of f via the rational root theorem on the
// denominator-cleared polynomial; may return empty when coefficients are too
// large to factor, in which case callers fall back to isolating intervals.
std::vector<Rational> rational_roots(const RationalCubicPolynomial& f) {
    Poly p = f.coefficients();
    BigInt common_den = 1;
    for (const auto& c : p) common_den *= denominator(c) / gcd(common_den, denominator(c));
    std::vector<BigInt> ip;
    for (const auto& c : p) ip.push_back(numerator(c * Rational(common_den)));
    while (!ip.empty() && ip.front() == 0) {
        // u = 0 is a root; peel it off.
        ip.erase(ip.begin());
    }
    std::vector<Rational> roots;
    if (f.evaluate(0) == 0) roots.push_back(0);
    if (ip.empty()) return roots;
    std::vector<BigInt> nums = bounded_divisors(ip.front());
    std::vector<BigInt> dens = bounded_divisors(ip.back());
    for (const auto& r : nums) {
        for (const auto& s : dens) {
            Rational cand(r, s);
            if (f.evaluate(cand) == 0) roots.push_back(cand);
            if (f.evaluate(-cand) == 0) roots.push_back(-cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<RootDescription> isolate_real_roots(const RationalCubicPolynomial& f) {
    if (f.is_zero()) throw domain_error("zero polynomial");
    Poly p = f.coefficients();
    Poly g = gcd(p, derivative(p));
    if (g.size() > 1) p = divide_exact(p, g);
    RationalCubicPolynomial sf{p};
    std::vector<Poly> chain = sturm_chain(p);

    auto count_upto = [&](const Rational& x) {
        return variations_at(chain, std::nullopt, false) -
               variations_at(chain, std::optional<Rational>(x), true);
    };

    unsigned total = real_root_count(sf);
    std::vector<RootDescription> roots;
    if (total == 0) return roots;

    std::vector<Rational> exact = rational_roots(sf);

    Rational bound = cauchy_bound(p);
    // Bisect (lo, hi] intervals until each holds one root.
    struct Seg {
        Rational lo, hi;
        unsigned count;
    };
    std::vector<Seg> work{{-bound, bound, total}};
    std::vector<Seg> isolated;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            isolated.push_back(s);
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        unsigned left = count_upto(mid) - count_upto(s.lo);
        work.push_back({s.lo, mid, left});
        work.push_back({mid, s.hi, s.count - left});
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const Seg& a, const Seg& b) { return a.lo < b.lo; });

    for (const auto& seg : isolated) {
        RootDescription rd;
        rd.lo = seg.lo;
        rd.hi = seg.hi;
        for (const auto& r : exact) {
            if (seg.lo < r && r <= seg.hi) {
                rd.exact = r;
                break;
            }
        }
        // The unique root of (lo, hi] sits at hi exactly when f(hi) = 0.
        if (!rd.exact && sf.evaluate(rd.hi) == 0) rd.exact = rd.hi;
        if (!rd.exact) {
            // Narrow by Sturm counts; half-open semantics keep this sound
            // even when a bisection endpoint happens to be a root.
            for (int i = 0; i < 24; ++i) {
                Rational mid = (rd.lo + rd.hi) / 2;
                if (sf.evaluate(mid) == 0) {
                    rd.exact = mid;
                    break;
                }
                unsigned in_left = count_upto(mid) - count_upto(rd.lo);
                if (in_left == 1) {
                    rd.hi = mid;
                } else {
                    rd.lo = mid;
                }
            }
        }
        roots.push_back(rd);
    }
    return roots;
}

unsigned components_count(unsigned n, const RationalCubicPolynomial& f) {
    return components_report(n, f).components;
}

ComponentReport components_report(unsigned n, const RationalCubicPolynomial& f) {
    if (n < 2) throw precondition_error("component counting requires n >= 2");
    if (!f.is_monic_cubic()) {
        throw precondition_error("component counting requires a monic cubic");
    }
    if (!f.is_squarefree()) {
        throw singular_model_error("cubic is not squarefree; the smooth real model analysis "
                                   "does not apply");
    }
    unsigned roots = real_root_count(f);
    std::vector<RootDescription> iso = isolate_real_roots(f);

    auto endpoint = [](const RootDescription& r) {
        return r.exact ? rational_to_string(*r.exact) : r.to_text();
    };

    ComponentReport report;
    if (roots == 3) {
        report.components = 2;
        report.intervals.push_back("[" + endpoint(iso[0]) + ", " + endpoint(iso[1]) + "]");
        report.intervals.push_back("[" + endpoint(iso[2]) + ", +inf) (closed up at infinity)");
    } else {
        report.components = 1;
        report.intervals.push_back("[" + endpoint(iso[0]) + ", +inf) (closed up at infinity)");
    }
    return report;
}

}  // namespace cubic::realtopo
