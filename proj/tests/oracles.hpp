// Test-only reference implementations kept independent of the library code
// paths they are used to check.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "cubic/symbols.hpp"

namespace oracles {

// ---------------------------------------------------------------------------
// Dense antisymmetric-tensor model of the exterior algebra on d generators
// over Z/ell.  A degree-m class is the full d^m coefficient tensor; the cup
// product is the shuffle antisymmetrization of the tensor product; the
// residue at the last generator appends that index.
// ---------------------------------------------------------------------------

struct DenseClass {
    int ell = 3;
    int dim = 0;
    int degree = 0;
    std::vector<int> data;  // row-major, dim^degree entries

    static std::size_t size_for(int dim, int degree) {
        std::size_t s = 1;
        for (int i = 0; i < degree; ++i) s *= static_cast<std::size_t>(dim);
        return s;
    }

    static DenseClass zero(int ell, int dim, int degree) {
        DenseClass c{ell, dim, degree, {}};
        c.data.assign(size_for(dim, degree), 0);
        return c;
    }

    int& at(const std::vector<int>& idx) {
        std::size_t flat = 0;
        for (int i : idx) flat = flat * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
        return data[flat];
    }
    int at(const std::vector<int>& idx) const {
        std::size_t flat = 0;
        for (int i : idx) flat = flat * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
        return data[flat];
    }
};

inline int mod(int v, int ell) {
    int r = v % ell;
    return r < 0 ? r + ell : r;
}

// Fills the full tensor from coefficients on strictly increasing tuples,
// extending antisymmetrically.
inline DenseClass dense_from_normal_form(const cubic::symbols::CohomologyClass& c) {
    int dim = static_cast<int>(c.generator_count());
    DenseClass out = DenseClass::zero(c.ell(), dim, c.degree());
    std::vector<int> idx(static_cast<std::size_t>(c.degree()), 0);
    const std::size_t total = DenseClass::size_for(dim, c.degree());
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (int i = c.degree() - 1; i >= 0; --i) {
            idx[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(dim));
            rest /= static_cast<std::size_t>(dim);
        }
        // Sort idx, tracking the permutation sign; repeated indices give 0.
        std::vector<int> sorted = idx;
        int sign = 1;
        bool repeat = false;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            for (std::size_t j = i + 1; j < sorted.size(); ++j) {
                if (sorted[i] == sorted[j]) repeat = true;
                if (sorted[i] > sorted[j]) {
                    std::swap(sorted[i], sorted[j]);
                    sign = -sign;
                }
            }
        }
        if (repeat) continue;
        auto it = c.terms().find(sorted);
        if (it == c.terms().end()) continue;
        out.data[flat] = mod(sign * it->second, c.ell());
    }
    return out;
}

// Shuffle-sum wedge of dense tensors (no division, valid over Z/ell).
inline DenseClass dense_cup(const DenseClass& a, const DenseClass& b) {
    DenseClass out = DenseClass::zero(a.ell, a.dim, a.degree + b.degree);
    const int p = a.degree, q = b.degree, n = p + q;
    // Enumerate (p,q)-shuffles: choose positions of a's indices.
    std::vector<int> choose(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) choose[static_cast<std::size_t>(i)] = i;
    auto advance = [&]() -> bool {
        int i = p - 1;
        while (i >= 0 && choose[static_cast<std::size_t>(i)] == n - p + i) --i;
        if (i < 0) return false;
        ++choose[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < p; ++j) {
            choose[static_cast<std::size_t>(j)] = choose[static_cast<std::size_t>(j - 1)] + 1;
        }
        return true;
    };
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    const std::size_t total = DenseClass::size_for(a.dim, n);
    do {
        std::vector<char> in_a(static_cast<std::size_t>(n), 0);
        for (int c : choose) in_a[static_cast<std::size_t>(c)] = 1;
        // Shuffle sign: one transposition per (b-slot, a-slot) inversion.
        int inversions = 0;
        for (int pa = 0; pa < n; ++pa) {
            if (!in_a[static_cast<std::size_t>(pa)]) continue;
            for (int pb = 0; pb < pa; ++pb) {
                if (!in_a[static_cast<std::size_t>(pb)]) ++inversions;
            }
        }
        const int sign = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t rest = flat;
            for (int i = n - 1; i >= 0; --i) {
                idx[static_cast<std::size_t>(i)] =
                    static_cast<int>(rest % static_cast<std::size_t>(a.dim));
                rest /= static_cast<std::size_t>(a.dim);
            }
            std::vector<int> ia, ib;
            for (int pos = 0; pos < n; ++pos) {
                (in_a[static_cast<std::size_t>(pos)] ? ia : ib).push_back(idx[static_cast<std::size_t>(pos)]);
            }
            int va = a.at(ia);
            if (va == 0) continue;
            int vb = b.at(ib);
            if (vb == 0) continue;
            out.data[flat] = mod(out.data[flat] + sign * va * vb, a.ell);
        }
    } while (advance());
    return out;
}

// Residue at the last generator: append it to the index tuple.
inline DenseClass dense_residue_at_last(const DenseClass& a) {
    DenseClass out = DenseClass::zero(a.ell, a.dim - 1, a.degree - 1);
    std::vector<int> idx(static_cast<std::size_t>(a.degree), 0);
    const std::size_t total = DenseClass::size_for(a.dim - 1, a.degree - 1);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (int i = a.degree - 2; i >= 0; --i) {
            idx[static_cast<std::size_t>(i)] =
                static_cast<int>(rest % static_cast<std::size_t>(a.dim - 1));
            rest /= static_cast<std::size_t>(a.dim - 1);
        }
        idx[static_cast<std::size_t>(a.degree - 1)] = a.dim - 1;
        out.data[flat] = a.at(idx);
    }
    return out;
}

// Specialization at the last generator: restrict the tensor to indices < dim-1.
inline DenseClass dense_specialize_at_last(const DenseClass& a) {
    DenseClass out = DenseClass::zero(a.ell, a.dim - 1, a.degree);
    std::vector<int> idx(static_cast<std::size_t>(a.degree), 0);
    const std::size_t total = DenseClass::size_for(a.dim - 1, a.degree);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (int i = a.degree - 1; i >= 0; --i) {
            idx[static_cast<std::size_t>(i)] =
                static_cast<int>(rest % static_cast<std::size_t>(a.dim - 1));
            rest /= static_cast<std::size_t>(a.dim - 1);
        }
        out.data[flat] = a.at(idx);
    }
    return out;
}

inline bool dense_equal(const DenseClass& a, const DenseClass& b) {
    return a.ell == b.ell && a.dim == b.dim && a.degree == b.degree && a.data == b.data;
}

// ---------------------------------------------------------------------------
// Integer grid-scan root counter for cubics with small integer coefficients.
// Counts exact grid zeros plus sign alternations between grid points k/denom
// over [-bound, bound]; exact for squarefree cubics whose root separation
// exceeds 1/denom.  Evaluates f(k/denom)*denom^3 in integers only.
// ---------------------------------------------------------------------------

inline unsigned grid_scan_roots(long long a0, long long a1, long long a2, long long a3,
                                long long bound, long long denom) {
    unsigned roots = 0;
    int prev_sign = 0;  // last nonzero sign seen
    bool zero_between = false;
    for (long long k = -bound * denom; k <= bound * denom; ++k) {
        long long value = a3 * k * k * k + a2 * denom * k * k + a1 * denom * denom * k +
                          a0 * denom * denom * denom;
        int s = value > 0 ? 1 : value < 0 ? -1 : 0;
        if (s == 0) {
            // exact grid hit; the surrounding sign change belongs to it
            ++roots;
            zero_between = true;
            continue;
        }
        if (prev_sign != 0 && s != prev_sign && !zero_between) ++roots;
        prev_sign = s;
        zero_between = false;
    }
    return roots;
}

inline long long cubic_discriminant(long long a0, long long a1, long long a2, long long a3) {
    // 18*a*b*c*d - 4*b^3*d + b^2*c^2 - 4*a*c^3 - 27*a^2*d^2 for
    // f = a*u^3 + b*u^2 + c*u + d.
    long long a = a3, b = a2, c = a1, d = a0;
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

// ---------------------------------------------------------------------------
// Exhaustive isotropy search over F_5((l)) for diagonal forms of dimension
// <= 4 with coefficients c*l^e, c in F_5*, e in {0,1}.  Candidate vectors are
// truncated Laurent polynomials with exponents 0..3, so each value
// c*l^e*x(l)^2 is a polynomial of degree <= 7 over F_5, packed as a base-5
// integer below 5^8 = 390625.
// ---------------------------------------------------------------------------

class F5IsotropySearcher {
public:
    static constexpr int kHalf = 625;       // 5^4: packed degree-(0..3) block
    static constexpr int kSpace = 390625;   // 5^8: packed degree-(0..7) polys

    struct Slot {
        int c;  // 1..4
        int e;  // 0 or 1
        bool operator<(const Slot& o) const { return c != o.c ? c < o.c : e < o.e; }
        bool operator==(const Slot& o) const = default;
    };

    F5IsotropySearcher() {
        add_.assign(static_cast<std::size_t>(kHalf) * kHalf, 0);
        for (int a = 0; a < kHalf; ++a) {
            for (int b = 0; b < kHalf; ++b) {
                int da = a, db = b, out = 0, mul = 1;
                for (int d = 0; d < 4; ++d) {
                    out += (da % 5 + db % 5) % 5 * mul;
                    da /= 5;
                    db /= 5;
                    mul *= 5;
                }
                add_[static_cast<std::size_t>(a) * kHalf + b] = static_cast<std::uint32_t>(out);
            }
        }
        neg_.assign(kHalf, 0);
        for (int a = 0; a < kHalf; ++a) {
            int da = a, out = 0, mul = 1;
            for (int d = 0; d < 4; ++d) {
                out += (5 - da % 5) % 5 * mul;
                da /= 5;
                mul *= 5;
            }
            neg_[static_cast<std::size_t>(a)] = static_cast<std::uint32_t>(out);
        }
        // q tables: value of c*l^e*x(l)^2 for every packed x in [0, 625).
        for (int c = 1; c <= 4; ++c) {
            for (int e = 0; e <= 1; ++e) {
                auto& table = q_table_[slot_index({c, e})];
                table.assign(kHalf, 0);
                for (int x = 0; x < kHalf; ++x) {
                    int coeffs[4] = {x % 5, x / 5 % 5, x / 25 % 5, x / 125 % 5};
                    int square[8] = {0};
                    for (int i = 0; i < 4; ++i) {
                        for (int j = 0; j < 4; ++j) {
                            square[i + j] = (square[i + j] + coeffs[i] * coeffs[j]) % 5;
                        }
                    }
                    long long packed = 0, mul = 1;
                    for (int d = 0; d < 8; ++d) {
                        int src = d - e;
                        int v = (src >= 0 && src < 8) ? square[src] : 0;
                        packed += v % 5 * c % 5 * mul % kSpace;
                        mul *= 5;
                    }
                    table[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(packed % kSpace);
                }
            }
        }
        stamp_.assign(kSpace, 0);
    }

    static int slot_index(const Slot& s) { return (s.c - 1) * 2 + s.e; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return add_[static_cast<std::size_t>(a % kHalf) * kHalf + b % kHalf] +
               add_[static_cast<std::size_t>(a / kHalf) * kHalf + b / kHalf] * kHalf;
    }
    std::uint32_t neg(std::uint32_t a) const {
        return neg_[a % kHalf] + neg_[a / kHalf] * kHalf;
    }

    // Is sum_i slots[i].c * l^slots[i].e * x_i^2 = 0 solvable with x_i of
    // degree <= 3, not all zero?
    bool isotropic(const std::vector<Slot>& slots) {
        const auto& t = q_table_;
        switch (slots.size()) {
            case 0:
                return false;
            case 1: {
                const auto& q1 = t[slot_index(slots[0])];
                for (int x = 1; x < kHalf; ++x) {
                    if (q1[static_cast<std::size_t>(x)] == 0) return true;
                }
                return false;
            }
            case 2: {
                const auto& q1 = t[slot_index(slots[0])];
                const auto& q2 = t[slot_index(slots[1])];
                for (int x1 = 0; x1 < kHalf; ++x1) {
                    for (int x2 = (x1 == 0 ? 1 : 0); x2 < kHalf; ++x2) {
                        if (add(q1[static_cast<std::size_t>(x1)],
                                q2[static_cast<std::size_t>(x2)]) == 0) {
                            return true;
                        }
                    }
                }
                return false;
            }
            case 3: {
                ++epoch_;
                const auto& q1 = t[slot_index(slots[0])];
                for (int x1 = 1; x1 < kHalf; ++x1) {
                    stamp_[q1[static_cast<std::size_t>(x1)]] = epoch_;
                }
                const auto& q2 = t[slot_index(slots[1])];
                const auto& q3 = t[slot_index(slots[2])];
                for (int x2 = 0; x2 < kHalf; ++x2) {
                    for (int x3 = 0; x3 < kHalf; ++x3) {
                        std::uint32_t rest =
                            add(q2[static_cast<std::size_t>(x2)], q3[static_cast<std::size_t>(x3)]);
                        if (stamp_[neg(rest)] == epoch_) return true;
                        if (rest == 0 && (x2 | x3)) return true;
                    }
                }
                return false;
            }
            case 4: {
                ++epoch_;
                const auto& q1 = t[slot_index(slots[0])];
                const auto& q2 = t[slot_index(slots[1])];
                for (int x1 = 0; x1 < kHalf; ++x1) {
                    for (int x2 = (x1 == 0 ? 1 : 0); x2 < kHalf; ++x2) {
                        stamp_[add(q1[static_cast<std::size_t>(x1)],
                                   q2[static_cast<std::size_t>(x2)])] = epoch_;
                    }
                }
                const auto& q3 = t[slot_index(slots[2])];
                const auto& q4 = t[slot_index(slots[3])];
                for (int x3 = 0; x3 < kHalf; ++x3) {
                    for (int x4 = 0; x4 < kHalf; ++x4) {
                        std::uint32_t rest =
                            add(q3[static_cast<std::size_t>(x3)], q4[static_cast<std::size_t>(x4)]);
                        if (stamp_[neg(rest)] == epoch_) return true;
                        if (rest == 0 && (x3 | x4)) return true;
                    }
                }
                return false;
            }
            default:
                return true;  // dim > 4 over F_5((l)) is always isotropic
        }
    }

private:
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> neg_;
    std::array<std::vector<std::uint32_t>, 8> q_table_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
};

}  // namespace oracles
