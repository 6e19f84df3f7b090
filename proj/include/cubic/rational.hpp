#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cubic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "n" or "n/d" with d > 0 and gcd(n,d)=1.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

}  // namespace cubic
