#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

// Common base so callers can catch everything from this library at once.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Base field does not admit the requested modulus (missing roots of unity,
// bad characteristic, ...).
struct admissibility_error : error {
    using error::error;
};

// A builder hypothesis failed (e.g. the chosen element is a cube).
struct hypothesis_error : error {
    using error::error;
};

// Mixed moduli / ambient dimensions / generator sets.
struct shape_error : error {
    using error::error;
};

// An operation was called outside its stated precondition.
struct precondition_error : error {
    using error::error;
};

// Value outside the operation's domain (zero element, zero polynomial, ...).
struct domain_error : error {
    using error::error;
};

// The requested base field / configuration has no decision procedure here.
struct unsupported_error : error {
    using error::error;
};

// Real component counting was asked for a singular real model.
struct singular_model_error : error {
    using error::error;
};

// Text input rejected; carries a 1-based position for diagnostics.
struct parse_error : error {
    std::size_t line;
    std::size_t column;
    parse_error(const std::string& msg, std::size_t line_, std::size_t column_)
        : error(msg), line(line_), column(column_) {}
};

}  // namespace cubic
