#pragma once

#include <stdexcept>
#include <string>

namespace qtop {

/// Malformed arguments: unknown atoms, overlapping ground sets, bad bijections, parse errors.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Structured data failing a checked axiom (open-set family, non-multiplicative functional).
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Precondition on mathematical domain violated (quotient without refinement, log of a non-unit mould).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Configured size caps exceeded.
struct ResourceError : std::length_error {
    explicit ResourceError(const std::string& what) : std::length_error(what) {}
};

} // namespace qtop
