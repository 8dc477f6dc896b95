#pragma once

#include <stdexcept>
#include <string>

namespace bpaths {

// Input could not be parsed (polynomial text or step-set text).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// exact_div was asked for a quotient that does not exist.
struct NotDivisibleError : std::runtime_error {
    explicit NotDivisibleError(const std::string& what) : std::runtime_error(what) {}
};

// rational_series requires a denominator with constant term 1 under the grading.
struct NonUnitConstantTermError : std::runtime_error {
    explicit NonUnitConstantTermError(const std::string& what) : std::runtime_error(what) {}
};

// Step model fails a structural precondition (e.g. no positive or no negative step).
struct InvalidModelError : std::runtime_error {
    explicit InvalidModelError(const std::string& what) : std::runtime_error(what) {}
};

// Operation requires a symmetric step set with symmetric weights.
struct NotSymmetricError : std::runtime_error {
    explicit NotSymmetricError(const std::string& what) : std::runtime_error(what) {}
};

// An identity that must hold as an exact polynomial equation failed.
struct IdentityFailedError : std::runtime_error {
    IdentityFailedError(const std::string& what, int k, int l)
        : std::runtime_error(what), k(k), l(l) {}
    int k;
    int l;
};

// Series matching found nonzero coefficients beyond the configured degree margin.
struct TailNotZeroError : std::runtime_error {
    explicit TailNotZeroError(const std::string& what) : std::runtime_error(what) {}
};

// Brute-force enumeration refused: order too large for factorial enumeration.
struct OrderTooLargeError : std::runtime_error {
    explicit OrderTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bpaths
