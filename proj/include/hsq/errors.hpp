#pragma once

#include <stdexcept>
#include <string>

namespace hsq {

// Bad input, violated precondition, or an enumeration budget overrun.
// The CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A consistency assertion failed: an exact division left a remainder, a
// count did not cancel to a polynomial, or the two sides of an identity
// disagree.  These indicate a formula or convention bug and must surface
// loudly.  The CLI maps this to exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace hsq
