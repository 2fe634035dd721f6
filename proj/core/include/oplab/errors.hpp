#pragma once

#include <stdexcept>
#include <string>

namespace oplab {

/// invert() on a series whose constant coefficient is zero.
struct ZeroConstantTerm : std::domain_error {
    explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

/// substitute_power() with exponent m = 0.
struct InvalidExponent : std::domain_error {
    explicit InvalidExponent(const std::string& what) : std::domain_error(what) {}
};

/// crank() of an empty partition.
struct EmptyPartition : std::domain_error {
    explicit EmptyPartition(const std::string& what) : std::domain_error(what) {}
};

/// Two routes that must agree exactly disagreed; always an implementation bug.
struct InternalIdentityViolation : std::logic_error {
    explicit InternalIdentityViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace oplab
