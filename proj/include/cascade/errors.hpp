#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

/// A scale argument fell outside the profile's declared interval [0, lambda_max].
class ScaleRangeError : public std::domain_error {
public:
    explicit ScaleRangeError(const std::string& what) : std::domain_error(what) {}
};

/// The requested operation is not defined for the given representation
/// (e.g. point-evaluating an atom).
class UnsupportedOperation : public std::logic_error {
public:
    explicit UnsupportedOperation(const std::string& what) : std::logic_error(what) {}
};

/// A numeric audit failed: mass drift, negativity beyond the oscillation
/// floor, or an integrand that escaped its grid.
class NumericAuditError : public std::runtime_error {
public:
    explicit NumericAuditError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cascade
