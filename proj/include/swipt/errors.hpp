#pragma once

#include <stdexcept>
#include <string>

namespace swipt {

/// A parameter violates one of its bounds. `field()` names the offending key.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numeric routine could not reach its tolerance. Carries what it had.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), estimate_(best_estimate), error_bound_(error_bound) {}
    double best_estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// A computed quantity fell outside the range a caller needs (e.g. a zero
/// outage probability on a log-log fit).
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

} // namespace swipt
