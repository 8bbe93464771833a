#pragma once

#include <stdexcept>
#include <string>

namespace hedges {

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result not representable in binary64.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// The polynomial under an approximant's root is <= 0 at the requested
/// argument. Carries the offending radicand and the approximant order so
/// callers can report the smallest m beyond which the order is usable.
class RadicandNonpositive : public DomainError {
public:
    RadicandNonpositive(int order, double radicand, const std::string& what)
        : DomainError(what), order_(order), radicand_(radicand) {}

    int order() const noexcept { return order_; }
    double radicand() const noexcept { return radicand_; }

private:
    int order_;
    double radicand_;
};

class InsufficientData : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonFinite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Pooled standard deviation is zero, so the standardized difference is
/// undefined.
class ZeroPooledSD : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace hedges
