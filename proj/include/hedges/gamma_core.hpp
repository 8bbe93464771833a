#pragma once

// Reference evaluation of log-gamma, the Wallis ratio Gamma(x+1)/Gamma(x+1/2)
// and the exact correction factor J(m) of the bias-corrected standardized
// mean difference. Everything here is binary64; accuracy bounds are stated
// per function and enforced by tests against a 50-digit oracle.

namespace hedges {

/// Degrees of freedom m = n_i + n_j - 2, as a real number. Always finite and
/// greater than 1 so that both Gamma(m/2) and Gamma((m-1)/2) are defined.
class DegreesOfFreedom {
public:
    /// Throws DomainError unless m is finite and m > 1.
    explicit DegreesOfFreedom(double m);

    double value() const noexcept { return m_; }

    friend bool operator==(DegreesOfFreedom, DegreesOfFreedom) = default;

private:
    double m_;
};

/// Argument x of the Wallis ratio; finite and x > -1/2.
class WallisArgument {
public:
    explicit WallisArgument(double x);

    double value() const noexcept { return x_; }

private:
    double x_;
};

/// ln Gamma(x) for x > 0. Relative error <= 5e-15 on (0, 1000].
/// Throws DomainError for x <= 0, NaN or infinity.
double log_gamma(double x);

/// Gamma(two_x / 2) from the factorial / double-factorial closed forms,
/// accumulated in double-double so the only rounding is the final one.
/// Throws DomainError if two_x < 1 and OverflowError once the result leaves
/// the binary64 range (two_x >= 344).
double gamma_half_integer(long two_x);

/// ln Gamma(two_x / 2) through the same compensated product, with the binary
/// exponent carried separately so it never overflows.
double log_gamma_half_integer(long two_x);

/// Gamma(x+1) / Gamma(x+1/2). Relative error <= 1e-14 for x in (-1/2, 500]
/// and <= 1e-13 up to 5e5. Monotone increasing.
double wallis_ratio_exact(WallisArgument x);

/// J(m) = Gamma(m/2) / (sqrt(m/2) Gamma((m-1)/2)), computed as
/// wallis_ratio_exact(m/2 - 1) / sqrt(m/2). Lies in (0, 1).
double j_exact(DegreesOfFreedom m);

}  // namespace hedges
