#pragma once

// Closed-form approximations of the correction factor J(m):
//   Hedges:      H(m) = 1 - 3 / (4m - 1)
//   Mortici(k):  a 2k-th root of a degree-k polynomial. In the Wallis
//                variable x the polynomial approximates R(x)^(2k) where
//                R(x) = Gamma(x+1)/Gamma(x+1/2); substituting x = m/2 - 1 and
//                dividing by (m/2)^k gives P_k(m) as a polynomial in 1/m.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hedges/gamma_core.hpp"

namespace hedges {

/// Selects which value stands in for J(m).
class ApproxKind {
public:
    enum class Tag { Exact, Hedges, Mortici };

    static constexpr int kMinOrder = 1;
    static constexpr int kMaxOrder = 6;

    static ApproxKind exact() { return ApproxKind(Tag::Exact, 0); }
    static ApproxKind hedges() { return ApproxKind(Tag::Hedges, 0); }
    /// Throws std::out_of_range unless 1 <= order <= 6.
    static ApproxKind mortici(int order);

    /// Parses `exact`, `hedges`, `p1`..`p6`. Throws std::invalid_argument.
    static ApproxKind parse(std::string_view name);

    /// Hedges followed by Mortici 1..6, the seven approximations under test.
    static std::array<ApproxKind, 7> approximations();

    Tag tag() const noexcept { return tag_; }
    /// Mortici order, 0 for the other tags.
    int order() const noexcept { return order_; }

    /// Inverse of parse().
    std::string name() const;
    /// 0 for Hedges, k for Mortici(k): the error-column index delta<i>.
    int delta_index() const;

    friend bool operator==(ApproxKind, ApproxKind) = default;

private:
    ApproxKind(Tag tag, int order) : tag_(tag), order_(order) {}

    Tag tag_;
    int order_;
};

/// Exact rational number; every coefficient here has a power-of-two
/// denominator and so converts to binary64 without rounding.
struct Rational {
    std::int64_t num;
    std::int64_t den;

    constexpr double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend constexpr bool operator==(Rational, Rational) = default;
};

/// Polynomial in 1/m under the 2k-th root of P_k. coefficients[j] multiplies
/// (1/m)^j; coefficients[0] is 1.
struct RadicandPolynomial {
    int order;
    std::span<const Rational> coefficients;
    int root_degree;
};

/// Polynomial in x under the 2k-th root of the Wallis-ratio approximant.
/// coefficients[j] multiplies x^j; the leading coefficient is 1.
struct WallisPolynomial {
    int order;
    std::span<const Rational> coefficients;
    int root_degree;
};

double hedges_h(double m);

/// Both throw std::out_of_range for order outside 1..6.
WallisPolynomial wallis_polynomial(int order);
RadicandPolynomial radicand_polynomial(int order);

/// Radicand of wallis_approx at x, Horner in x.
double wallis_radicand(int order, double x);
/// Radicand of p_approx at m, Horner in u = 1/m.
double radicand_value(int order, double m);

/// Smallest m such that the order-k radicand is positive for every larger m.
/// Orders 2 and 6 have no real root and report 1 (the lower end of the
/// degrees-of-freedom domain).
double minimal_valid_m(int order);

/// (polynomial(x))^(1/(2k)). Throws RadicandNonpositive when polynomial(x) <= 0.
double wallis_approx(int order, WallisArgument x);

/// Returns radicand_value(order, m), or throws RadicandNonpositive (naming
/// minimal_valid_m) when it is <= 0. Accepts any m > 0.
double require_positive_radicand(int order, double m);

/// (radicand(1/m))^(1/(2k)). Throws RadicandNonpositive when radicand <= 0.
double p_approx(int order, DegreesOfFreedom m);

/// Dispatch over Exact / Hedges / Mortici(k). Exact returns j_exact(m).
double approx_value(ApproxKind kind, DegreesOfFreedom m);

/// value^(1/degree) for an even degree 2..12 and value > 0, using nested
/// square and cube roots where possible.
double even_root(double value, int degree);

}  // namespace hedges
