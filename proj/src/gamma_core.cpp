#include "hedges/gamma_core.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hedges/double_double.hpp"
#include "hedges/errors.hpp"

namespace hedges {

using detail::DoubleDouble;

namespace {

constexpr double kEulerGamma = 0.57721566490153287;
constexpr DoubleDouble kHalfLog2Pi{0.9189385332046728, -3.8782941580672414e-17};
constexpr DoubleDouble kSqrtPi{1.7724538509055161, -7.6665864998257987e-17};
using detail::kLn2;

// zeta(k) - 1 for k = 2..40.
constexpr std::array<double, 39> kZetaMinusOne = {
    6.44934066848226406e-01, 2.02056903159594292e-01, 8.23232337111381857e-02,
    3.69277551433699266e-02, 1.73430619844491402e-02, 8.34927738192282713e-03,
    4.07735619794433960e-03, 2.00839282608221426e-03, 9.94575127818085256e-04,
    4.94188604119464529e-04, 2.46086553308048320e-04, 1.22713347578489145e-04,
    6.12481350587048277e-05, 3.05882363070204933e-05, 1.52822594086518710e-05,
    7.63719763789976257e-06, 3.81729326499984022e-06, 1.90821271655393897e-06,
    9.53962033872796212e-07, 4.76932986787806447e-07, 2.38450502727733004e-07,
    1.19219925965311064e-07, 5.96081890512594801e-08, 2.98035035146522793e-08,
    1.49015548283650427e-08, 7.45071178983543006e-09, 3.72533402478845728e-09,
    1.86265972351304914e-09, 9.31327432419668166e-10, 4.65662906503378366e-10,
    2.32831183367650534e-10, 1.16415501727005193e-10, 5.82077208790270145e-11,
    2.91038504449710001e-11, 1.45519218910419849e-11, 7.27595983505748180e-12,
    3.63797954737865086e-12, 1.81898965030706607e-12, 9.09494784026388841e-13,
};

// B_{2n} / (2n (2n-1)), n = 1..9: Stirling series for ln Gamma.
constexpr std::array<double, 9> kStirling = {
    1.0 / 12.0,       -1.0 / 360.0,          1.0 / 1260.0,
    -1.0 / 1680.0,    1.0 / 1188.0,          -691.0 / 360360.0,
    1.0 / 156.0,      -3617.0 / 122400.0,    43867.0 / 244188.0,
};

// B_{2n} (2 - 2^{1-2n}) / (2n (2n-1)), n = 1..10: asymptotic series of
// ln Gamma(y+1) - ln Gamma(y+1/2) - (1/2) ln y in odd powers of 1/y.
constexpr std::array<double, 10> kWallisSeries = {
    1.0 / 8.0,
    -1.0 / 192.0,
    1.0 / 640.0,
    -17.0 / 14336.0,
    31.0 / 18432.0,
    -691.0 / 180224.0,
    5461.0 / 425984.0,
    -929569.0 / 15728640.0,
    3202291.0 / 8912896.0,
    -221930581.0 / 79691776.0,
};

// Below this the Wallis ratio is shifted upward before the asymptotic series.
constexpr double kAsymptoticStart = 16.0;
// Above this half-integer arguments also take the asymptotic route.
constexpr double kClosedFormLimit = 500.0;
constexpr long kMaxFiniteTwoX = 343;

// sum_{k>=2} (-1)^k (zeta(k) - 1) / k * z^k, |z| <= 1/2.
double zeta_tail(double z) {
    double sum = 0.0;
    for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
        const double k = static_cast<double>(i + 2);
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        sum = (sum + sign * kZetaMinusOne[i] / k) * z;
    }
    return sum * z;
}

// ln Gamma(2 + z)
double log_gamma_near_two(double z) {
    return z * (1.0 - kEulerGamma) + zeta_tail(z);
}

// ln Gamma(1 + z) = ln Gamma(2 + z) - ln(1 + z)
double log_gamma_near_one(double z) {
    return log_gamma_near_two(z) - std::log1p(z);
}

double log_gamma_stirling(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    for (std::size_t i = kStirling.size(); i-- > 0;) {
        series = series * inv2 + kStirling[i];
    }
    series *= inv;
    // The leading terms are carried in double-double: at x ~ 1000 they are
    // ~6e3 and must cancel against -x without losing the last bits.
    const DoubleDouble lead = detail::two_sum(x, -0.5) * detail::log_dd(x);
    return (lead - DoubleDouble{x, 0.0} + kHalfLog2Pi + DoubleDouble{series, 0.0}).value();
}

// Wallis ratio at y (given as an unevaluated sum) by the asymptotic series.
DoubleDouble wallis_asymptotic(const DoubleDouble& y) {
    const double inv = 1.0 / y.hi;
    const double inv2 = inv * inv;
    double series = 0.0;
    for (std::size_t i = kWallisSeries.size(); i-- > 0;) {
        series = series * inv2 + kWallisSeries[i];
    }
    series *= inv;
    const double root = std::sqrt(y.hi);
    DoubleDouble sqrt_y = detail::two_sum(root, root * 0.5 * (y.lo / y.hi));
    DoubleDouble growth = detail::two_sum(1.0, std::expm1(series));
    return sqrt_y * growth;
}

// Gamma(x+1)/Gamma(x+1/2) via R(x) = R(x+n) prod_{j<n} (x+1/2+j)/(x+1+j).
DoubleDouble wallis_shifted(double x) {
    DoubleDouble ratio{1.0, 0.0};
    long shift = 0;
    if (x < kAsymptoticStart) {
        shift = static_cast<long>(std::ceil(kAsymptoticStart - x));
    }
    for (long j = 0; j < shift; ++j) {
        const double jd = static_cast<double>(j);
        ratio = ratio * detail::two_sum(x, 0.5 + jd);
        ratio = ratio / detail::two_sum(x, 1.0 + jd);
    }
    const DoubleDouble y = detail::two_sum(x, static_cast<double>(shift));
    return ratio * wallis_asymptotic(y);
}

// Closed form when 2x is a nonnegative integer.
//   x = n:        n! / Gamma(n + 1/2) = prod_{j=1}^{n} j / (j - 1/2) / sqrt(pi)
//   x = n - 1/2:  Gamma(n + 1/2) / (n-1)! = sqrt(pi)/2 prod_{j=1}^{n-1} (j + 1/2) / j
DoubleDouble wallis_half_integer(long two_x) {
    DoubleDouble ratio{1.0, 0.0};
    if (two_x % 2 == 0) {
        const long n = two_x / 2;
        for (long j = 1; j <= n; ++j) {
            const double jd = static_cast<double>(j);
            ratio = ratio * jd / (jd - 0.5);
        }
        return ratio / kSqrtPi;
    }
    const long n = (two_x + 1) / 2;
    for (long j = 1; j < n; ++j) {
        const double jd = static_cast<double>(j);
        ratio = ratio * (jd + 0.5) / jd;
    }
    return ratio * kSqrtPi * 0.5;
}

// prod of the closed-form factors for Gamma(two_x/2) as mantissa * 2^exponent.
struct ScaledProduct {
    DoubleDouble mantissa{1.0, 0.0};
    long exponent = 0;
};

DoubleDouble wallis_ratio_dd(double x) {
    const double two_x = 2.0 * x;
    if (x <= kClosedFormLimit && two_x == std::floor(two_x)) {
        return wallis_half_integer(static_cast<long>(two_x));
    }
    return wallis_shifted(x);
}

DoubleDouble sqrt_dd(double v) {
    const double r = std::sqrt(v);
    const DoubleDouble square = detail::two_prod(r, r);
    return detail::quick_two_sum(r, ((v - square.hi) - square.lo) / (2.0 * r));
}

ScaledProduct half_integer_product(long two_x) {
    ScaledProduct p;
    auto rescale = [&p] {
        int e = 0;
        std::frexp(p.mantissa.hi, &e);
        if (e > 512) {
            p.mantissa.hi = std::ldexp(p.mantissa.hi, -e);
            p.mantissa.lo = std::ldexp(p.mantissa.lo, -e);
            p.exponent += e;
        }
    };
    if (two_x % 2 == 0) {
        const long n = two_x / 2;  // Gamma(n) = (n-1)!
        for (long j = 2; j < n; ++j) {
            p.mantissa = p.mantissa * static_cast<double>(j);
            rescale();
        }
    } else {
        const long n = (two_x - 1) / 2;  // Gamma(n + 1/2) = sqrt(pi) prod (j + 1/2)
        p.mantissa = kSqrtPi;
        for (long j = 0; j < n; ++j) {
            p.mantissa = p.mantissa * (static_cast<double>(j) + 0.5);
            rescale();
        }
    }
    return p;
}

}  // namespace

DegreesOfFreedom::DegreesOfFreedom(double m) : m_(m) {
    if (!std::isfinite(m) || !(m > 1.0)) {
        throw DomainError("degrees of freedom must be finite and > 1, got " + std::to_string(m));
    }
}

WallisArgument::WallisArgument(double x) : x_(x) {
    if (!std::isfinite(x) || !(x > -0.5)) {
        throw DomainError("Wallis ratio argument must be finite and > -1/2, got " +
                          std::to_string(x));
    }
}

double log_gamma(double x) {
    if (!std::isfinite(x) || !(x > 0.0)) {
        throw DomainError("log_gamma requires a finite positive argument");
    }
    if (x < 0.5) {
        return log_gamma_near_one(x) - std::log(x);
    }
    if (x < 1.5) {
        return log_gamma_near_one(x - 1.0);
    }
    if (x < 2.5) {
        return log_gamma_near_two(x - 2.0);
    }
    if (x < 10.0) {
        // Gamma(x) = (x-1)(x-2)...(x-n) Gamma(x-n), x - n in [1.5, 2.5)
        const long n = static_cast<long>(std::floor(x - 1.5));
        DoubleDouble product{1.0, 0.0};
        for (long i = 1; i <= n; ++i) {
            product = product * detail::two_sum(x, -static_cast<double>(i));
        }
        return detail::log(product) + log_gamma_near_two(x - static_cast<double>(n) - 2.0);
    }
    return log_gamma_stirling(x);
}

double gamma_half_integer(long two_x) {
    if (two_x < 1) {
        throw DomainError("gamma_half_integer requires two_x >= 1");
    }
    if (two_x > kMaxFiniteTwoX) {
        throw OverflowError("Gamma(" + std::to_string(two_x) +
                            "/2) overflows binary64; use log_gamma_half_integer");
    }
    const ScaledProduct p = half_integer_product(two_x);
    return std::ldexp(p.mantissa.value(), static_cast<int>(p.exponent));
}

double log_gamma_half_integer(long two_x) {
    if (two_x < 1) {
        throw DomainError("log_gamma_half_integer requires two_x >= 1");
    }
    const ScaledProduct p = half_integer_product(two_x);
    const DoubleDouble exponent_term = kLn2 * static_cast<double>(p.exponent);
    return (exponent_term + DoubleDouble{detail::log(p.mantissa), 0.0}).value();
}

double wallis_ratio_exact(WallisArgument x) {
    return wallis_ratio_dd(x.value()).value();
}

double j_exact(DegreesOfFreedom m) {
    const double half = 0.5 * m.value();
    const WallisArgument x(half - 1.0);
    return (wallis_ratio_dd(x.value()) / sqrt_dd(half)).value();
}

}  // namespace hedges
