#pragma once

// Unevaluated-sum (hi + lo) arithmetic used for compensated products.
// Relies on std::fma being exact-rounded, which holds on every supported
// target.

#include <cmath>

namespace hedges::detail {

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    double value() const { return hi + lo; }
};

inline DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleDouble quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DoubleDouble operator*(const DoubleDouble& a, double b) {
    DoubleDouble p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(const DoubleDouble& a, double b) {
    const double q1 = a.hi / b;
    DoubleDouble p = two_prod(q1, b);
    DoubleDouble r = two_sum(a.hi, -p.hi);
    r.lo += a.lo - p.lo;
    const double q2 = (r.hi + r.lo) / b;
    return quick_two_sum(q1, q2);
}

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
    const double q1 = a.hi / b.hi;
    DoubleDouble r = a;
    DoubleDouble p = b * q1;
    DoubleDouble d = two_sum(r.hi, -p.hi);
    d.lo += r.lo - p.lo;
    const double q2 = (d.hi + d.lo) / b.hi;
    return quick_two_sum(q1, q2);
}

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }

inline constexpr DoubleDouble kLn2{0.69314718055994529, 2.3190468138462996e-17};

/// ln(x) for finite x > 0 to roughly 100 bits:
/// x = f 2^e with f in [1/sqrt2, sqrt2), ln f = 2 atanh((f-1)/(f+1)).
inline DoubleDouble log_dd(double x) {
    int e = 0;
    double f = std::frexp(x, &e);
    if (f < 0.70710678118654752) {
        f *= 2.0;
        --e;
    }
    const DoubleDouble s = DoubleDouble{f - 1.0, 0.0} / two_sum(f, 1.0);
    const DoubleDouble s2 = s * s;
    // sum_{k=0}^{K} s^{2k} / (2k+1); |s| < 0.172 so K = 22 reaches 1e-34.
    constexpr int kTerms = 22;
    DoubleDouble series = DoubleDouble{1.0, 0.0} / static_cast<double>(2 * kTerms + 1);
    for (int k = kTerms - 1; k >= 0; --k) {
        series = series * s2 + DoubleDouble{1.0, 0.0} / static_cast<double>(2 * k + 1);
    }
    const DoubleDouble log_f = s * series * 2.0;
    return kLn2 * static_cast<double>(e) + log_f;
}

/// ln(hi + lo) as a double-double.
inline DoubleDouble log_dd(const DoubleDouble& a) {
    return log_dd(a.hi) + DoubleDouble{std::log1p(a.lo / a.hi), 0.0};
}

/// ln(hi + lo) to about one ulp.
inline double log(const DoubleDouble& a) { return log_dd(a).value(); }

}  // namespace hedges::detail
