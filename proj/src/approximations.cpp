#include "hedges/approximations.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hedges/errors.hpp"

namespace hedges {

namespace {

// Wallis-ratio approximants, ascending powers of x.
constexpr std::array<Rational, 2> kWallis1 = {{{1, 4}, {1, 1}}};
constexpr std::array<Rational, 3> kWallis2 = {{{1, 8}, {1, 2}, {1, 1}}};
constexpr std::array<Rational, 4> kWallis3 = {{{5, 128}, {9, 32}, {3, 4}, {1, 1}}};
// No constant term.
constexpr std::array<Rational, 5> kWallis4 = {{{0, 1}, {1, 8}, {1, 2}, {1, 1}, {1, 1}}};
constexpr std::array<Rational, 6> kWallis5 = {
    {{3, 8192}, {75, 2048}, {35, 128}, {25, 32}, {5, 4}, {1, 1}}};
constexpr std::array<Rational, 7> kWallis6 = {
    {{11, 1024}, {3, 256}, {15, 128}, {1, 2}, {9, 8}, {3, 2}, {1, 1}}};

// Correction-factor radicands, ascending powers of u = 1/m.
constexpr std::array<Rational, 2> kRadicand1 = {{{1, 1}, {-3, 2}}};
constexpr std::array<Rational, 3> kRadicand2 = {{{1, 1}, {-3, 1}, {5, 2}}};
constexpr std::array<Rational, 4> kRadicand3 = {{{1, 1}, {-9, 2}, {57, 8}, {-63, 16}}};
constexpr std::array<Rational, 5> kRadicand4 = {{{1, 1}, {-6, 1}, {14, 1}, {-15, 1}, {6, 1}}};
constexpr std::array<Rational, 6> kRadicand5 = {
    {{1, 1}, {-15, 2}, {185, 8}, {-585, 16}, {3755, 128}, {-2409, 256}}};
constexpr std::array<Rational, 7> kRadicand6 = {
    {{1, 1}, {-9, 1}, {69, 2}, {-72, 1}, {687, 8}, {-441, 8}, {247, 16}}};

// Largest real root of each radicand in m (exact for orders 1, 3, 4;
// 3/2 + 0.4782947599182685528... for order 5).
constexpr std::array<double, 6> kMinimalValidM = {1.5, 1.0, 1.5, 2.0, 1.9782947599182686, 1.0};

void check_order(int order) {
    if (order < ApproxKind::kMinOrder || order > ApproxKind::kMaxOrder) {
        throw std::out_of_range("approximation order must be in 1..6, got " +
                                std::to_string(order));
    }
}

double horner(std::span<const Rational> coefficients, double t) {
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        acc = acc * t + it->to_double();
    }
    return acc;
}

std::string format_m(double m) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", m);
    return buf;
}

[[noreturn]] void throw_nonpositive_m(int order, double radicand, double m) {
    throw RadicandNonpositive(order, radicand,
                              "radicand nonpositive; p" + std::to_string(order) + " requires m > " +
                                  format_m(kMinimalValidM[order - 1]) + " (radicand " +
                                  format_m(radicand) + " at m = " + format_m(m) + ")");
}

[[noreturn]] void throw_nonpositive_x(int order, double radicand, double x) {
    throw RadicandNonpositive(order, radicand,
                              "radicand nonpositive; order-" + std::to_string(order) +
                                  " Wallis approximant undefined at x = " + format_m(x) +
                                  " (radicand " + format_m(radicand) + ")");
}

}  // namespace

ApproxKind ApproxKind::mortici(int order) {
    check_order(order);
    return ApproxKind(Tag::Mortici, order);
}

ApproxKind ApproxKind::parse(std::string_view name) {
    if (name == "exact") {
        return exact();
    }
    if (name == "hedges") {
        return hedges();
    }
    if (name.size() == 2 && name[0] == 'p' && name[1] >= '1' && name[1] <= '6') {
        return mortici(name[1] - '0');
    }
    throw std::invalid_argument("unknown approximation kind '" + std::string(name) +
                                "' (expected exact, hedges, p1..p6)");
}

std::array<ApproxKind, 7> ApproxKind::approximations() {
    return {hedges(),     mortici(1), mortici(2), mortici(3),
            mortici(4),   mortici(5), mortici(6)};
}

std::string ApproxKind::name() const {
    switch (tag_) {
        case Tag::Exact:
            return "exact";
        case Tag::Hedges:
            return "hedges";
        case Tag::Mortici:
            return "p" + std::to_string(order_);
    }
    return {};
}

int ApproxKind::delta_index() const {
    if (tag_ == Tag::Exact) {
        throw std::invalid_argument("the exact kind has no error column");
    }
    return order_;
}

double hedges_h(double m) {
    if (!std::isfinite(m) || !(m > 0.25)) {
        throw DomainError("Hedges' approximation requires m > 1/4, got " + format_m(m));
    }
    return 1.0 - 3.0 / (4.0 * m - 1.0);
}

WallisPolynomial wallis_polynomial(int order) {
    check_order(order);
    static constexpr std::array<std::span<const Rational>, 6> tables = {
        kWallis1, kWallis2, kWallis3, kWallis4, kWallis5, kWallis6};
    return {order, tables[order - 1], 2 * order};
}

RadicandPolynomial radicand_polynomial(int order) {
    check_order(order);
    static constexpr std::array<std::span<const Rational>, 6> tables = {
        kRadicand1, kRadicand2, kRadicand3, kRadicand4, kRadicand5, kRadicand6};
    return {order, tables[order - 1], 2 * order};
}

double minimal_valid_m(int order) {
    check_order(order);
    return kMinimalValidM[order - 1];
}

double wallis_radicand(int order, double x) {
    return horner(wallis_polynomial(order).coefficients, x);
}

double radicand_value(int order, double m) {
    return horner(radicand_polynomial(order).coefficients, 1.0 / m);
}

double even_root(double value, int degree) {
    switch (degree) {
        case 2:
            return std::sqrt(value);
        case 4:
            return std::sqrt(std::sqrt(value));
        case 6:
            return std::cbrt(std::sqrt(value));
        case 8:
            return std::sqrt(std::sqrt(std::sqrt(value)));
        case 10:
            return std::pow(std::sqrt(value), 0.2);
        case 12:
            return std::cbrt(std::sqrt(std::sqrt(value)));
        default:
            return std::pow(value, 1.0 / degree);
    }
}

double wallis_approx(int order, WallisArgument x) {
    const double radicand = wallis_radicand(order, x.value());
    if (!(radicand > 0.0)) {
        throw_nonpositive_x(order, radicand, x.value());
    }
    return even_root(radicand, 2 * order);
}

double require_positive_radicand(int order, double m) {
    const double radicand = radicand_value(order, m);
    if (!(radicand > 0.0)) {
        throw_nonpositive_m(order, radicand, m);
    }
    return radicand;
}

double p_approx(int order, DegreesOfFreedom m) {
    return even_root(require_positive_radicand(order, m.value()), 2 * order);
}

double approx_value(ApproxKind kind, DegreesOfFreedom m) {
    switch (kind.tag()) {
        case ApproxKind::Tag::Exact:
            return j_exact(m);
        case ApproxKind::Tag::Hedges:
            return hedges_h(m.value());
        case ApproxKind::Tag::Mortici:
            return p_approx(kind.order(), m);
    }
    throw std::logic_error("unhandled ApproxKind");
}

}  // namespace hedges
