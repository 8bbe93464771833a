#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "hedges/cli.hpp"

namespace hedges::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

const char* colour(ApproxKind kind) {
    static constexpr const char* palette[] = {"#d62728", "#1f77b4", "#ff7f0e", "#2ca02c",
                                              "#9467bd", "#8c564b", "#17becf"};
    return palette[kind.delta_index()];
}

std::string label(ApproxKind kind) {
    return kind.tag() == ApproxKind::Tag::Hedges ? "H (delta0)"
                                                  : "P" + std::to_string(kind.order()) +
                                                        " (delta" + std::to_string(kind.order()) + ")";
}

double nice_step(double range) {
    const double raw = range / 8.0;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    for (const double f : {1.0, 2.0, 5.0}) {
        if (f * magnitude >= raw) {
            return f * magnitude;
        }
    }
    return 10.0 * magnitude;
}

}  // namespace

std::string render_error_chart(const std::vector<ErrorRow>& rows,
                               const std::vector<ApproxKind>& kinds) {
    double m_lo = std::numeric_limits<double>::infinity();
    double m_hi = -m_lo;
    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -y_lo;
    for (const ErrorRow& row : rows) {
        m_lo = std::min(m_lo, row.m);
        m_hi = std::max(m_hi, row.m);
        for (const DeltaEntry& e : row.deltas) {
            if (e.value && *e.value > 0.0) {
                y_lo = std::min(y_lo, *e.value);
                y_hi = std::max(y_hi, *e.value);
            }
        }
    }
    if (!std::isfinite(m_lo)) {
        m_lo = 0.0;
        m_hi = 1.0;
    }
    if (m_hi == m_lo) {
        m_lo -= 0.5;
        m_hi += 0.5;
    }
    int dec_lo = std::isfinite(y_lo) ? static_cast<int>(std::floor(std::log10(y_lo))) : -16;
    int dec_hi = std::isfinite(y_hi) ? static_cast<int>(std::ceil(std::log10(y_hi))) : 0;
    if (dec_hi <= dec_lo) {
        dec_hi = dec_lo + 1;
    }

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double m) { return kLeft + (m - m_lo) / (m_hi - m_lo) * plot_w; };
    auto py = [&](double v) {
        return kTop + (dec_hi - std::log10(v)) / static_cast<double>(dec_hi - dec_lo) * plot_h;
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt("%.0f", kWidth)
        << "\" height=\"" << fmt("%.0f", kHeight) << "\" viewBox=\"0 0 " << fmt("%.0f", kWidth)
        << ' ' << fmt("%.0f", kHeight) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<text x=\"" << fmt("%.2f", kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-size=\"14\">Absolute error of correction-factor approximations</text>\n";

    // Frame and axis labels.
    svg << "<rect x=\"" << fmt("%.2f", kLeft) << "\" y=\"" << fmt("%.2f", kTop) << "\" width=\""
        << fmt("%.2f", plot_w) << "\" height=\"" << fmt("%.2f", plot_h)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt("%.2f", kLeft + plot_w / 2) << "\" y=\""
        << fmt("%.2f", kHeight - 15) << "\" text-anchor=\"middle\">m</text>\n";
    svg << "<text x=\"18\" y=\"" << fmt("%.2f", kTop + plot_h / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << fmt("%.2f", kTop + plot_h / 2)
        << ")\">absolute error</text>\n";

    // Decade ticks on the log axis.
    for (int d = dec_lo; d <= dec_hi; ++d) {
        const double y = py(std::pow(10.0, d));
        svg << "<line x1=\"" << fmt("%.2f", kLeft) << "\" y1=\"" << fmt("%.2f", y) << "\" x2=\""
            << fmt("%.2f", kLeft + plot_w) << "\" y2=\"" << fmt("%.2f", y)
            << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << fmt("%.2f", kLeft - 6) << "\" y=\"" << fmt("%.2f", y + 4)
            << "\" text-anchor=\"end\">1e" << d << "</text>\n";
    }
    const double step = nice_step(m_hi - m_lo);
    const double first_tick = std::ceil(m_lo / step) * step;
    for (int i = 0;; ++i) {
        const double t = first_tick + i * step;
        if (t > m_hi + 1e-9 * step) {
            break;
        }
        const double x = px(t);
        svg << "<line x1=\"" << fmt("%.2f", x) << "\" y1=\"" << fmt("%.2f", kTop + plot_h)
            << "\" x2=\"" << fmt("%.2f", x) << "\" y2=\"" << fmt("%.2f", kTop + plot_h + 5)
            << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt("%.2f", x) << "\" y=\"" << fmt("%.2f", kTop + plot_h + 20)
            << "\" text-anchor=\"middle\">" << fmt("%g", t) << "</text>\n";
    }

    // One polyline per contiguous run of plottable points.
    for (const ApproxKind kind : kinds) {
        const std::string dash = kind.tag() == ApproxKind::Tag::Hedges
                                     ? " stroke-dasharray=\"6 4\""
                                     : "";
        std::string points;
        auto flush = [&] {
            if (!points.empty()) {
                svg << "<polyline fill=\"none\" stroke=\"" << colour(kind)
                    << "\" stroke-width=\"1.5\"" << dash << " points=\"" << points << "\"/>\n";
                points.clear();
            }
        };
        for (const ErrorRow& row : rows) {
            const DeltaEntry* e = row.find(kind);
            if (e == nullptr || !e->value || !(*e->value > 0.0)) {
                flush();
                continue;
            }
            if (!points.empty()) {
                points += ' ';
            }
            points += fmt("%.2f", px(row.m)) + "," + fmt("%.2f", py(*e->value));
        }
        flush();
    }

    // Legend.
    double ly = kTop + 10;
    for (const ApproxKind kind : kinds) {
        const double lx = kLeft + plot_w + 15;
        svg << "<line x1=\"" << fmt("%.2f", lx) << "\" y1=\"" << fmt("%.2f", ly) << "\" x2=\""
            << fmt("%.2f", lx + 25) << "\" y2=\"" << fmt("%.2f", ly) << "\" stroke=\"" << colour(kind)
            << "\" stroke-width=\"1.5\""
            << (kind.tag() == ApproxKind::Tag::Hedges ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
        svg << "<text x=\"" << fmt("%.2f", lx + 32) << "\" y=\"" << fmt("%.2f", ly + 4) << "\">"
            << label(kind) << "</text>\n";
        ly += 20;
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace hedges::cli
