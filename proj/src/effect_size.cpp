#include "hedges/effect_size.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hedges/errors.hpp"

namespace hedges {

namespace {

void require_group(const GroupSample& g) {
    if (g.n < 2) {
        throw InsufficientData("each group needs at least 2 observations, got " +
                               std::to_string(g.n));
    }
}

}  // namespace

GroupSample summarize(std::span<const double> values) {
    if (values.size() < 2) {
        throw InsufficientData("at least 2 observations are required, got " +
                               std::to_string(values.size()));
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw NonFinite("observations must be finite");
        }
    }
    const auto n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    const double mean = sum / n;

    // Second pass; the correction term removes the first-order error in mean.
    double squares = 0.0;
    double residual = 0.0;
    for (double v : values) {
        const double d = v - mean;
        squares += d * d;
        residual += d;
    }
    const double variance = std::max(0.0, (squares - residual * residual / n) / (n - 1.0));

    return GroupSample{std::vector<double>(values.begin(), values.end()), values.size(),
                       mean + residual / n, variance};
}

double pooled_sd(const GroupSample& gi, const GroupSample& gj) {
    require_group(gi);
    require_group(gj);
    const double ni = static_cast<double>(gi.n);
    const double nj = static_cast<double>(gj.n);
    return std::sqrt(((nj - 1.0) * gj.variance + (ni - 1.0) * gi.variance) / (nj + ni - 2.0));
}

EffectSizeResult hedges_g_star(const GroupSample& gi, const GroupSample& gj, ApproxKind kind) {
    const double sp = pooled_sd(gi, gj);
    if (!(sp > 0.0)) {
        throw ZeroPooledSD("pooled standard deviation is zero; effect size is undefined");
    }
    const DegreesOfFreedom m(static_cast<double>(gi.n + gj.n - 2));
    const double diff = gj.mean - gi.mean;
    const double d = diff / sp;
    const double correction = approx_value(kind, m);
    return EffectSizeResult{diff, sp, d, kind, correction, correction * d, m};
}

}  // namespace hedges
