#pragma once

// Standardized mean difference of two groups and its small-sample bias
// correction. Group i is the reference: the difference is mean(j) - mean(i),
// so a positive g* means the second group's mean is larger.

#include <span>
#include <vector>

#include "hedges/approximations.hpp"

namespace hedges {

/// One group's observations with mean and unbiased (n - 1) variance.
struct GroupSample {
    std::vector<double> values;
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;
};

struct EffectSizeResult {
    double mean_difference;
    double pooled_sd;
    double cohens_d;
    ApproxKind correction;
    double correction_value;
    double g_star;
    DegreesOfFreedom m;
};

/// Corrected two-pass mean and variance.
/// Throws InsufficientData for fewer than 2 values and NonFinite on NaN/inf.
GroupSample summarize(std::span<const double> values);

/// sqrt(((n_j - 1) s_j^2 + (n_i - 1) s_i^2) / (n_i + n_j - 2))
double pooled_sd(const GroupSample& gi, const GroupSample& gj);

/// g* = correction(m) * (mean_j - mean_i) / s_p with m = n_i + n_j - 2.
/// Throws ZeroPooledSD when s_p == 0 and propagates RadicandNonpositive.
EffectSizeResult hedges_g_star(const GroupSample& gi, const GroupSample& gj, ApproxKind kind);

}  // namespace hedges
