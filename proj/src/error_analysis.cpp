#include "hedges/error_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "hedges/errors.hpp"

namespace hedges {

namespace {

DeltaEntry delta_entry(ApproxKind kind, DegreesOfFreedom m) {
    try {
        return {kind, delta(kind, m), {}};
    } catch (const DomainError& e) {
        return {kind, std::nullopt, e.what()};
    }
}

ErrorRow error_row(double m, const std::vector<ApproxKind>& kinds) {
    ErrorRow row{m, {}};
    row.deltas.reserve(kinds.size());
    const DegreesOfFreedom dof(m);
    for (const ApproxKind kind : kinds) {
        row.deltas.push_back(delta_entry(kind, dof));
    }
    return row;
}

}  // namespace

const DeltaEntry* ErrorRow::find(ApproxKind kind) const {
    const auto it = std::find_if(deltas.begin(), deltas.end(),
                                 [kind](const DeltaEntry& e) { return e.kind == kind; });
    return it == deltas.end() ? nullptr : &*it;
}

double delta(ApproxKind kind, DegreesOfFreedom m) {
    if (kind.tag() == ApproxKind::Tag::Exact) {
        throw std::invalid_argument("delta is defined for Hedges and Mortici kinds only");
    }
    double approx = 0.0;
    try {
        approx = approx_value(kind, m);
    } catch (const RadicandNonpositive& e) {
        if (e.radicand() != 0.0) {
            throw;
        }
    }
    return std::abs(approx - j_exact(m));
}

std::vector<ErrorRow> reproduce_table1() {
    const auto all = ApproxKind::approximations();
    const std::vector<ApproxKind> kinds(all.begin(), all.end());
    std::vector<ErrorRow> rows;
    for (const double m : kTableM) {
        rows.push_back(error_row(m, kinds));
    }
    return rows;
}

std::array<ApproxKind, 7> ordering_chain() {
    return {ApproxKind::mortici(6), ApproxKind::mortici(5), ApproxKind::mortici(4),
            ApproxKind::mortici(3), ApproxKind::mortici(2), ApproxKind::hedges(),
            ApproxKind::mortici(1)};
}

OrderingReport verify_ordering(DegreesOfFreedom m, double floor) {
    if (m.value() < 10.0) {
        throw DomainError("verify_ordering is defined for m >= 10");
    }
    if (!(floor >= 0.0)) {
        throw std::invalid_argument("floor must be nonnegative");
    }
    const auto chain = ordering_chain();
    std::array<double, 7> values{};
    OrderingReport report{m.value(), floor, true, {}, {}};
    for (std::size_t i = 0; i < chain.size(); ++i) {
        values[i] = delta(chain[i], m);
        if (values[i] < floor) {
            report.below_floor.push_back(chain[i]);
        }
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        OrderingLink link{chain[i], chain[i + 1], values[i], values[i + 1], LinkStatus::Holds};
        if (values[i] < floor && values[i + 1] < floor) {
            link.status = LinkStatus::Incomparable;
        } else if (!(values[i] < values[i + 1])) {
            link.status = LinkStatus::Violated;
            report.holds = false;
        }
        report.links.push_back(link);
    }
    return report;
}

void validate(const SweepConfig& config) {
    if (!std::isfinite(config.m_start) || !std::isfinite(config.m_end) ||
        !std::isfinite(config.step)) {
        throw std::invalid_argument("sweep range must be finite");
    }
    if (!(config.m_start > 1.0)) {
        throw std::invalid_argument("sweep start must be > 1");
    }
    if (!(config.m_end >= config.m_start)) {
        throw std::invalid_argument("sweep end must be >= start");
    }
    if (!(config.step > 0.0)) {
        throw std::invalid_argument("sweep step must be > 0");
    }
    if (config.kinds.empty()) {
        throw std::invalid_argument("sweep needs at least one approximation kind");
    }
    for (const ApproxKind kind : config.kinds) {
        if (kind.tag() == ApproxKind::Tag::Exact) {
            throw std::invalid_argument("the exact kind has no error to sweep");
        }
    }
}

std::vector<double> sweep_grid(const SweepConfig& config) {
    validate(config);
    // Relative slack so that e.g. 0.1-steps land on m_end despite rounding.
    const double span = (config.m_end - config.m_start) / config.step;
    const auto count = static_cast<std::size_t>(std::floor(span * (1.0 + 1e-12) + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = config.m_start + static_cast<double>(i) * config.step;
    }
    return grid;
}

std::vector<ErrorRow> sweep(const SweepConfig& config) {
    const std::vector<double> grid = sweep_grid(config);
    std::vector<ErrorRow> rows(grid.size());

    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    const std::size_t chunk = (grid.size() + workers - 1) / workers;
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            rows[i] = error_row(grid[i], config.kinds);
        }
    };
    if (workers == 1 || grid.size() < 64) {
        work(0, grid.size());
        return rows;
    }
    std::vector<std::jthread> threads;
    for (std::size_t begin = 0; begin < grid.size(); begin += chunk) {
        threads.emplace_back(work, begin, std::min(grid.size(), begin + chunk));
    }
    threads.clear();
    return rows;
}

}  // namespace hedges
