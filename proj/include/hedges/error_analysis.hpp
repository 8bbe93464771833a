#pragma once

// Absolute errors delta_i(m) = |approximation(m) - J(m)| of Hedges' H
// (column 0) and P_1..P_6 (columns 1..6) against the j_exact reference.
// Comparisons below ~1e-13 are limited by binary64 and by the reference
// itself; verify_ordering's floor parameter exists for that regime.

#include <optional>
#include <string>
#include <vector>

#include "hedges/approximations.hpp"

namespace hedges {

struct DeltaEntry {
    ApproxKind kind;
    /// Empty when the approximation is undefined at m (see note).
    std::optional<double> value;
    std::string note;
};

struct ErrorRow {
    double m;
    std::vector<DeltaEntry> deltas;

    /// Entry for kind, or nullptr if the row does not carry it.
    const DeltaEntry* find(ApproxKind kind) const;
};

struct SweepConfig {
    double m_start;
    double m_end;
    double step;
    std::vector<ApproxKind> kinds;
};

/// |approx_value(kind, m) - j_exact(m)|. A radicand that is exactly zero
/// counts as the approximation taking the value 0; a negative radicand
/// throws RadicandNonpositive. Throws std::invalid_argument for Exact.
double delta(ApproxKind kind, DegreesOfFreedom m);

/// Rows for m = 10, 30, 50, 70, 100, 200, each with all seven deltas.
std::vector<ErrorRow> reproduce_table1();

/// Degrees of freedom used by reproduce_table1().
inline constexpr double kTableM[] = {10, 30, 50, 70, 100, 200};

inline constexpr double kDefaultOrderingFloor = 1e-13;

enum class LinkStatus { Holds, Violated, Incomparable };

/// One adjacent comparison `smaller < larger` in the ordering chain.
struct OrderingLink {
    ApproxKind smaller;
    ApproxKind larger;
    double smaller_delta;
    double larger_delta;
    LinkStatus status;
};

struct OrderingReport {
    double m;
    double floor;
    bool holds;
    std::vector<OrderingLink> links;
    /// Kinds whose delta is below floor.
    std::vector<ApproxKind> below_floor;
};

/// Chain delta6 < delta5 < delta4 < delta3 < delta2 < delta0 < delta1.
std::array<ApproxKind, 7> ordering_chain();

/// Checks the chain at m. A link whose two deltas are both below `floor` is
/// Incomparable and does not fail the chain. Throws DomainError for m < 10.
OrderingReport verify_ordering(DegreesOfFreedom m, double floor = kDefaultOrderingFloor);

/// Throws std::invalid_argument unless m_start > 1, m_end >= m_start,
/// step > 0 (all finite) and kinds is nonempty without Exact.
void validate(const SweepConfig& config);

/// Grid points m_start + i*step <= m_end, ascending.
std::vector<double> sweep_grid(const SweepConfig& config);

/// One row per grid point. Points where an approximation is undefined keep
/// an empty value and a note instead of aborting the sweep. Rows are
/// evaluated in parallel; output is identical to sequential evaluation.
std::vector<ErrorRow> sweep(const SweepConfig& config);

}  // namespace hedges
