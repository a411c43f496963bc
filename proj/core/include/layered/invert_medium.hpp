#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "layered/amplitude_inversion.hpp"
#include "layered/arrival.hpp"
#include "layered/delta_train.hpp"
#include "layered/medium.hpp"

namespace layered {

/// Which value was kept for an interface.
enum class Choice { Recursive, SevenPoints };

/// Cross-check of the recursive and seven-points values at one interior interface.
struct InteriorCheck {
    std::size_t interface = 0;
    double recursive = 0.0;
    std::optional<double> seven_points;
    /// Value common to two eight-amplitude evaluations, computed only on a discrepancy.
    std::optional<double> arbitration;
    bool discrepancy = false;
    Choice choice = Choice::Recursive;
    std::string note;
};

struct InversionReport {
    Medium medium;
    FactorizationResult factorization;
    MatchedAmplitudes matched;
    std::vector<InteriorCheck> checks;
    /// False when any interior interface showed a discrepancy.
    bool consistent = true;
};

struct InversionOptions {
    /// Recursive and seven-points values disagreeing by more than this flag a discrepancy.
    double discrepancy_tolerance = 1e-7;
    /// Two eight-amplitude candidates closer than this (relative) count as the same value.
    double arbitration_tolerance = 1e-6;
    double relative_tolerance = kMergeRelativeTolerance;
    EnumerationLimits limits = {};
};

/// Recovers (tau, R) from a reflection train: travel times from the event times,
/// then reflection coefficients from the amplitudes. Each interior coefficient
/// computed by the recursion is cross-checked with the seven-points formula; on a
/// disagreement, two eight-amplitude evaluations that avoid primary amplitudes
/// decide which value is kept, and the recursion continues from the kept value.
/// Errors are InversionError with the failing stage in stage().
InversionReport invert_medium(const DeltaTrain& train, const InversionOptions& options = {});

}  // namespace layered
