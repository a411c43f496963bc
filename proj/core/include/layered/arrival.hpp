#pragma once

#include <span>
#include <vector>

#include "layered/delta_train.hpp"
#include "layered/lattice.hpp"

namespace layered {

/// Strictly increasing positive arrival times (sigma_1 < ... < sigma_d).
class ArrivalVector {
public:
    ArrivalVector() = default;
    /// Throws ValidationError unless the values are positive and strictly increasing.
    explicit ArrivalVector(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double back() const { return values_.back(); }

private:
    std::vector<double> values_;
};

/// Sorted distinct values of <k, tau> over initial-interval points with
/// 0 < <k, tau> <= <1, tau>.
ArrivalVector phi_map(std::span<const double> tau, const EnumerationLimits& limits = {});

/// True when the values <k, tau> over the initial-interval points up to <1, tau>
/// are pairwise separated by more than the merge tolerance. Floating-point
/// surrogate for tau avoiding every collision hyperplane.
bool is_generic(std::span<const double> tau, const EnumerationLimits& limits = {});

/// Integer matrix A (as rows) with A tau = Phi(tau), rows ordered by arrival time.
struct FactorizationResult {
    std::vector<LatticePoint> rows;
    std::vector<double> tau;

    std::size_t last_interface() const noexcept { return tau.empty() ? 0 : tau.size() - 1; }
    /// A tau, one entry per row.
    std::vector<double> times() const;
};

/// Lattice points the solver may use to explain an arrival.
enum class CandidateSet {
    InitialInterval,  ///< the full initial-interval lattice (arrival-time map)
    ReflectionSupport ///< k_0 = 1 only (arrivals present in a reflection train)
};

struct ArrivalInversionOptions {
    CandidateSet candidates = CandidateSet::InitialInterval;
    double relative_tolerance = kMergeRelativeTolerance;
    EnumerationLimits limits = {};
};

/// Recovers (A, tau) from a primary subvector of Phi(tau) by peeling off one
/// travel time per stage: tau_0 is the first arrival, and each later tau_{n+1} is
/// the earliest unexplained arrival minus tau_0 + ... + tau_n.
///
/// Throws InversionError if a computed travel time is not positive, if an arrival
/// is explained by two lattice points, or if fewer than two travel times result.
FactorizationResult invert_arrival_times(const ArrivalVector& sigma, const ArrivalInversionOptions& options = {});

/// Rows of the matrix A of the cell containing tau. Throws InversionError if tau
/// is not generic.
std::vector<LatticePoint> cell_signature(std::span<const double> tau, const EnumerationLimits& limits = {});

}  // namespace layered
