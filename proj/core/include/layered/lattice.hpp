#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace layered {

/// Integer multi-index k = (k_0, ..., k_n) labelling one scattering amplitude.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<int> entries) : entries_(std::move(entries)) {}
    LatticePoint(std::initializer_list<int> entries) : entries_(entries) {}

    /// Zero vector of the given dimension.
    static LatticePoint zeros(std::size_t dimension);
    /// Ones in coordinates 0..last, zeros after.
    static LatticePoint ones_through(std::size_t dimension, std::size_t last);
    /// Standard basis vector e^j.
    static LatticePoint unit(std::size_t dimension, std::size_t j);

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }
    std::span<const int> entries() const noexcept { return entries_; }

    LatticePoint& operator+=(const LatticePoint& other);
    friend LatticePoint operator+(LatticePoint lhs, const LatticePoint& rhs) { return lhs += rhs; }
    friend LatticePoint operator*(int scale, LatticePoint k);

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

private:
    std::vector<int> entries_;
};

std::string to_string(const LatticePoint& k);

/// k in Z_+^{n+1} supported on an initial interval: k_j = 0 implies k_{j+1} = 0.
bool in_initial_interval_lattice(const LatticePoint& k);

/// Initial-interval points with k_0 = 1; the only indices with nonzero reflection amplitude.
bool in_reflection_support(const LatticePoint& k);

/// Points of {0} x Z_+^n; the only indices with nonzero transmission amplitude.
bool in_transmission_support(const LatticePoint& k);

/// <k, tau> accumulated left to right. Throws DimensionError on length mismatch.
double arrival_time(const LatticePoint& k, std::span<const double> tau);

/// Arrival time of transmission index k for tau' = (tau_0, ..., tau_{n+1}):
/// tau_{n+1}/2 + <k + 1/2, tau>.
double transmission_arrival_time(const LatticePoint& k, std::span<const double> tau_prime);

struct EnumerationLimits {
    std::size_t max_points = 10'000'000;
};

/// Which values the leading coordinate may take during initial-interval enumeration.
enum class LeadingEntry {
    Any,       ///< k_0 >= 1 (the full initial-interval lattice minus the origin)
    ExactlyOne ///< k_0 == 1 (reflection support)
};

struct TimedPoint {
    LatticePoint point;
    double time = 0.0;
};

using LatticeVisitor = std::function<void(const LatticePoint&, double time)>;

/// Visits every nonzero initial-interval point with <k, tau> <= cutoff, in
/// depth-first order. Throws ResourceError once more than `limits.max_points`
/// points have been produced.
void for_each_initial_interval_point(std::span<const double> tau, double cutoff, LeadingEntry leading,
                                     const LatticeVisitor& visit, const EnumerationLimits& limits = {});

/// Visits every k in {0} x Z_+^n whose transmission arrival time is <= cutoff.
void for_each_transmission_point(std::span<const double> tau_prime, double cutoff, const LatticeVisitor& visit,
                                 const EnumerationLimits& limits = {});

/// Every k in the initial-interval lattice with 0 < <k, tau> <= cutoff, sorted by
/// time with ties broken lexicographically.
std::vector<LatticePoint> enumerate_reflection_lattice(std::span<const double> tau, double cutoff,
                                                       const EnumerationLimits& limits = {});

/// Same as enumerate_reflection_lattice with k_0 restricted to 1.
std::vector<LatticePoint> enumerate_reflection_support(std::span<const double> tau, double cutoff,
                                                       const EnumerationLimits& limits = {});

/// Every k in {0} x Z_+^n with arrival time <= cutoff, paired with that time and sorted.
std::vector<TimedPoint> enumerate_transmission_lattice(std::span<const double> tau_prime, double cutoff,
                                                       const EnumerationLimits& limits = {});

/// Inclusive cutoff with a rounding allowance for sums of travel times.
double inclusive_cutoff(double cutoff) noexcept;

}  // namespace layered
