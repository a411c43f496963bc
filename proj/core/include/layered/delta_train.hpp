#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace layered {

/// Two arrival times coincide when |t - t'| <= kMergeRelativeTolerance * max(1, t).
inline constexpr double kMergeRelativeTolerance = 1e-9;
/// Merged amplitudes at or below this magnitude are dropped.
inline constexpr double kZeroAmplitude = 1e-14;

bool times_coincide(double a, double b) noexcept;

struct Event {
    double time = 0.0;
    double amplitude = 0.0;

    friend bool operator==(const Event&, const Event&) = default;
};

/// Time-domain Green's function sum_j amplitude_j * delta(t - time_j) with
/// strictly increasing times.
class DeltaTrain {
public:
    DeltaTrain() = default;

    /// Sorts raw impulses, sums amplitudes of coinciding times and drops zeros.
    static DeltaTrain merge(std::vector<Event> raw);

    /// Adopts events that are already strictly increasing in time; throws
    /// ValidationError otherwise.
    static DeltaTrain from_sorted(std::vector<Event> events);

    const std::vector<Event>& events() const noexcept { return events_; }
    std::size_t size() const noexcept { return events_.size(); }
    bool empty() const noexcept { return events_.empty(); }
    const Event& operator[](std::size_t i) const { return events_[i]; }
    auto begin() const noexcept { return events_.begin(); }
    auto end() const noexcept { return events_.end(); }

    /// Sum of squared amplitudes.
    double energy() const noexcept;

    std::vector<double> times() const;

private:
    explicit DeltaTrain(std::vector<Event> events) : events_(std::move(events)) {}

    std::vector<Event> events_;
};

/// Largest amplitude difference between two trains whose events pair up by time.
/// Unpaired events contribute their full amplitude. Returns 0 for two empty trains.
double max_amplitude_mismatch(const DeltaTrain& lhs, const DeltaTrain& rhs);

}  // namespace layered
