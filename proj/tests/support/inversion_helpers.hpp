#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "layered/delta_train.hpp"
#include "layered/lattice.hpp"

namespace layered::testing {

/// Cutoff that keeps every amplitude used by the interior checks and their arbitration.
inline double inversion_cutoff(const std::vector<double>& tau) {
    double prefix = 0.0;
    double needed = 0.0;
    for (std::size_t j = 0; j < tau.size(); ++j) {
        const double next = j + 1 < tau.size() ? tau[j + 1] : 0.0;
        needed = std::max(needed, prefix + 4.0 * tau[j] + 5.0 * next);
        prefix += tau[j];
    }
    return std::max(needed, prefix) * (1.0 + 1e-9);
}

/// Multiplies the amplitude of the event at `time` by `factor`.
inline DeltaTrain scale_event(const DeltaTrain& train, double time, double factor) {
    std::vector<Event> events = train.events();
    for (Event& e : events) {
        if (times_coincide(e.time, time)) {
            e.amplitude *= factor;
        }
    }
    return DeltaTrain::from_sorted(std::move(events));
}

}  // namespace layered::testing
