#pragma once

#include <cstddef>

#include "layered/delta_train.hpp"
#include "layered/medium.hpp"

namespace layered {

// Brute-force ray tracing through the layer stack. Each path is followed segment
// by segment: a downgoing wave meeting interface j reflects with R_j or transmits
// with sqrt(1 - R_j^2); an upgoing wave meeting it reflects with -R_j or transmits
// with sqrt(1 - R_j^2). One layer transit costs half of that layer's two-way time.
// Nothing here uses the closed-form amplitudes, so the trains it produces are an
// independent check on them. Cost grows exponentially with the cutoff.

struct OracleLimits {
    std::size_t max_paths = 50'000'000;
};

/// Paths from the source depth back up to it with total time <= cutoff.
DeltaTrain ray_reflection_train(const Medium& medium, double cutoff, const OracleLimits& limits = {});

/// Paths from the source depth down to the bottom reference depth with total time <= cutoff.
DeltaTrain ray_transmission_train(const Medium& medium, double cutoff, const OracleLimits& limits = {});

}  // namespace layered
