#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace layered {

/// Piecewise-constant layered medium described by its scattering parameters.
///
/// `travel_times[j]` is the two-way travel time of layer j (layer 0 lies between
/// the source depth and the first interface) and `reflection[j]` the reflection
/// coefficient of interface j. `exit_travel_time` is the two-way time of the
/// layer below the last interface and is needed only for transmission.
struct Medium {
    std::vector<double> travel_times;
    std::vector<double> reflection;
    std::optional<double> exit_travel_time;

    /// Index n of the last interface.
    std::size_t last_interface() const noexcept { return reflection.empty() ? 0 : reflection.size() - 1; }

    /// (tau_0, ..., tau_n, tau_{n+1}); throws ValidationError without an exit travel time.
    std::vector<double> extended_travel_times() const;

    /// T_j = sqrt(1 - R_j^2).
    std::vector<double> transmission_factors() const;
};

/// Throws ValidationError unless travel times are positive, |R_j| <= 1 and the
/// two vectors have equal length n+1 with n >= `min_last_interface`.
void validate(const Medium& medium, std::size_t min_last_interface = 0);

/// Validates and returns a medium.
Medium make_medium(std::vector<double> travel_times, std::vector<double> reflection,
                   std::optional<double> exit_travel_time = std::nullopt);

struct Layer {
    double density = 0.0;
    double bulk_modulus = 0.0;

    double impedance() const;
    double wave_speed() const;
};

/// Converts n+2 layers with interface depths z_0 < ... < z_n and reference depths
/// z_{-1} < z_0, z_{n+1} > z_n into travel times and reflection coefficients.
Medium physical_to_medium(const std::vector<Layer>& layers, const std::vector<double>& interface_depths,
                          double top_reference_depth, double bottom_reference_depth);

}  // namespace layered
