#include "layered/medium.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "layered/errors.hpp"

namespace layered {

std::vector<double> Medium::extended_travel_times() const {
    if (!exit_travel_time) {
        throw ValidationError("medium has no exit travel time (tau_last); transmission needs it");
    }
    std::vector<double> out = travel_times;
    out.push_back(*exit_travel_time);
    return out;
}

std::vector<double> Medium::transmission_factors() const {
    std::vector<double> out;
    out.reserve(reflection.size());
    for (double r : reflection) {
        out.push_back(std::sqrt(std::max(0.0, 1.0 - r * r)));
    }
    return out;
}

void validate(const Medium& medium, std::size_t min_last_interface) {
    if (medium.reflection.empty()) {
        throw ValidationError("R: medium needs at least one interface");
    }
    if (medium.travel_times.size() != medium.reflection.size()) {
        throw ValidationError("tau: length " + std::to_string(medium.travel_times.size()) +
                              " does not match R length " + std::to_string(medium.reflection.size()));
    }
    if (medium.last_interface() < min_last_interface) {
        throw ValidationError("R: need at least " + std::to_string(min_last_interface + 1) + " interfaces");
    }
    for (std::size_t j = 0; j < medium.travel_times.size(); ++j) {
        const double t = medium.travel_times[j];
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw ValidationError("tau[" + std::to_string(j) + "]: travel times must be positive and finite");
        }
    }
    for (std::size_t j = 0; j < medium.reflection.size(); ++j) {
        const double r = medium.reflection[j];
        if (!std::isfinite(r) || std::abs(r) > 1.0) {
            throw ValidationError("R[" + std::to_string(j) + "]: reflection coefficients must lie in [-1, 1]");
        }
    }
    if (medium.exit_travel_time) {
        const double t = *medium.exit_travel_time;
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw ValidationError("tau_last: must be positive and finite");
        }
    }
}

Medium make_medium(std::vector<double> travel_times, std::vector<double> reflection,
                   std::optional<double> exit_travel_time) {
    Medium m{std::move(travel_times), std::move(reflection), exit_travel_time};
    validate(m);
    return m;
}

double Layer::impedance() const { return std::sqrt(bulk_modulus * density); }

double Layer::wave_speed() const { return std::sqrt(bulk_modulus / density); }

Medium physical_to_medium(const std::vector<Layer>& layers, const std::vector<double>& interface_depths,
                          double top_reference_depth, double bottom_reference_depth) {
    if (interface_depths.empty()) {
        throw ValidationError("depths: need at least one interface");
    }
    if (layers.size() != interface_depths.size() + 1) {
        throw ValidationError("layers: expected " + std::to_string(interface_depths.size() + 1) +
                              " layers for " + std::to_string(interface_depths.size()) + " interfaces, got " +
                              std::to_string(layers.size()));
    }
    for (std::size_t j = 0; j < layers.size(); ++j) {
        if (!(layers[j].density > 0.0) || !(layers[j].bulk_modulus > 0.0) || !std::isfinite(layers[j].density) ||
            !std::isfinite(layers[j].bulk_modulus)) {
            throw ValidationError("layers[" + std::to_string(j) + "]: density and bulk_modulus must be positive");
        }
    }
    // z_{-1}, z_0, ..., z_n, z_{n+1}
    std::vector<double> z;
    z.reserve(interface_depths.size() + 2);
    z.push_back(top_reference_depth);
    z.insert(z.end(), interface_depths.begin(), interface_depths.end());
    z.push_back(bottom_reference_depth);
    for (std::size_t i = 1; i < z.size(); ++i) {
        if (!(z[i] > z[i - 1])) {
            throw ValidationError("depths: must be strictly increasing (including reference depths)");
        }
    }

    const std::size_t n = interface_depths.size() - 1;
    Medium m;
    for (std::size_t j = 0; j <= n; ++j) {
        m.travel_times.push_back(2.0 * (z[j + 1] - z[j]) / layers[j].wave_speed());
        const double upper = layers[j].impedance();
        const double lower = layers[j + 1].impedance();
        m.reflection.push_back((upper - lower) / (upper + lower));
    }
    m.exit_travel_time = 2.0 * (z[n + 2] - z[n + 1]) / layers[n + 1].wave_speed();
    validate(m);
    return m;
}

}  // namespace layered
