#include "layered/arrival.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "layered/errors.hpp"

namespace layered {

ArrivalVector::ArrivalVector(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] > 0.0) || !std::isfinite(values_[i])) {
            throw ValidationError("arrival vector entry " + std::to_string(i) + " must be positive and finite");
        }
        if (i > 0 && !(values_[i] > values_[i - 1])) {
            throw ValidationError("arrival vector must be strictly increasing (entry " + std::to_string(i) + ")");
        }
    }
}

namespace {

double total(std::span<const double> tau) { return std::accumulate(tau.begin(), tau.end(), 0.0); }

std::vector<double> sorted_lattice_times(std::span<const double> tau, const EnumerationLimits& limits) {
    std::vector<double> times;
    for_each_initial_interval_point(
        tau, total(tau), LeadingEntry::Any, [&](const LatticePoint&, double t) { times.push_back(t); }, limits);
    std::sort(times.begin(), times.end());
    return times;
}

LatticePoint pad(const LatticePoint& k, std::size_t dimension) {
    std::vector<int> entries(k.entries().begin(), k.entries().end());
    entries.resize(dimension, 0);
    return LatticePoint(std::move(entries));
}

// Remaining entries of sigma; each generated lattice value deletes the entry it matches.
class Peeler {
public:
    Peeler(std::span<const double> sigma, double tolerance)
        : sigma_(sigma.begin(), sigma.end()), removed_(sigma.size(), false), tolerance_(tolerance) {}

    bool empty() const { return remaining_count() == 0; }

    double earliest() const {
        for (std::size_t i = 0; i < sigma_.size(); ++i) {
            if (!removed_[i]) {
                return sigma_[i];
            }
        }
        return 0.0;
    }

    // Returns false when nothing matches (allowed: sigma may be a subvector).
    bool remove(double value, const LatticePoint& k) {
        const double slack = tolerance_ * std::max(1.0, std::abs(value));
        auto first = std::lower_bound(sigma_.begin(), sigma_.end(), value - slack);
        for (auto it = first; it != sigma_.end() && *it <= value + slack; ++it) {
            const auto idx = static_cast<std::size_t>(it - sigma_.begin());
            if (removed_[idx]) {
                throw InversionError("arrival-times", "arrival " + std::to_string(*it) +
                                                          " is explained by two lattice points (second " +
                                                          to_string(k) + "); non-generic travel times");
            }
            removed_[idx] = true;
            return true;
        }
        return false;
    }

private:
    std::size_t remaining_count() const {
        return static_cast<std::size_t>(std::count(removed_.begin(), removed_.end(), false));
    }

    std::vector<double> sigma_;
    std::vector<bool> removed_;
    double tolerance_;
};

}  // namespace

std::vector<double> FactorizationResult::times() const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& k : rows) {
        out.push_back(arrival_time(k, tau));
    }
    return out;
}

ArrivalVector phi_map(std::span<const double> tau, const EnumerationLimits& limits) {
    const auto times = sorted_lattice_times(tau, limits);
    std::vector<double> distinct;
    for (double t : times) {
        if (distinct.empty() || !times_coincide(distinct.back(), t)) {
            distinct.push_back(t);
        }
    }
    return ArrivalVector(std::move(distinct));
}

bool is_generic(std::span<const double> tau, const EnumerationLimits& limits) {
    const auto times = sorted_lattice_times(tau, limits);
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (times_coincide(times[i - 1], times[i])) {
            return false;
        }
    }
    return true;
}

FactorizationResult invert_arrival_times(const ArrivalVector& sigma, const ArrivalInversionOptions& options) {
    if (sigma.empty()) {
        throw InversionError("arrival-times", "empty arrival vector");
    }
    const double tol = options.relative_tolerance;
    const double last = sigma.back();
    const double limit = last + tol * std::max(1.0, last);
    const bool reflection_only = options.candidates == CandidateSet::ReflectionSupport;

    Peeler peeler(sigma.values(), tol);
    std::vector<double> tau{sigma[0]};
    std::vector<LatticePoint> generated;

    // Initial step: multiples of tau_0.
    for (int c = 1; c * tau[0] <= limit; ++c) {
        if (reflection_only && c > 1) {
            break;
        }
        LatticePoint k{c};
        peeler.remove(c * tau[0], k);
        generated.push_back(std::move(k));
    }

    // Continuing steps: every new point has all coordinates >= 1 through the new layer.
    while (!peeler.empty()) {
        const double partial = std::accumulate(tau.begin(), tau.end(), 0.0);
        const double earliest = peeler.earliest();
        const double next = earliest - partial;
        if (!(next > tol * std::max(1.0, earliest))) {
            throw InversionError("arrival-times", "travel time " + std::to_string(tau.size()) +
                                                      " is not positive (" + std::to_string(next) +
                                                      "); input is not a primary subvector of a generic arrival map");
        }
        tau.push_back(next);
        const std::size_t layer = tau.size() - 1;
        std::vector<TimedPoint> stage;
        for_each_initial_interval_point(
            tau, limit, reflection_only ? LeadingEntry::ExactlyOne : LeadingEntry::Any,
            [&](const LatticePoint& k, double t) {
                if (k[layer] >= 1) {
                    stage.push_back({k, t});
                }
            },
            options.limits);
        for (auto& p : stage) {
            peeler.remove(p.time, p.point);
            generated.push_back(std::move(p.point));
        }
    }

    if (tau.size() < 2) {
        throw InversionError("arrival-times", "only one travel time recovered; at least two layers are required");
    }

    FactorizationResult result;
    result.tau = std::move(tau);
    std::vector<TimedPoint> rows;
    rows.reserve(generated.size());
    for (const auto& k : generated) {
        LatticePoint full = pad(k, result.tau.size());
        const double t = arrival_time(full, result.tau);
        rows.push_back({std::move(full), t});
    }
    std::sort(rows.begin(), rows.end(), [](const TimedPoint& a, const TimedPoint& b) {
        return a.time != b.time ? a.time < b.time : a.point < b.point;
    });
    for (auto& r : rows) {
        result.rows.push_back(std::move(r.point));
    }
    return result;
}

std::vector<LatticePoint> cell_signature(std::span<const double> tau, const EnumerationLimits& limits) {
    if (!is_generic(tau, limits)) {
        throw InversionError("cell-signature", "travel times are not generic");
    }
    return enumerate_reflection_lattice(tau, total(tau), limits);
}

}  // namespace layered
