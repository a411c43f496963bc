#include "layered/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "layered/errors.hpp"
#include "layered/lattice.hpp"

namespace layered {

namespace {

enum class Direction { Down, Up };
enum class Target { Reflection, Transmission };

// Layers are numbered 0 (above interface 0) through n+1 (below interface n).
class RayTracer {
public:
    RayTracer(const Medium& medium, double cutoff, Target target, const OracleLimits& limits)
        : reflection_(medium.reflection),
          transmission_(medium.transmission_factors()),
          half_times_(),
          limit_(inclusive_cutoff(cutoff)),
          target_(target),
          max_paths_(limits.max_paths) {
        for (double t : medium.travel_times) {
            half_times_.push_back(0.5 * t);
        }
        if (target == Target::Transmission) {
            half_times_.push_back(0.5 * medium.extended_travel_times().back());
        }
    }

    DeltaTrain run() {
        traverse(0, Direction::Down, 0.0, 1.0);
        return DeltaTrain::merge(std::move(arrivals_));
    }

private:
    void record(double time, double amplitude) {
        if (++paths_ > max_paths_) {
            throw ResourceError("ray oracle exceeded cap of " + std::to_string(max_paths_) + " paths");
        }
        arrivals_.push_back({time, amplitude});
    }

    // Crosses `layer` in `dir`, then interacts with the interface at the far side.
    // Reflection tracing carries no time for the bottom half space: a wave entering
    // it never returns.
    void traverse(std::size_t layer, Direction dir, double time, double amplitude) {
        if (layer >= half_times_.size()) {
            return;
        }
        const double t = time + half_times_[layer];
        if (t > limit_) {
            return;
        }
        const std::size_t last_interface = reflection_.size() - 1;
        if (dir == Direction::Up && layer == 0) {
            if (target_ == Target::Reflection) {
                record(t, amplitude);
            }
            return;
        }
        if (dir == Direction::Down && layer == last_interface + 1) {
            if (target_ == Target::Transmission) {
                record(t, amplitude);
            }
            return;
        }
        if (dir == Direction::Down) {
            const std::size_t interface = layer;
            traverse(layer, Direction::Up, t, amplitude * reflection_[interface]);
            traverse(layer + 1, Direction::Down, t, amplitude * transmission_[interface]);
        } else {
            const std::size_t interface = layer - 1;
            traverse(layer, Direction::Down, t, amplitude * -reflection_[interface]);
            traverse(layer - 1, Direction::Up, t, amplitude * transmission_[interface]);
        }
    }

    std::vector<double> reflection_;
    std::vector<double> transmission_;
    std::vector<double> half_times_;
    double limit_;
    Target target_;
    std::size_t max_paths_;
    std::size_t paths_ = 0;
    std::vector<Event> arrivals_;
};

}  // namespace

DeltaTrain ray_reflection_train(const Medium& medium, double cutoff, const OracleLimits& limits) {
    validate(medium);
    return RayTracer(medium, cutoff, Target::Reflection, limits).run();
}

DeltaTrain ray_transmission_train(const Medium& medium, double cutoff, const OracleLimits& limits) {
    validate(medium);
    return RayTracer(medium, cutoff, Target::Transmission, limits).run();
}

}  // namespace layered
