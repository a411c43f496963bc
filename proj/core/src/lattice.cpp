#include "layered/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "layered/errors.hpp"

namespace layered {

LatticePoint LatticePoint::zeros(std::size_t dimension) { return LatticePoint(std::vector<int>(dimension, 0)); }

LatticePoint LatticePoint::ones_through(std::size_t dimension, std::size_t last) {
    std::vector<int> entries(dimension, 0);
    for (std::size_t r = 0; r <= last && r < dimension; ++r) {
        entries[r] = 1;
    }
    return LatticePoint(std::move(entries));
}

LatticePoint LatticePoint::unit(std::size_t dimension, std::size_t j) {
    std::vector<int> entries(dimension, 0);
    entries.at(j) = 1;
    return LatticePoint(std::move(entries));
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
    if (other.size() != size()) {
        throw DimensionError("lattice point addition: dimensions " + std::to_string(size()) + " and " +
                             std::to_string(other.size()));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

LatticePoint operator*(int scale, LatticePoint k) {
    for (auto& e : k.entries_) {
        e *= scale;
    }
    return k;
}

std::string to_string(const LatticePoint& k) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << k[i];
    }
    out << ')';
    return out.str();
}

bool in_initial_interval_lattice(const LatticePoint& k) {
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] < 0) {
            return false;
        }
        if (j + 1 < k.size() && k[j] == 0 && k[j + 1] != 0) {
            return false;
        }
    }
    return k.size() > 0;
}

bool in_reflection_support(const LatticePoint& k) { return in_initial_interval_lattice(k) && k[0] == 1; }

bool in_transmission_support(const LatticePoint& k) {
    if (k.size() == 0 || k[0] != 0) {
        return false;
    }
    return std::all_of(k.entries().begin(), k.entries().end(), [](int e) { return e >= 0; });
}

double arrival_time(const LatticePoint& k, std::span<const double> tau) {
    if (k.size() != tau.size()) {
        throw DimensionError("arrival_time: lattice point has dimension " + std::to_string(k.size()) +
                             " but tau has length " + std::to_string(tau.size()));
    }
    double t = 0.0;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        t += k[i] * tau[i];
    }
    return t;
}

double transmission_arrival_time(const LatticePoint& k, std::span<const double> tau_prime) {
    if (tau_prime.size() != k.size() + 1) {
        throw DimensionError("transmission_arrival_time: tau' must have length dim(k)+1");
    }
    double t = 0.5 * tau_prime.back();
    for (std::size_t i = 0; i < k.size(); ++i) {
        t += 0.5 * tau_prime[i];
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
        t += k[i] * tau_prime[i];
    }
    return t;
}

double inclusive_cutoff(double cutoff) noexcept { return cutoff + 1e-12 * std::max(1.0, std::abs(cutoff)); }

namespace {

void require_positive(std::span<const double> tau, const char* what) {
    if (tau.empty()) {
        throw DomainError(std::string(what) + ": travel-time vector is empty");
    }
    for (double t : tau) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw DomainError(std::string(what) + ": travel times must be positive and finite");
        }
    }
}

class Counter {
public:
    explicit Counter(const EnumerationLimits& limits) : cap_(limits.max_points) {}
    void bump() {
        if (++count_ > cap_) {
            throw ResourceError("lattice enumeration exceeded cap of " + std::to_string(cap_) + " points");
        }
    }

private:
    std::size_t cap_;
    std::size_t count_ = 0;
};

// Coordinates 1..n of an initial-interval point; k[i-1] > 0 on entry.
void descend_initial(std::span<const double> tau, double limit, std::size_t i, double time, LatticePoint& k,
                     const LatticeVisitor& visit, Counter& counter) {
    if (i == tau.size()) {
        counter.bump();
        visit(k, time);
        return;
    }
    // k_i = 0 forces the remaining coordinates to zero.
    counter.bump();
    visit(k, time);
    for (int c = 1;; ++c) {
        const double t = time + c * tau[i];
        if (t > limit) {
            break;
        }
        k[i] = c;
        descend_initial(tau, limit, i + 1, t, k, visit, counter);
    }
    k[i] = 0;
}

void descend_transmission(std::span<const double> tau, double limit, std::size_t i, double time, LatticePoint& k,
                          const LatticeVisitor& visit, Counter& counter) {
    if (i == tau.size()) {
        counter.bump();
        visit(k, time);
        return;
    }
    for (int c = 0;; ++c) {
        const double t = time + c * tau[i];
        if (t > limit) {
            break;
        }
        k[i] = c;
        descend_transmission(tau, limit, i + 1, t, k, visit, counter);
    }
    k[i] = 0;
}

template <class Points>
void sort_by_time(Points& points) {
    std::sort(points.begin(), points.end(), [](const TimedPoint& a, const TimedPoint& b) {
        if (a.time != b.time) {
            return a.time < b.time;
        }
        return a.point < b.point;
    });
}

std::vector<LatticePoint> collect_initial(std::span<const double> tau, double cutoff, LeadingEntry leading,
                                          const EnumerationLimits& limits) {
    std::vector<TimedPoint> found;
    for_each_initial_interval_point(
        tau, cutoff, leading, [&](const LatticePoint& k, double t) { found.push_back({k, t}); }, limits);
    sort_by_time(found);
    std::vector<LatticePoint> out;
    out.reserve(found.size());
    for (auto& p : found) {
        out.push_back(std::move(p.point));
    }
    return out;
}

}  // namespace

void for_each_initial_interval_point(std::span<const double> tau, double cutoff, LeadingEntry leading,
                                     const LatticeVisitor& visit, const EnumerationLimits& limits) {
    require_positive(tau, "initial-interval enumeration");
    const double limit = inclusive_cutoff(cutoff);
    Counter counter(limits);
    LatticePoint k = LatticePoint::zeros(tau.size());
    const int max_leading = leading == LeadingEntry::ExactlyOne ? 1 : std::numeric_limits<int>::max();
    for (int c = 1; c <= max_leading; ++c) {
        const double t = c * tau[0];
        if (t > limit) {
            break;
        }
        k[0] = c;
        descend_initial(tau, limit, 1, t, k, visit, counter);
    }
}

void for_each_transmission_point(std::span<const double> tau_prime, double cutoff, const LatticeVisitor& visit,
                                 const EnumerationLimits& limits) {
    require_positive(tau_prime, "transmission enumeration");
    if (tau_prime.size() < 2) {
        throw DimensionError("transmission enumeration needs tau' of length n+2 >= 2");
    }
    const auto tau = tau_prime.first(tau_prime.size() - 1);
    double base = 0.5 * tau_prime.back();
    for (double t : tau) {
        base += 0.5 * t;
    }
    const double limit = inclusive_cutoff(cutoff);
    if (base > limit) {
        return;
    }
    Counter counter(limits);
    LatticePoint k = LatticePoint::zeros(tau.size());
    // k_0 is pinned to zero.
    descend_transmission(tau, limit, 1, base, k, visit, counter);
}

std::vector<LatticePoint> enumerate_reflection_lattice(std::span<const double> tau, double cutoff,
                                                       const EnumerationLimits& limits) {
    return collect_initial(tau, cutoff, LeadingEntry::Any, limits);
}

std::vector<LatticePoint> enumerate_reflection_support(std::span<const double> tau, double cutoff,
                                                       const EnumerationLimits& limits) {
    return collect_initial(tau, cutoff, LeadingEntry::ExactlyOne, limits);
}

std::vector<TimedPoint> enumerate_transmission_lattice(std::span<const double> tau_prime, double cutoff,
                                                       const EnumerationLimits& limits) {
    std::vector<TimedPoint> found;
    for_each_transmission_point(
        tau_prime, cutoff, [&](const LatticePoint& k, double t) { found.push_back({k, t}); }, limits);
    sort_by_time(found);
    return found;
}

}  // namespace layered
