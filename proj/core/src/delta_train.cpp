#include "layered/delta_train.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "layered/errors.hpp"

namespace layered {

bool times_coincide(double a, double b) noexcept {
    return std::abs(a - b) <= kMergeRelativeTolerance * std::max(1.0, std::abs(a));
}

DeltaTrain DeltaTrain::merge(std::vector<Event> raw) {
    std::sort(raw.begin(), raw.end(), [](const Event& x, const Event& y) { return x.time < y.time; });
    std::vector<Event> merged;
    std::size_t i = 0;
    while (i < raw.size()) {
        // Clusters are anchored at their earliest time.
        Event cluster = raw[i];
        std::size_t j = i + 1;
        while (j < raw.size() && times_coincide(cluster.time, raw[j].time)) {
            cluster.amplitude += raw[j].amplitude;
            ++j;
        }
        if (std::abs(cluster.amplitude) > kZeroAmplitude) {
            merged.push_back(cluster);
        }
        i = j;
    }
    return DeltaTrain(std::move(merged));
}

DeltaTrain DeltaTrain::from_sorted(std::vector<Event> events) {
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (!std::isfinite(events[i].time) || !std::isfinite(events[i].amplitude)) {
            throw ValidationError("train row " + std::to_string(i + 1) + ": non-finite value");
        }
        if (i > 0 && !(events[i].time > events[i - 1].time)) {
            throw ValidationError("train row " + std::to_string(i + 1) + ": times must be strictly increasing");
        }
    }
    return DeltaTrain(std::move(events));
}

double DeltaTrain::energy() const noexcept {
    double sum = 0.0;
    for (const auto& e : events_) {
        sum += e.amplitude * e.amplitude;
    }
    return sum;
}

std::vector<double> DeltaTrain::times() const {
    std::vector<double> out;
    out.reserve(events_.size());
    for (const auto& e : events_) {
        out.push_back(e.time);
    }
    return out;
}

double max_amplitude_mismatch(const DeltaTrain& lhs, const DeltaTrain& rhs) {
    double worst = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < lhs.size() || j < rhs.size()) {
        if (i < lhs.size() && j < rhs.size() && times_coincide(lhs[i].time, rhs[j].time)) {
            worst = std::max(worst, std::abs(lhs[i].amplitude - rhs[j].amplitude));
            ++i;
            ++j;
        } else if (j >= rhs.size() || (i < lhs.size() && lhs[i].time < rhs[j].time)) {
            worst = std::max(worst, std::abs(lhs[i].amplitude));
            ++i;
        } else {
            worst = std::max(worst, std::abs(rhs[j].amplitude));
            ++j;
        }
    }
    return worst;
}

}  // namespace layered
