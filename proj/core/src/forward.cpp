#include "layered/forward.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "layered/amplitude.hpp"
#include "layered/errors.hpp"

namespace layered {

DeltaTrain reflection_response(const Medium& medium, double cutoff, const EnumerationLimits& limits) {
    validate(medium);
    if (!(cutoff > 0.0)) {
        throw DomainError("reflection_response: cutoff must be positive");
    }
    std::vector<Event> raw;
    for_each_initial_interval_point(
        medium.travel_times, cutoff, LeadingEntry::ExactlyOne,
        [&](const LatticePoint& k, double t) { raw.push_back({t, amplitude_a(medium.reflection, k)}); }, limits);
    return DeltaTrain::merge(std::move(raw));
}

DeltaTrain transmission_response(const Medium& medium, double cutoff, const EnumerationLimits& limits) {
    validate(medium);
    if (!(cutoff > 0.0)) {
        throw DomainError("transmission_response: cutoff must be positive");
    }
    const auto tau_prime = medium.extended_travel_times();
    std::vector<Event> raw;
    for_each_transmission_point(
        tau_prime, cutoff,
        [&](const LatticePoint& k, double t) { raw.push_back({t, amplitude_b(medium.reflection, k)}); }, limits);
    return DeltaTrain::merge(std::move(raw));
}

std::complex<double> ghat_recurrence(const Medium& medium, double omega) {
    validate(medium);
    std::complex<double> z{0.0, 0.0};
    for (std::size_t idx = medium.reflection.size(); idx-- > 0;) {
        const double r = medium.reflection[idx];
        const std::complex<double> numerator = z + r;
        const std::complex<double> denominator = 1.0 + r * z;
        if (std::abs(denominator) == 0.0) {
            throw DomainError("ghat_recurrence: 0/0 at interface " + std::to_string(idx) +
                              " (|R| = 1 meets a unit-modulus inner value); perturb R");
        }
        z = std::polar(1.0, medium.travel_times[idx] * omega) * (numerator / denominator);
    }
    return z;
}

namespace {

std::complex<double> sum_series(const DeltaTrain& train, double omega) {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& e : train) {
        sum += e.amplitude * std::polar(1.0, omega * e.time);
    }
    return sum;
}

}  // namespace

std::complex<double> ghat_series(const Medium& medium, double omega, double cutoff,
                                 const EnumerationLimits& limits) {
    return sum_series(reflection_response(medium, cutoff, limits), omega);
}

FrequencyResponse frequency_response(const Medium& medium, std::span<const double> omegas, SpectrumMethod method,
                                     double series_cutoff, const EnumerationLimits& limits) {
    FrequencyResponse out;
    out.method = method;
    out.omegas.assign(omegas.begin(), omegas.end());
    out.values.reserve(omegas.size());
    if (method == SpectrumMethod::Recurrence) {
        for (double w : omegas) {
            out.values.push_back(ghat_recurrence(medium, w));
        }
    } else {
        const DeltaTrain train = reflection_response(medium, series_cutoff, limits);
        for (double w : omegas) {
            out.values.push_back(sum_series(train, w));
        }
    }
    return out;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t samples) {
    std::vector<double> grid;
    grid.reserve(samples);
    if (samples == 1) {
        grid.push_back(lo);
        return grid;
    }
    for (std::size_t i = 0; i < samples; ++i) {
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1));
    }
    return grid;
}

double mean_squared_difference(const FrequencyResponse& lhs, const FrequencyResponse& rhs) {
    if (lhs.values.size() != rhs.values.size() || lhs.values.empty()) {
        throw DimensionError("mean_squared_difference: responses must share a nonempty grid");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < lhs.values.size(); ++i) {
        sum += std::norm(lhs.values[i] - rhs.values[i]);
    }
    return sum / static_cast<double>(lhs.values.size());
}

namespace {

// Factor values phi(p, q) for p tau_a + q tau_b <= cutoff, filled once so that
// each lattice point costs one lookup per interface.
class FactorTable {
public:
    template <class Factor>
    FactorTable(double tau_a, double tau_b, double cutoff, Factor factor)
        : rows_(static_cast<int>(cutoff / tau_a) + 2), cols_(static_cast<int>(cutoff / tau_b) + 2),
          values_(static_cast<std::size_t>(rows_) * cols_, 0.0) {
        for (int p = 0; p < rows_; ++p) {
            for (int q = 0; q < cols_ && (p - 1) * tau_a + (q - 1) * tau_b <= cutoff; ++q) {
                values_[static_cast<std::size_t>(p) * cols_ + q] = factor(p, q);
            }
        }
    }

    double operator()(int p, int q) const { return values_[static_cast<std::size_t>(p) * cols_ + q]; }

private:
    int rows_;
    int cols_;
    std::vector<double> values_;
};

std::vector<double> powers(double x, double tau, double cutoff) {
    std::vector<double> out(static_cast<std::size_t>(cutoff / tau) + 2);
    double v = 1.0;
    for (double& p : out) {
        p = v;
        v *= x;
    }
    return out;
}

// Squared amplitudes summed into time bins by a depth-first walk that carries the
// running product of factors. Entry j ranges over q with time + q tau_j <= limit.
class EnergyWalk {
public:
    EnergyWalk(std::span<const double> tau, std::span<const double> cutoffs, std::vector<FactorTable> tables,
               std::vector<double> last_powers, bool initial_interval, const EnumerationLimits& limits,
               std::vector<double>& bins)
        : tau_(tau), cutoffs_(cutoffs), limit_(inclusive_cutoff(cutoffs.back())), tables_(std::move(tables)),
          last_powers_(std::move(last_powers)), initial_interval_(initial_interval), limits_(limits), bins_(bins) {}

    void run(int first, double time, double value) {
        if (tau_.size() == 1) {
            leaf(first, time, value);
            return;
        }
        descend(1, first, time, value);
    }

private:
    void descend(std::size_t j, int previous, double time, double value) {
        const FactorTable& table = tables_[j - 1];
        for (int q = 0;; ++q) {
            const double t = time + q * tau_[j];
            if (t > limit_) {
                return;
            }
            if (initial_interval_ && previous == 0 && q > 0) {
                return;
            }
            const double v = value * table(previous, q);
            if (j + 1 == tau_.size()) {
                leaf(q, t, v);
            } else {
                descend(j + 1, q, t, v);
            }
        }
    }

    void leaf(int last, double time, double value) {
        if (++visited_ > limits_.max_points) {
            throw ResourceError("energy enumeration exceeded cap of " + std::to_string(limits_.max_points) +
                                " points");
        }
        const double a = value * last_powers_[last];
        const auto bin = std::lower_bound(cutoffs_.begin(), cutoffs_.end(), time,
                                          [](double c, double t) { return inclusive_cutoff(c) < t; });
        bins_[static_cast<std::size_t>(bin - cutoffs_.begin())] += a * a;
    }

    std::span<const double> tau_;
    std::span<const double> cutoffs_;
    double limit_;
    std::vector<FactorTable> tables_;
    std::vector<double> last_powers_;
    bool initial_interval_;
    EnumerationLimits limits_;
    std::vector<double>& bins_;
    std::size_t visited_ = 0;
};

double reflection_factor_any(int p, int q, double x) {
    return std::min(p, q) >= 1 ? amp_factor_f_jacobi(p, q, x) : amp_factor_f(p, q, x);
}

}  // namespace

std::vector<EnergyReport> energy_profile(const Medium& medium, std::span<const double> cutoffs,
                                         const EnumerationLimits& limits) {
    validate(medium);
    if (cutoffs.empty()) {
        return {};
    }
    if (!std::is_sorted(cutoffs.begin(), cutoffs.end()) || !(cutoffs.front() > 0.0)) {
        throw DomainError("energy_profile: cutoffs must be positive and nondecreasing");
    }
    const auto tau_prime = medium.extended_travel_times();
    const auto& tau = medium.travel_times;
    const auto& x = medium.reflection;
    const std::size_t n = tau.size() - 1;
    const double cutoff = cutoffs.back();
    std::vector<double> reflected(cutoffs.size() + 1, 0.0);
    std::vector<double> transmitted(cutoffs.size() + 1, 0.0);

    std::vector<FactorTable> f_tables;
    std::vector<FactorTable> g_tables;
    for (std::size_t j = 0; j < n; ++j) {
        const double xj = x[j];
        f_tables.emplace_back(tau[j], tau[j + 1], cutoff, [xj](int p, int q) { return reflection_factor_any(p, q, xj); });
        g_tables.emplace_back(tau[j], tau[j + 1], cutoff, [xj](int p, int q) { return amp_factor_g_jacobi(p, q, xj); });
    }
    auto last_powers = powers(x[n], tau[n], cutoff);

    // Reflection: k_0 = 1, then an initial interval; the first factor starts the product.
    EnergyWalk reflection(tau, cutoffs, std::move(f_tables), last_powers, true, limits, reflected);
    if (tau[0] <= inclusive_cutoff(cutoff)) {
        reflection.run(1, tau[0], 1.0);
    }

    // Transmission: k_0 = 0 at the base time tau_{n+1}/2 + <1/2, tau>.
    double base = 0.5 * tau_prime.back();
    for (double t : tau) {
        base += 0.5 * t;
    }
    const double exit_factor = std::sqrt(std::max(0.0, 1.0 - x[n] * x[n]));
    EnergyWalk transmission(tau, cutoffs, std::move(g_tables), std::move(last_powers), false, limits, transmitted);
    if (base <= inclusive_cutoff(cutoff)) {
        transmission.run(0, base, exit_factor);
    }

    std::vector<EnergyReport> out;
    out.reserve(cutoffs.size());
    double r = 0.0;
    double tr = 0.0;
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        r += reflected[i];
        tr += transmitted[i];
        out.push_back({cutoffs[i], r, tr, 1.0 - r - tr});
    }
    return out;
}

EnergyReport energy_report(const Medium& medium, double cutoff, const EnumerationLimits& limits) {
    const double cutoffs[] = {cutoff};
    return energy_profile(medium, cutoffs, limits).front();
}

double flatness_statistic(const Medium& medium, std::span<const double> omegas) {
    if (omegas.empty()) {
        throw DomainError("flatness_statistic: empty frequency grid");
    }
    double sum = 0.0;
    for (double w : omegas) {
        const double gap = 1.0 - std::abs(ghat_recurrence(medium, w));
        sum += gap * gap;
    }
    return sum / static_cast<double>(omegas.size());
}

double flatness_statistic(const Medium& medium, double omega_max, std::size_t samples,
                          const FlatnessOptions& options) {
    if (!(omega_max > 0.0)) {
        throw DomainError("flatness_statistic: omega_max must be positive");
    }
    if (samples < 2) {
        throw DomainError("flatness_statistic: need at least two samples");
    }
    auto grid = uniform_grid(-omega_max, omega_max, samples);
    if (options.jitter > 0.0) {
        const double spacing = 2.0 * omega_max / static_cast<double>(samples - 1);
        std::mt19937_64 rng(options.seed);
        std::uniform_real_distribution<double> offset(-0.5, 0.5);
        for (double& w : grid) {
            w += options.jitter * spacing * offset(rng);
        }
    }
    return flatness_statistic(medium, grid);
}

}  // namespace layered
