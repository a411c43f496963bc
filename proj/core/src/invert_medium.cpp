#include "layered/invert_medium.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "layered/errors.hpp"

namespace layered {

namespace {

struct Attempt {
    std::optional<double> value;
    std::string failure;
};

Attempt seven_points_at(const MatchedAmplitudes& matched, std::size_t n, std::size_t j) {
    const auto amplitudes = gather(matched, seven_point_configuration(n, j));
    if (!amplitudes) {
        return {std::nullopt, "seven-points amplitudes not in the train"};
    }
    try {
        return {seven_points_xj(*amplitudes), {}};
    } catch (const Error& e) {
        return {std::nullopt, std::string("seven-points failed: ") + e.what()};
    }
}

std::vector<double> eight_amplitude_values(const MatchedAmplitudes& matched, std::size_t n, std::size_t j, int p,
                                           int q) {
    constexpr int u = 2;
    const auto amplitudes = gather(matched, eight_amplitude_configuration(n, j, p, q, u, 2, 1));
    if (!amplitudes) {
        return {};
    }
    try {
        const auto c = eight_amplitudes_xj(*amplitudes, p, q, u);
        std::vector<double> out;
        if (c.plus) {
            out.push_back(*c.plus);
        }
        if (c.minus) {
            out.push_back(*c.minus);
        }
        return out;
    } catch (const Error&) {
        return {};
    }
}

// The value shared by two eight-amplitude evaluations whose lattice points avoid
// the primary points 1^j, so a corrupted primary amplitude cannot affect it.
std::optional<double> arbitrate(const MatchedAmplitudes& matched, std::size_t n, std::size_t j, double tolerance) {
    const auto first = eight_amplitude_values(matched, n, j, 2, 2);
    const auto second = eight_amplitude_values(matched, n, j, 2, 3);
    std::optional<double> best;
    double best_gap = 0.0;
    for (double x : first) {
        for (double y : second) {
            const double gap = std::abs(x - y);
            if (gap <= tolerance * std::max(1.0, std::abs(x)) && (!best || gap < best_gap)) {
                best = x;
                best_gap = gap;
            }
        }
    }
    return best;
}

}  // namespace

InversionReport invert_medium(const DeltaTrain& train, const InversionOptions& options) {
    if (train.empty()) {
        throw InversionError("input", "empty train");
    }
    InversionReport report;
    if (train.size() == 1) {
        // A lone event is the response of a single interface.
        const Event& e = train[0];
        if (!(std::abs(e.amplitude) < 1.0)) {
            throw InversionError("recursive", "stage 0: amplitude is outside (-1, 1)");
        }
        report.factorization.tau = {e.time};
        report.factorization.rows = {LatticePoint{1}};
        report.matched.tau = {e.time};
        report.matched.amplitudes[LatticePoint{1}] = e.amplitude;
        report.medium = Medium{{e.time}, {e.amplitude}, std::nullopt};
        return report;
    }

    ArrivalInversionOptions arrival_options;
    arrival_options.candidates = CandidateSet::ReflectionSupport;
    arrival_options.relative_tolerance = options.relative_tolerance;
    arrival_options.limits = options.limits;
    try {
        report.factorization = invert_arrival_times(ArrivalVector(train.times()), arrival_options);
    } catch (const ValidationError& e) {
        throw InversionError("arrival-times", e.what());
    }
    const auto& tau = report.factorization.tau;
    if (!is_generic(tau, options.limits)) {
        throw InversionError("genericity", "non-generic travel times");
    }

    MatchOptions match_options;
    match_options.relative_tolerance = options.relative_tolerance;
    match_options.limits = options.limits;
    report.matched = match_amplitudes(train, tau, match_options);

    const std::size_t n = tau.size() - 1;
    std::vector<double> reflection;
    double attenuation = 1.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const auto a = report.matched.find(LatticePoint::ones_through(n + 1, j));
        if (!a || std::abs(*a) <= kNearZeroAmplitude) {
            throw InversionError("recursive", "stage " + std::to_string(j) + ": primary amplitude " +
                                                  (a ? "is zero" : "is missing"));
        }
        double chosen = *a / attenuation;

        if (j >= 1 && j + 1 <= n) {
            InteriorCheck check;
            check.interface = j;
            check.recursive = chosen;
            const auto seven = seven_points_at(report.matched, n, j);
            check.seven_points = seven.value;
            check.note = seven.failure;
            if (seven.value) {
                const double gap = std::abs(*seven.value - chosen);
                check.discrepancy = gap > options.discrepancy_tolerance;
            }
            if (check.discrepancy) {
                report.consistent = false;
                check.arbitration = arbitrate(report.matched, n, j, options.arbitration_tolerance);
                if (check.arbitration) {
                    const bool seven_closer =
                        std::abs(*seven.value - *check.arbitration) < std::abs(chosen - *check.arbitration);
                    check.choice = seven_closer ? Choice::SevenPoints : Choice::Recursive;
                    check.note = seven_closer ? "eight-amplitude check agrees with seven-points"
                                              : "eight-amplitude check agrees with recursion";
                } else {
                    check.choice = Choice::SevenPoints;
                    check.note = "eight-amplitude check unavailable; kept seven-points";
                }
                if (check.choice == Choice::SevenPoints) {
                    chosen = *seven.value;
                }
            }
            report.checks.push_back(std::move(check));
        }

        if (!(std::abs(chosen) < 1.0)) {
            throw InversionError("recursive", "stage " + std::to_string(j) + ": recovered R_" + std::to_string(j) +
                                                  " = " + std::to_string(chosen) + " is outside (-1, 1)");
        }
        reflection.push_back(chosen);
        attenuation *= 1.0 - chosen * chosen;
    }

    report.medium = Medium{tau, std::move(reflection), std::nullopt};
    return report;
}

}  // namespace layered
