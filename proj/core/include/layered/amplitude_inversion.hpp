#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "layered/delta_train.hpp"
#include "layered/lattice.hpp"

namespace layered {

/// Amplitudes at or below this magnitude count as zero in precondition checks.
inline constexpr double kNearZeroAmplitude = 1e-12;

/// Roots of two quadratics are taken as common when |y - Y| <= kRootMatchTolerance * max(1, |y|).
inline constexpr double kRootMatchTolerance = 1e-7;

/// Event amplitudes keyed by the reflection-support point that explains each arrival.
struct MatchedAmplitudes {
    std::map<LatticePoint, double> amplitudes;
    std::vector<double> tau;
    /// Events with no reflection-support point at their arrival time.
    std::vector<Event> unmatched;
    /// Events past <1, tau> whose time fits two lattice points; left out of `amplitudes`.
    std::vector<Event> ambiguous;

    std::optional<double> find(const LatticePoint& k) const;
};

struct MatchOptions {
    double relative_tolerance = kMergeRelativeTolerance;
    EnumerationLimits limits = {};
};

/// Pairs each event of `train` with the lattice point k whose time <k, tau> it
/// matches. Throws AmbiguityError when an event at or before <1, tau> fits two
/// initial-interval points (tau is not generic).
MatchedAmplitudes match_amplitudes(const DeltaTrain& train, std::span<const double> tau,
                                   const MatchOptions& options = {});

/// R_0 = a(k^0) and R_{j+1} = a(k^{j+1}) / prod_{s<=j} (1 - R_s^2), where k^j has
/// ones in coordinates 0..j. Throws InversionError naming the first stage whose
/// primary amplitude is missing or zero, or whose value leaves (-1, 1).
std::vector<double> recover_R_recursive(const MatchedAmplitudes& matched);

struct QuadraticCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// Coefficients of the quadratic whose root is x_{j-1} x_{j+1}, built from the
/// amplitudes at k^0, k^1 = k^0 + e^j + e^{j+1}, k^2 = k^0 + 2e^j + 2e^{j+1} with
/// (k^0_{j-1}, k^0_j, k^0_{j+1}) = (1, p, q), and xi = x_{j-1} x_j^2 x_{j+1}.
QuadraticCoefficients quadratic_coefficients(double a0, double a1, double a2, int p, int q, double xi);

/// x_{j-1} x_j^2 x_{j+1} = u/(u+1) * a4 a6 / (a3 a5).
double xi_product(double a3, double a4, double a5, double a6, int u);

/// Sign of x_j from the amplitude at 1^j + 2m e^{j+1}: the opposite sign of a7.
int sign_of_xj(double a7);

struct EightAmplitudeCandidates {
    /// From the root (-B + sqrt(B^2 - 4AC)) / 2A; empty if it gives a negative radicand.
    std::optional<double> plus;
    /// From the root (-B - sqrt(B^2 - 4AC)) / 2A.
    std::optional<double> minus;
};

/// Both closed-form candidates for x_j. One of them is x_j when the amplitudes
/// come from the configuration built by eight_amplitude_configuration.
EightAmplitudeCandidates eight_amplitudes_xj(std::span<const double, 8> a, int p, int q, int u);

/// x_j from the seven amplitudes at seven_point_configuration(n, j).
double seven_points_xj(std::span<const double, 7> a);

/// Lattice points k^0..k^6 used by seven_points_xj for interior interface j.
std::array<LatticePoint, 7> seven_point_configuration(std::size_t last_interface, std::size_t j);

/// Lattice points k^0..k^7 used by eight_amplitudes_xj for interior interface j.
/// Coordinates before j-1 are 1 and coordinates past those constrained are 0.
std::array<LatticePoint, 8> eight_amplitude_configuration(std::size_t last_interface, std::size_t j, int p, int q,
                                                          int u, int v, int m);

/// Amplitudes of `matched` at `points`, or nothing if any is absent.
template <std::size_t K>
std::optional<std::array<double, K>> gather(const MatchedAmplitudes& matched,
                                            const std::array<LatticePoint, K>& points) {
    std::array<double, K> out{};
    for (std::size_t r = 0; r < K; ++r) {
        const auto value = matched.find(points[r]);
        if (!value) {
            return std::nullopt;
        }
        out[r] = *value;
    }
    return out;
}

}  // namespace layered
