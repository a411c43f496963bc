#include "layered/amplitude_inversion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "layered/errors.hpp"

namespace layered {

std::optional<double> MatchedAmplitudes::find(const LatticePoint& k) const {
    const auto it = amplitudes.find(k);
    if (it == amplitudes.end()) {
        return std::nullopt;
    }
    return it->second;
}

MatchedAmplitudes match_amplitudes(const DeltaTrain& train, std::span<const double> tau, const MatchOptions& options) {
    MatchedAmplitudes out;
    out.tau.assign(tau.begin(), tau.end());
    if (train.empty()) {
        return out;
    }
    for (double t : tau) {
        if (!(t > 0.0)) {
            throw DomainError("match_amplitudes: travel times must be positive");
        }
    }
    const double tol = options.relative_tolerance;
    const double window = std::accumulate(tau.begin(), tau.end(), 0.0);
    const double last = train.events().back().time;
    const double reach = last + tol * std::max(1.0, last);

    // Reflection-support points cover the whole train; inside the window the rest
    // of the initial-interval lattice is added so collisions there are detected.
    std::vector<TimedPoint> candidates;
    for_each_initial_interval_point(
        tau, reach, LeadingEntry::ExactlyOne,
        [&](const LatticePoint& k, double t) { candidates.push_back({k, t}); }, options.limits);
    for_each_initial_interval_point(
        tau, std::min(reach, inclusive_cutoff(window)), LeadingEntry::Any,
        [&](const LatticePoint& k, double t) {
            if (k[0] > 1) {
                candidates.push_back({k, t});
            }
        },
        options.limits);
    std::sort(candidates.begin(), candidates.end(),
              [](const TimedPoint& a, const TimedPoint& b) { return a.time < b.time; });

    for (const auto& event : train) {
        const double slack = tol * std::max(1.0, event.time);
        auto first = std::lower_bound(candidates.begin(), candidates.end(), event.time - slack,
                                      [](const TimedPoint& c, double t) { return c.time < t; });
        std::vector<const TimedPoint*> hits;
        for (auto it = first; it != candidates.end() && it->time <= event.time + slack; ++it) {
            hits.push_back(&*it);
        }
        if (hits.empty()) {
            out.unmatched.push_back(event);
        } else if (hits.size() > 1) {
            if (event.time <= inclusive_cutoff(window)) {
                throw AmbiguityError("match", "time " + std::to_string(event.time) + " fits both " +
                                                  to_string(hits[0]->point) + " and " + to_string(hits[1]->point) +
                                                  "; travel times are not generic");
            }
            out.ambiguous.push_back(event);
        } else if (hits.front()->point[0] != 1) {
            out.unmatched.push_back(event);
        } else {
            out.amplitudes.emplace(hits.front()->point, event.amplitude);
        }
    }
    return out;
}

std::vector<double> recover_R_recursive(const MatchedAmplitudes& matched) {
    const std::size_t dim = matched.tau.size();
    if (dim == 0) {
        throw InversionError("recursive", "no travel times to index amplitudes");
    }
    std::vector<double> reflection;
    double attenuation = 1.0;
    for (std::size_t j = 0; j < dim; ++j) {
        const auto a = matched.find(LatticePoint::ones_through(dim, j));
        if (!a || std::abs(*a) <= kNearZeroAmplitude) {
            throw InversionError("recursive", "stage " + std::to_string(j) + ": primary amplitude " +
                                                  (a ? "is zero" : "is missing") + "; cannot recover R_" +
                                                  std::to_string(j) + " or later coefficients");
        }
        const double r = *a / attenuation;
        if (!(std::abs(r) < 1.0)) {
            throw InversionError("recursive", "stage " + std::to_string(j) + ": recovered R_" + std::to_string(j) +
                                                  " = " + std::to_string(r) + " is outside (-1, 1)");
        }
        reflection.push_back(r);
        attenuation *= 1.0 - r * r;
    }
    return reflection;
}

QuadraticCoefficients quadratic_coefficients(double a0, double a1, double a2, int p, int q, double xi) {
    if (std::min(p, q) < 1) {
        throw DomainError("quadratic_coefficients: need min(p, q) >= 1");
    }
    if (std::abs(a0) <= kNearZeroAmplitude) {
        throw DomainError("quadratic_coefficients: a0 is zero");
    }
    const double n = std::min(p, q) - 1;
    const double al = std::abs(p - q);
    double r1 = a1 / a0;
    double r2 = a2 / a0;
    if (p > q) {
        r1 *= static_cast<double>(p * (q + 1)) / static_cast<double>(q * (p + 1));
        r2 *= static_cast<double>(p * (q + 2)) / static_cast<double>(q * (p + 2));
    }
    QuadraticCoefficients out;
    out.a = 2.0 * (n + al + 1.0) * (n + 2.0) * (2.0 * n + al + 5.0);
    out.b = (2.0 * n + al + 4.0) * ((2.0 * n + al + 5.0) * (2.0 * n + al + 3.0) + al * al - 1.0) * r1;
    out.c = (2.0 * n + 4.0) * (n + al + 3.0) * (2.0 * n + al + 3.0) * r2 -
            2.0 * (2.0 * n + al + 4.0) * (2.0 * n + al + 5.0) * (2.0 * n + al + 3.0) * r1 * xi;
    return out;
}

double xi_product(double a3, double a4, double a5, double a6, int u) {
    if (u < 1) {
        throw DomainError("xi_product: need u >= 1");
    }
    if (std::abs(a3) <= kNearZeroAmplitude || std::abs(a5) <= kNearZeroAmplitude) {
        throw DomainError("xi_product: a3 * a5 is zero");
    }
    return static_cast<double>(u) / static_cast<double>(u + 1) * (a4 / a3) * (a6 / a5);
}

int sign_of_xj(double a7) {
    if (std::abs(a7) <= kNearZeroAmplitude) {
        throw DomainError("sign_of_xj: a7 is zero");
    }
    return a7 > 0.0 ? -1 : 1;
}

namespace {

std::optional<double> magnitude_from_root(double xi, double y) {
    if (y == 0.0) {
        return std::nullopt;
    }
    const double ratio = xi / y;
    if (ratio < 0.0) {
        return std::nullopt;
    }
    return std::sqrt(ratio);
}

bool roots_match(double y, double other) { return std::abs(y - other) <= kRootMatchTolerance * std::max(1.0, std::abs(y)); }

}  // namespace

EightAmplitudeCandidates eight_amplitudes_xj(std::span<const double, 8> a, int p, int q, int u) {
    if (std::abs(a[0]) <= kNearZeroAmplitude) {
        throw DomainError("eight_amplitudes_xj: a0 is zero");
    }
    const int sign = sign_of_xj(a[7]);
    const double xi = xi_product(a[3], a[4], a[5], a[6], u);
    const auto coeffs = quadratic_coefficients(a[0], a[1], a[2], p, q, xi);
    const double disc = coeffs.b * coeffs.b - 4.0 * coeffs.a * coeffs.c;
    if (disc < 0.0) {
        throw InversionError("eight-amplitudes", "quadratic has no real roots; amplitudes are inconsistent");
    }
    const double root = std::sqrt(disc);
    EightAmplitudeCandidates out;
    if (auto m = magnitude_from_root(xi, (-coeffs.b + root) / (2.0 * coeffs.a))) {
        out.plus = sign * *m;
    }
    if (auto m = magnitude_from_root(xi, (-coeffs.b - root) / (2.0 * coeffs.a))) {
        out.minus = sign * *m;
    }
    if (!out.plus && !out.minus) {
        throw InversionError("eight-amplitudes", "both candidates have negative radicands; amplitudes are inconsistent");
    }
    return out;
}

double seven_points_xj(std::span<const double, 7> a) {
    if (std::abs(a[0]) <= kNearZeroAmplitude || std::abs(a[3]) <= kNearZeroAmplitude) {
        throw DomainError("seven_points_xj: a0 * a3 is zero");
    }
    const double r1 = a[1] / a[0];
    const double r2 = a[2] / a[0];
    const double s1 = a[5] / a[3];
    const double s2 = a[6] / a[3];
    const double b3 = a[3] / a[0];
    const double b4 = a[4] / a[0];

    const double centre_y = -7.0 * r1 / 5.0;
    const double disc_y = 3.0 * r1 * b3 * b4 + centre_y * centre_y - 9.0 * r2 / 5.0;
    const double centre_big = -5.0 * s1 / 4.0;
    const double disc_big = 2.5 * b4 * b3 * s1 + centre_big * centre_big - 4.0 * s2 / 3.0;
    if (disc_y < 0.0 || disc_big < 0.0) {
        throw InversionError("seven-points", "quadratic has no real roots; amplitudes are inconsistent");
    }
    const std::array<double, 2> ys{centre_y + std::sqrt(disc_y), centre_y - std::sqrt(disc_y)};
    const std::array<double, 2> big{centre_big + std::sqrt(disc_big), centre_big - std::sqrt(disc_big)};

    std::vector<double> common;
    for (double y : ys) {
        if (roots_match(y, big[0]) || roots_match(y, big[1])) {
            common.push_back(y);
        }
    }
    if (common.empty()) {
        throw InversionError("seven-points", "the two quadratics share no root; amplitudes are inconsistent");
    }
    if (common.size() == 2 && !roots_match(common[0], common[1])) {
        throw InversionError("seven-points", "the two quadratics share both roots; x_j is not determined");
    }
    const double y = common.front();
    const double radicand = b3 * b4 / (2.0 * y);
    if (!(radicand >= 0.0) || !std::isfinite(radicand)) {
        throw InversionError("seven-points", "negative radicand; amplitudes are inconsistent");
    }
    return (a[3] > 0.0 ? -1.0 : 1.0) * std::sqrt(radicand);
}

namespace {

void check_interior(std::size_t last_interface, std::size_t j) {
    if (last_interface < 2 || j < 1 || j + 1 > last_interface) {
        throw DomainError("interior interface index j must satisfy 1 <= j <= n - 1 with n >= 2");
    }
}

// Ones in coordinates 0..j-2, then (first, second, third) at j-1, j, j+1, zeros after.
LatticePoint local_point(std::size_t dim, std::size_t j, int first, int second, int third) {
    LatticePoint k = LatticePoint::zeros(dim);
    for (std::size_t i = 0; i + 1 < j; ++i) {
        k[i] = 1;
    }
    k[j - 1] = first;
    k[j] = second;
    k[j + 1] = third;
    return k;
}

}  // namespace

std::array<LatticePoint, 7> seven_point_configuration(std::size_t last_interface, std::size_t j) {
    check_interior(last_interface, j);
    const std::size_t dim = last_interface + 1;
    const LatticePoint k0 = LatticePoint::ones_through(dim, j + 1);
    const LatticePoint ej = LatticePoint::unit(dim, j);
    const LatticePoint ej1 = LatticePoint::unit(dim, j + 1);
    return {k0,
            k0 + ej + ej1,
            k0 + 2 * ej + 2 * ej1,
            k0 + ej1,
            k0 + ej,
            k0 + ej + 2 * ej1,
            k0 + 2 * ej + 3 * ej1};
}

std::array<LatticePoint, 8> eight_amplitude_configuration(std::size_t last_interface, std::size_t j, int p, int q,
                                                          int u, int v, int m) {
    check_interior(last_interface, j);
    if (std::min({p, q, u, v, m}) < 1) {
        throw DomainError("eight_amplitude_configuration: p, q, u, v, m must be >= 1");
    }
    const std::size_t dim = last_interface + 1;
    const LatticePoint ej = LatticePoint::unit(dim, j);
    const LatticePoint ej1 = LatticePoint::unit(dim, j + 1);
    const LatticePoint k0 = local_point(dim, j, 1, p, q);
    const LatticePoint k3 = local_point(dim, j, 1, u, 1);
    const LatticePoint k5 = local_point(dim, j, 1, 1, v);
    return {k0,
            k0 + ej + ej1,
            k0 + 2 * ej + 2 * ej1,
            k3,
            k3 + ej,
            k5,
            k5 + ej1,
            LatticePoint::ones_through(dim, j) + (2 * m) * ej1};
}

}  // namespace layered
