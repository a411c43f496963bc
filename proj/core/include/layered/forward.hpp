#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "layered/delta_train.hpp"
#include "layered/lattice.hpp"
#include "layered/medium.hpp"

namespace layered {

/// Reflection Green's function up to an inclusive cutoff: impulses a(R, k) at
/// times <k, tau> for k in the reflection support, merged and zero-pruned.
DeltaTrain reflection_response(const Medium& medium, double cutoff, const EnumerationLimits& limits = {});

/// Transmission Green's function up to an inclusive cutoff: impulses b(R, k) at
/// tau_{n+1}/2 + <k + 1/2, tau> for k in {0} x Z_+^n. Needs an exit travel time.
DeltaTrain transmission_response(const Medium& medium, double cutoff, const EnumerationLimits& limits = {});

/// Fourier transform of the reflection Green's function by nested disk automorphisms,
/// Psi_0 o ... o Psi_n (0) with Psi_j(z) = e^{i tau_j omega} (z + R_j) / (1 + R_j z).
/// Throws DomainError at the removable 0/0 that |R_j| = 1 can produce.
std::complex<double> ghat_recurrence(const Medium& medium, double omega);

/// Truncated almost-periodic series sum_{<k,tau> <= cutoff} a(R, k) e^{i omega <k,tau>}.
std::complex<double> ghat_series(const Medium& medium, double omega, double cutoff,
                                 const EnumerationLimits& limits = {});

enum class SpectrumMethod { Recurrence, Series };

struct FrequencyResponse {
    std::vector<double> omegas;
    std::vector<std::complex<double>> values;
    SpectrumMethod method = SpectrumMethod::Recurrence;
};

/// Evaluates the spectrum on a grid. `series_cutoff` is used only by the series method.
FrequencyResponse frequency_response(const Medium& medium, std::span<const double> omegas, SpectrumMethod method,
                                     double series_cutoff = 0.0, const EnumerationLimits& limits = {});

/// `samples` equally spaced points from lo to hi inclusive (a single point at lo when samples == 1).
std::vector<double> uniform_grid(double lo, double hi, std::size_t samples);

/// Grid average of |lhs - rhs|^2; the responses must share one grid.
double mean_squared_difference(const FrequencyResponse& lhs, const FrequencyResponse& rhs);

struct EnergyReport {
    double cutoff = 0.0;
    double reflected = 0.0;
    double transmitted = 0.0;
    double residual = 0.0;
};

/// Partial energy sums of reflection and transmission amplitudes up to the cutoff.
EnergyReport energy_report(const Medium& medium, double cutoff, const EnumerationLimits& limits = {});

/// energy_report at several cutoffs from a single enumeration. Cutoffs must be nondecreasing.
std::vector<EnergyReport> energy_profile(const Medium& medium, std::span<const double> cutoffs,
                                         const EnumerationLimits& limits = {});

struct FlatnessOptions {
    /// Fraction of the grid spacing by which each frequency is uniformly perturbed.
    double jitter = 0.0;
    std::uint64_t seed = 0;
};

/// Mean of (1 - |G(omega_i)|)^2 over a uniform grid on [-omega_max, omega_max].
double flatness_statistic(const Medium& medium, double omega_max, std::size_t samples,
                          const FlatnessOptions& options = {});

/// Mean of (1 - |G(omega)|)^2 over the given frequencies.
double flatness_statistic(const Medium& medium, std::span<const double> omegas);

}  // namespace layered
