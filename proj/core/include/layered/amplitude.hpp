#pragma once

#include <span>

#include "layered/lattice.hpp"

namespace layered {

/// Exponent pair (p, q) of one amplitude factor.
struct FactorPair {
    int p = 0;
    int q = 0;

    /// |p - q|
    int alpha() const noexcept { return p > q ? p - q : q - p; }
    /// min{p, q} - 1, the Jacobi degree of the reflection factor.
    int degree() const noexcept { return (p < q ? p : q) - 1; }
};

// Reflection amplitude factor f^{(p,q)}(x) by its defining sum
//
//   sum_{j=1}^{min(p,q)} (-1)^{q-j} C(p,j) C(q-1,j-1) x^{p+q-2j} (1-x^2)^j
//
// with the conventions f = 0 if min(p,q) < 0, f^{(0,0)} = 1, f^{(p,0)} = x^p and
// f^{(0,q)} = 0 for p, q > 0.
double amp_factor_f(int p, int q, double x);

/// f^{(p,q)} through Jacobi polynomials P^{(alpha,1)}_m(1-2x^2), m = min{p,q}-1.
/// Throws DomainError when min{p,q} < 1.
double amp_factor_f_jacobi(int p, int q, double x);

/// Transmission amplitude factor g^{(p,q)}(x) by its defining sum; zero when min{p,q} < 0.
double amp_factor_g(int p, int q, double x);

/// g^{(p,q)} through Jacobi polynomials P^{(alpha,0)}_n(1-2x^2), n = min{p,q}.
/// Throws DomainError when min{p,q} < 0.
double amp_factor_g_jacobi(int p, int q, double x);

/// Reflection amplitude a(x, k) = [k_0 = 1] x_n^{k_n} prod_{j<n} f^{(k_j,k_{j+1})}(x_j).
double amplitude_a(std::span<const double> x, const LatticePoint& k);

/// Transmission amplitude b(x, k) = [k_0 = 0] sqrt(1-x_n^2) x_n^{k_n} prod_{j<n} g^{(k_j,k_{j+1})}(x_j).
double amplitude_b(std::span<const double> x, const LatticePoint& k);

/// Covering amplitude: a(y - 2 floor((y+1)/2), floor((y+1)/2)).
/// Throws DomainError if any coordinate is an odd integer.
double covering_amplitude(std::span<const double> y);

}  // namespace layered
