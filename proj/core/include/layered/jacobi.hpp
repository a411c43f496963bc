#pragma once

#include <cstdint>

namespace layered {

/// Exact binomial coefficient C(n, k) for 0 <= k <= n. Returns 0 for k < 0 or
/// k > n. Throws DomainError if the value does not fit in 63 bits.
std::int64_t binomial(int n, int k);

/// Binomial coefficient C(r, k) = r (r-1) ... (r-k+1) / k! for real upper argument.
double binomial_real(double r, int k);

/// Classical Jacobi polynomial P_n^{(alpha,beta)}(z) by the explicit sum
///
///   sum_j C(n+alpha, n-j) C(n+beta, j) ((z-1)/2)^j ((z+1)/2)^{n-j}.
///
/// Throws DomainError for n < 0, alpha <= -1 or beta <= -1.
double jacobi(int n, double alpha, double beta, double z);

/// P_n^{(alpha,beta)}(z) by the forward three-term recurrence, stable on [-1, 1]
/// where the explicit sum cancels badly for large n. Throws like jacobi().
double jacobi_recurrence(int n, double alpha, double beta, double z);

/// P_n^{(alpha,1)}(z) by the three-term recurrence specialised to beta = 1,
/// seeded with P_0 = 1 and P_1 = (alpha+1) + (alpha+3)(z-1)/2. Valid for alpha >= -1.
double jacobi_beta_one_recurrence(int n, double alpha, double z);

}  // namespace layered
