#include "layered/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "layered/errors.hpp"

namespace layered {

std::int64_t binomial(int n, int k) {
    if (n < 0) {
        throw DomainError("binomial: negative upper argument " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    // value * (n-k+i) is divisible by i; dividing by the gcd first keeps it in range.
    std::int64_t value = 1;
    for (int i = 1; i <= k; ++i) {
        const std::int64_t g = std::gcd(value, static_cast<std::int64_t>(i));
        const std::int64_t factor = (n - k + i) / (i / g);
        if (__builtin_mul_overflow(value / g, factor, &value)) {
            throw DomainError("binomial: C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
        }
    }
    return value;
}

double binomial_real(double r, int k) {
    if (k < 0) {
        return 0.0;
    }
    double value = 1.0;
    for (int i = 0; i < k; ++i) {
        value *= (r - i) / (i + 1);
    }
    return value;
}

double jacobi(int n, double alpha, double beta, double z) {
    if (n < 0) {
        throw DomainError("jacobi: degree must be nonnegative");
    }
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        throw DomainError("jacobi: parameters must exceed -1");
    }
    const double lower = 0.5 * (z - 1.0);
    const double upper = 0.5 * (z + 1.0);
    double sum = 0.0;
    for (int j = 0; j <= n; ++j) {
        sum += binomial_real(n + alpha, n - j) * binomial_real(n + beta, j) * std::pow(lower, j) *
               std::pow(upper, n - j);
    }
    return sum;
}

double jacobi_recurrence(int n, double alpha, double beta, double z) {
    if (n < 0) {
        throw DomainError("jacobi_recurrence: degree must be nonnegative");
    }
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        throw DomainError("jacobi_recurrence: parameters must exceed -1");
    }
    double previous = 1.0;
    if (n == 0) {
        return previous;
    }
    const double ab = alpha + beta;
    double current = (alpha + 1.0) + 0.5 * (ab + 2.0) * (z - 1.0);
    for (int m = 1; m < n; ++m) {
        const double c = 2.0 * m + ab;
        const double lead = 2.0 * (m + 1) * (m + ab + 1.0) * c;
        const double mid = (c + 1.0) * ((c + 2.0) * c * z + alpha * alpha - beta * beta);
        const double tail = 2.0 * (m + alpha) * (m + beta) * (c + 2.0);
        const double next = (mid * current - tail * previous) / lead;
        previous = current;
        current = next;
    }
    return current;
}

double jacobi_beta_one_recurrence(int n, double alpha, double z) {
    if (n < 0) {
        throw DomainError("jacobi_beta_one_recurrence: degree must be nonnegative");
    }
    if (alpha < -1.0) {
        throw DomainError("jacobi_beta_one_recurrence: alpha must be >= -1");
    }
    double previous = 1.0;
    if (n == 0) {
        return previous;
    }
    double current = (alpha + 1.0) + 0.5 * (alpha + 3.0) * (z - 1.0);
    // (2N+4)(N+a+3)(2N+a+3) P_{N+2} =
    //   (2N+a+4)[(2N+a+5)(2N+a+3) z + a^2 - 1] P_{N+1} - 2(N+a+1)(N+2)(2N+a+5) P_N
    for (int m = 0; m + 2 <= n; ++m) {
        const double N = m;
        const double lead = (2 * N + 4) * (N + alpha + 3) * (2 * N + alpha + 3);
        const double mid = (2 * N + alpha + 4) * ((2 * N + alpha + 5) * (2 * N + alpha + 3) * z + alpha * alpha - 1);
        const double tail = 2 * (N + alpha + 1) * (N + 2) * (2 * N + alpha + 5);
        const double next = (mid * current - tail * previous) / lead;
        previous = current;
        current = next;
    }
    return current;
}

}  // namespace layered
