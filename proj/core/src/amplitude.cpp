#include "layered/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "layered/errors.hpp"
#include "layered/jacobi.hpp"

namespace layered {

namespace {

double int_pow(double x, int e) {
    double result = 1.0;
    double base = x;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

void require_same_dimension(std::span<const double> x, const LatticePoint& k, const char* what) {
    if (x.size() != k.size()) {
        throw DimensionError(std::string(what) + ": x has length " + std::to_string(x.size()) +
                             " but k has dimension " + std::to_string(k.size()));
    }
    if (x.empty()) {
        throw DimensionError(std::string(what) + ": empty argument");
    }
}

bool has_negative_entry(const LatticePoint& k) {
    return std::any_of(k.entries().begin(), k.entries().end(), [](int e) { return e < 0; });
}

}  // namespace

double amp_factor_f(int p, int q, double x) {
    if (std::min(p, q) < 0) {
        return 0.0;
    }
    if (q == 0) {
        return p == 0 ? 1.0 : int_pow(x, p);
    }
    if (p == 0) {
        return 0.0;
    }
    const double s = 1.0 - x * x;
    double sum = 0.0;
    for (int j = 1; j <= std::min(p, q); ++j) {
        const double sign = ((q - j) % 2 == 0) ? 1.0 : -1.0;
        const double coeff = static_cast<double>(binomial(p, j)) * static_cast<double>(binomial(q - 1, j - 1));
        sum += sign * coeff * int_pow(x, p + q - 2 * j) * int_pow(s, j);
    }
    return sum;
}

double amp_factor_f_jacobi(int p, int q, double x) {
    const FactorPair pair{p, q};
    const int m = pair.degree();
    if (m < 0) {
        throw DomainError("amp_factor_f_jacobi: requires min{p,q} >= 1, got (" + std::to_string(p) + "," +
                          std::to_string(q) + ")");
    }
    const int alpha = pair.alpha();
    const double poly = jacobi_recurrence(m, alpha, 1.0, 1.0 - 2.0 * x * x);
    const double s = 1.0 - x * x;
    if (p <= q) {
        return int_pow(-x, alpha) * s * poly;
    }
    return (static_cast<double>(p) / q) * int_pow(x, alpha) * s * poly;
}

double amp_factor_g(int p, int q, double x) {
    if (std::min(p, q) < 0) {
        return 0.0;
    }
    const double s = 1.0 - x * x;
    double sum = 0.0;
    for (int j = 0; j <= std::min(p, q); ++j) {
        const double sign = ((q - j) % 2 == 0) ? 1.0 : -1.0;
        const double coeff = static_cast<double>(binomial(p, j)) * static_cast<double>(binomial(q, j));
        sum += sign * coeff * int_pow(x, p + q - 2 * j) * int_pow(s, j);
    }
    return std::sqrt(std::max(0.0, s)) * sum;
}

double amp_factor_g_jacobi(int p, int q, double x) {
    const int n = std::min(p, q);
    if (n < 0) {
        throw DomainError("amp_factor_g_jacobi: requires min{p,q} >= 0");
    }
    const int alpha = FactorPair{p, q}.alpha();
    const double root = std::sqrt(std::max(0.0, 1.0 - x * x));
    const double poly = jacobi_recurrence(n, alpha, 0.0, 1.0 - 2.0 * x * x);
    return (p <= q ? int_pow(-x, alpha) : int_pow(x, alpha)) * root * poly;
}

namespace {

// f^{(p,q)} for any (p, q): the Jacobi form where it applies, the boundary conventions elsewhere.
double reflection_factor(int p, int q, double x) {
    if (std::min(p, q) >= 1) {
        return amp_factor_f_jacobi(p, q, x);
    }
    return amp_factor_f(p, q, x);
}

}  // namespace

double amplitude_a(std::span<const double> x, const LatticePoint& k) {
    require_same_dimension(x, k, "amplitude_a");
    if (k[0] != 1 || has_negative_entry(k)) {
        return 0.0;
    }
    const std::size_t n = k.size() - 1;
    double value = int_pow(x[n], k[n]);
    for (std::size_t j = 0; j < n && value != 0.0; ++j) {
        value *= reflection_factor(k[j], k[j + 1], x[j]);
    }
    return value;
}

double amplitude_b(std::span<const double> x, const LatticePoint& k) {
    require_same_dimension(x, k, "amplitude_b");
    if (k[0] != 0 || has_negative_entry(k)) {
        return 0.0;
    }
    const std::size_t n = k.size() - 1;
    double value = std::sqrt(std::max(0.0, 1.0 - x[n] * x[n])) * int_pow(x[n], k[n]);
    for (std::size_t j = 0; j < n && value != 0.0; ++j) {
        value *= amp_factor_g_jacobi(k[j], k[j + 1], x[j]);
    }
    return value;
}

double covering_amplitude(std::span<const double> y) {
    if (y.empty()) {
        throw DimensionError("covering_amplitude: empty argument");
    }
    std::vector<double> reduced(y.size());
    std::vector<int> cell(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!std::isfinite(y[i])) {
            throw DomainError("covering_amplitude: non-finite coordinate");
        }
        if (std::floor(y[i]) == y[i] && std::fmod(std::abs(y[i]), 2.0) == 1.0) {
            throw DomainError("covering_amplitude: coordinate " + std::to_string(i) +
                              " is an odd integer (reflection coefficient 1 is excluded)");
        }
        const double c = std::floor(0.5 * (y[i] + 1.0));
        cell[i] = static_cast<int>(c);
        reduced[i] = y[i] - 2.0 * c;
    }
    return amplitude_a(reduced, LatticePoint(std::move(cell)));
}

}  // namespace layered
