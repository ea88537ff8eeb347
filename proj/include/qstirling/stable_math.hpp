#pragma once

#include <cmath>
#include <stdexcept>

namespace qstirling {

// log(cosh x) without overflow: |x| + log1p(e^{-2|x|}) - log 2.
inline double log_cosh(double x) {
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - M_LN2;
}

// log(sinh x) for x > 0: x + log1p(-e^{-2x}) - log 2.
inline double log_sinh(double x) {
    if (x <= 0.0) throw std::domain_error("log_sinh: requires x > 0");
    return x + std::log1p(-std::exp(-2.0 * x)) - M_LN2;
}

inline double sech(double x) { return 1.0 / std::cosh(x); }

inline double coth(double x) {
    if (x == 0.0) throw std::domain_error("coth: requires x != 0");
    return 1.0 / std::tanh(x);
}

// Bosonic entropy g(N) = (N+1) log(N+1) - N log N, g(0) = 0.
// Written as log(N+1) + N log1p(1/N) so large N does not cancel.
inline double bosonic_entropy(double n_mean) {
    if (n_mean < 0.0) throw std::domain_error("bosonic_entropy: requires N >= 0");
    if (n_mean == 0.0) return 0.0;
    return std::log1p(n_mean) + n_mean * std::log1p(1.0 / n_mean);
}

// Binary (two-outcome) entropy -p log p - (1-p) log(1-p).
inline double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("binary_entropy: requires p in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

}  // namespace qstirling
