#include <doctest.h>

#include <cmath>

#include "qstirling/stable_math.hpp"

using namespace qstirling;

TEST_CASE("log_cosh stays finite and accurate across scales") {
    CHECK(log_cosh(800.0) == doctest::Approx(799.30685281944005469).epsilon(1e-14));
    CHECK(log_cosh(0.0) == 0.0);
    CHECK(log_cosh(-3.2) == log_cosh(3.2));
    CHECK(log_cosh(1e-8) == doctest::Approx(5e-17).epsilon(1e-6));
    CHECK(std::isfinite(log_cosh(1e8)));
}

TEST_CASE("log_sinh matches the naive form where that is safe") {
    CHECK(log_sinh(0.01) == doctest::Approx(-4.6051535193769799042).epsilon(1e-14));
    CHECK(log_sinh(2.0) == doctest::Approx(std::log(std::sinh(2.0))).epsilon(1e-14));
    CHECK(std::isfinite(log_sinh(900.0)));
    CHECK_THROWS_AS(log_sinh(0.0), std::domain_error);
    CHECK_THROWS_AS(log_sinh(-1.0), std::domain_error);
}

TEST_CASE("bosonic entropy g(N)") {
    CHECK(bosonic_entropy(0.0) == 0.0);
    CHECK(bosonic_entropy(1.0) == doctest::Approx(1.3862943611198906188).epsilon(1e-15));
    // strictly increasing on a grid
    double prev = -1.0;
    for (double n = 0.0; n <= 10.0; n += 0.5) {
        const double g = bosonic_entropy(n);
        CHECK(g > prev);
        prev = g;
    }
    // large-N form log N + 1 + 1/(2N) holds without cancellation
    const double n = 1e12;
    CHECK(bosonic_entropy(n) ==
          doctest::Approx(std::log(n) + 1.0 + 0.5 / n).epsilon(1e-12));
    CHECK_THROWS_AS(bosonic_entropy(-0.1), std::domain_error);
}

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(M_LN2).epsilon(1e-15));
    CHECK_THROWS_AS(binary_entropy(1.5), std::domain_error);
}
