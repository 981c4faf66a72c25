#include <catch_amalgamated.hpp>

#include <cmath>

#include "isospec/dual.hpp"
#include "isospec/orthopoly.hpp"

using namespace isospec::orthopoly;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double binom(double top, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (top - i) / (i + 1.0);
    return r;
}

// L_n^(a)(x) = sum_k C(n+a, n-k) (-x)^k / k!
double laguerre_series(int n, double a, double x) {
    double s = 0.0;
    double fact = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        s += binom(n + a, n - k) * std::pow(-x, k) / fact;
    }
    return s;
}

// P_n^(a,b)(z) = (a+1)_n / n! 2F1(-n, n+a+b+1; a+1; (1-z)/2), summed in
// long double since the series cancels badly near z = -1
double jacobi_hypergeometric(int n, double a, double b, double z) {
    long double poch = 1.0L;
    long double fact = 1.0L;
    for (int i = 0; i < n; ++i) {
        poch *= a + 1 + i;
        fact *= i + 1;
    }
    const long double u = (1.0L - z) / 2;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 0; k < n; ++k) {
        term *= (-n + k) * (n + (long double)a + b + 1 + k) / ((a + 1 + k) * (k + 1.0L)) * u;
        sum += term;
    }
    return static_cast<double>(poch / fact * sum);
}

}  // namespace

TEST_CASE("Laguerre base cases") {
    CHECK(laguerre(-1, 0.3, 2.0) == 0.0);
    CHECK(laguerre(0, 0.3, 2.0) == 1.0);
    CHECK_THAT(laguerre(1, 0.3, 2.0), WithinAbs(1.0 + 0.3 - 2.0, 1e-15));
    CHECK_THROWS(laguerre(-2, 0.3, 2.0));
}

TEST_CASE("Laguerre recurrence against the explicit series") {
    CHECK_THAT(laguerre(4, 0.5, 1.3), WithinRel(-0.94468333333333333333, 1e-13));
    CHECK_THAT(laguerre(7, 2.25, 3.1), WithinRel(3.7497428085700334821, 1e-13));
    for (int n = 0; n <= 12; ++n) {
        for (double a : {-0.5, 0.5, 1.5, 2.5}) {
            for (double x : {-10.0, -3.0, 0.2, 4.4, 10.0}) {
                const double ref = laguerre_series(n, a, x);
                INFO("n=" << n << " a=" << a << " x=" << x);
                CHECK(std::abs(laguerre(n, a, x) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
            }
        }
    }
}

TEST_CASE("Jacobi base cases") {
    CHECK(jacobi(-1, 1.0, 2.0, 0.3) == 0.0);
    CHECK(jacobi(0, 1.0, 2.0, 0.3) == 1.0);
    CHECK_THAT(jacobi(1, 2.0, 3.0, 1.0), WithinAbs(3.0, 1e-15));
}

TEST_CASE("Jacobi recurrence against the hypergeometric series") {
    CHECK_THAT(jacobi(3, -4.5, 2.5, 0.4), WithinRel(-3.8255, 1e-13));
    CHECK_THAT(jacobi(5, 1.5, -6.5, 1.7), WithinRel(24.0955115625, 1e-13));
    for (int n = 0; n <= 12; ++n) {
        for (auto [a, b] : {std::pair{1.5, 3.5}, {-4.5, 2.5}, {-3.5, 3.5}, {1.5, -4.5}, {2.5, -6.5}}) {
            for (double z : {-0.9, 0.0, 0.7, 1.3, 3.0}) {
                const double ref = jacobi_hypergeometric(n, a, b, z);
                INFO("n=" << n << " a=" << a << " b=" << b << " z=" << z);
                CHECK(std::abs(jacobi(n, a, b, z) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
            }
        }
    }
}

TEST_CASE("Jacobi falls back to the explicit sum when the recurrence degenerates") {
    // alpha + beta = -2 zeroes the leading coefficient at k = 2
    const double a = -0.5;
    const double b = -1.5;
    for (double z : {-0.3, 0.6, 2.0}) {
        CHECK_THAT(jacobi(3, a, b, z), WithinAbs(jacobi_hypergeometric(3, a, b, z), 1e-12));
        CHECK_THAT(series::jacobi_sum(3, a, b, z), WithinAbs(jacobi_hypergeometric(3, a, b, z), 1e-12));
    }
}

TEST_CASE("X_m Laguerre composition identity") {
    // n = 0: second term vanishes
    for (double a : {0.5, 1.5}) {
        for (double z : {0.2, 2.0}) CHECK_THAT(xm_laguerre(1, a, 1, z), WithinAbs(1.0 + a + z, 1e-14));
    }
    CHECK_THAT(xm_laguerre(1, 1.5, 2, 0.8), WithinRel(4.61, 1e-13));
    CHECK_THAT(xm_laguerre(2, 2.5, 5, 1.1), WithinRel(36.550853333333333333, 1e-13));
    CHECK(xm_laguerre(3, 0.7, 3, 0.4) == laguerre(3, 0.7, -0.4));
    CHECK_THROWS(xm_laguerre(2, 1.5, 1, 0.3));
}

TEST_CASE("X_m Jacobi composition identity") {
    const double a = 1.5;
    const double b = 3.5;
    for (double z : {-0.4, 0.3}) {
        const double expect = -1.0 * ((1 + a - 1) / (1 + a)) * jacobi(1, -2 - a, b, z);
        CHECK_THAT(xm_jacobi(1, a, b, 1, z), WithinAbs(expect, 1e-14));
    }
    CHECK_THAT(xm_jacobi(1, 1.5, 3.5, 2, 0.3), WithinAbs(-0.1, 1e-14));
    CHECK_THAT(xm_jacobi(2, 1.5, -4.5, 4, 1.6), WithinRel(4.396875, 1e-13));
    CHECK_THROWS(xm_jacobi(1, a, b, 0, 0.3));
    CHECK_THROWS(xm_jacobi(1, -1.0, b, 1, 0.3));
}

TEST_CASE("polynomials differentiate through dual numbers") {
    using isospec::ad::value_and_derivative;
    auto r = value_and_derivative([](auto x) { return laguerre(5, 1.5, x); }, 0.7);
    // d/dx L_n^(a) = -L_{n-1}^(a+1)
    CHECK_THAT(r.derivative, WithinRel(-laguerre(4, 2.5, 0.7), 1e-13));
    auto j = value_and_derivative([](auto z) { return jacobi(4, 1.5, -2.5, z); }, 0.35);
    // d/dz P_n^(a,b) = (n+a+b+1)/2 P_{n-1}^(a+1,b+1)
    CHECK_THAT(j.derivative, WithinRel((4 + 1.5 - 2.5 + 1) / 2 * jacobi(3, 2.5, -1.5, 0.35), 1e-12));
}
