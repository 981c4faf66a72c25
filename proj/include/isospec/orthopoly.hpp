#pragma once

// Classical Laguerre/Jacobi polynomials and the X_m exceptional families built
// from them. All evaluators are templates on the argument type so they can be
// differentiated with ad::Dual. Degree -1 is the zero polynomial.

#include <cmath>
#include <string>

#include "isospec/dual.hpp"
#include "isospec/error.hpp"

namespace isospec::orthopoly {

struct LaguerreParams {
    int n;
    double alpha;
};

struct JacobiParams {
    int n;
    double alpha;
    double beta;
};

/// L_n^{(alpha)}(x) by the three-term recurrence in degree.
template <class T>
T laguerre(int n, double alpha, const T& x) {
    detail::require(n >= -1, "Laguerre degree must be >= -1");
    if (n == -1) return T(0.0);
    T prev(1.0);
    if (n == 0) return prev;
    T cur = (1.0 + alpha) - x;
    for (int k = 2; k <= n; ++k) {
        T next = ((2.0 * k - 1.0 + alpha - x) * cur - (k - 1.0 + alpha) * prev) / double(k);
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace series {

// Generalised binomial C(top, k) for real top.
inline double binomial(double top, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (top - i) / (i + 1.0);
    return r;
}

// Explicit sum, valid for every real alpha, beta. Used where the recurrence
// has a vanishing leading coefficient.
template <class T>
T jacobi_sum(int n, double a, double b, const T& z) {
    T lo = (z - 1.0) / 2.0;
    T hi = (z + 1.0) / 2.0;
    T sum(0.0);
    for (int s = 0; s <= n; ++s) {
        T term = T(binomial(n + a, n - s) * binomial(n + b, s));
        for (int i = 0; i < s; ++i) term = term * lo;
        for (int i = 0; i < n - s; ++i) term = term * hi;
        sum = sum + term;
    }
    return sum;
}

}  // namespace series

/// P_n^{(alpha,beta)}(z) by the three-term recurrence in degree. The
/// recurrence is polynomial in alpha and beta, so negative and non-integer
/// parameters are fine; degenerate parameter combinations fall back to the
/// explicit binomial sum.
template <class T>
T jacobi(int n, double alpha, double beta, const T& z) {
    detail::require(n >= -1, "Jacobi degree must be >= -1");
    if (n == -1) return T(0.0);
    T prev(1.0);
    if (n == 0) return prev;
    const double ab = alpha + beta;
    T cur = (alpha + 1.0) + (ab + 2.0) * (z - 1.0) / 2.0;
    for (int k = 2; k <= n; ++k) {
        const double c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0);
        if (c1 == 0.0) return series::jacobi_sum(n, alpha, beta, z);
        const double c2a = (2.0 * k + ab - 1.0) * (2.0 * k + ab) * (2.0 * k + ab - 2.0);
        const double c2b = (2.0 * k + ab - 1.0) * (alpha * alpha - beta * beta);
        const double c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab);
        T next = ((c2a * z + c2b) * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    return cur;
}

template <class T>
T laguerre(const LaguerreParams& p, const T& x) {
    return laguerre(p.n, p.alpha, x);
}

template <class T>
T jacobi(const JacobiParams& p, const T& z) {
    return jacobi(p.n, p.alpha, p.beta, z);
}

/// Exceptional Laguerre polynomial of total degree `deg` = n + m:
///   L^_{n+m}(z) = L_m^{(a)}(-z) L_n^{(a-1)}(z) + L_m^{(a-1)}(-z) L_{n-1}^{(a)}(z).
/// m = 0 reduces to the classical L_n^{(a)}.
template <class T>
T xm_laguerre(int m, double alpha, int deg, const T& z) {
    detail::require(m >= 0, "X_m index must be non-negative");
    detail::require(deg >= m, "X_m Laguerre degree " + std::to_string(deg) +
                    " is below the index m = " + std::to_string(m));
    const int n = deg - m;
    return laguerre(m, alpha, -z) * laguerre(n, alpha - 1.0, z) +
           laguerre(m, alpha - 1.0, -z) * laguerre(n - 1, alpha, z);
}

/// Exceptional Jacobi polynomial of total degree `deg` = n + m:
///   P^_{n+m}(z) = (-1)^m [ (1+a+b+n)/(1+a+n) (z-1)/2 P_m^{(-a-1,b-1)} P_{n-1}^{(a+2,b)}
///                          + (1+a-m)/(1+a+n)      P_m^{(-2-a,b)}  P_n^{(a+1,b-1)} ].
template <class T>
T xm_jacobi(int m, double alpha, double beta, int deg, const T& z) {
    detail::require(m >= 0, "X_m index must be non-negative");
    detail::require(deg >= m, "X_m Jacobi degree " + std::to_string(deg) +
                    " is below the index m = " + std::to_string(m));
    const int n = deg - m;
    const double denom = 1.0 + alpha + n;
    detail::require(denom != 0.0, "X_m Jacobi: 1 + alpha + n vanishes");
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    T first = ((1.0 + alpha + beta + n) / denom) * ((z - 1.0) / 2.0) *
              jacobi(m, -alpha - 1.0, beta - 1.0, z) * jacobi(n - 1, alpha + 2.0, beta, z);
    T second = ((1.0 + alpha - m) / denom) * jacobi(m, -2.0 - alpha, beta, z) *
               jacobi(n, alpha + 1.0, beta - 1.0, z);
    return sign * (first + second);
}

}  // namespace isospec::orthopoly
