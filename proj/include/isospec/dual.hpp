#pragma once

// Forward-mode automatic differentiation.
//
// The model evaluators are templates on the scalar type; instantiating them
// with Dual<double> yields exact first derivatives (W', psi') without finite
// differences. Dual<Dual<double>> gives second derivatives.

#include <cmath>
#include <type_traits>

namespace isospec::ad {

template <class T>
struct Dual {
    T v{};
    T d{};

    constexpr Dual() = default;
    constexpr Dual(T value) : v(value), d(T{}) {}  // NOLINT: implicit lift of constants
    constexpr Dual(T value, T deriv) : v(value), d(deriv) {}

    template <class U, std::enable_if_t<std::is_arithmetic_v<U> && !std::is_same_v<U, T>, int> = 0>
    constexpr Dual(U value) : v(T(value)), d(T{}) {}  // NOLINT

    Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
    Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
    Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
    Dual& operator/=(const Dual& o) {
        d = (d * o.v - v * o.d) / (o.v * o.v);
        v /= o.v;
        return *this;
    }
};

template <class T> struct is_dual : std::false_type {};
template <class T> struct is_dual<Dual<T>> : std::true_type {};

/// Seed a variable: value x with unit derivative.
template <class T>
constexpr Dual<T> variable(T x) { return {x, T(1)}; }

template <class T> constexpr Dual<T> operator-(const Dual<T>& a) { return {-a.v, -a.d}; }
template <class T> constexpr Dual<T> operator+(Dual<T> a, const Dual<T>& b) { return a += b; }
template <class T> constexpr Dual<T> operator-(Dual<T> a, const Dual<T>& b) { return a -= b; }
template <class T> constexpr Dual<T> operator*(Dual<T> a, const Dual<T>& b) { return a *= b; }
template <class T> constexpr Dual<T> operator/(Dual<T> a, const Dual<T>& b) { return a /= b; }

#define ISOSPEC_DUAL_SCALAR_OPS(OP)                                                          \
    template <class T, class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>          \
    constexpr Dual<T> operator OP(const Dual<T>& a, U b) { return a OP Dual<T>(T(b)); }      \
    template <class T, class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>          \
    constexpr Dual<T> operator OP(U a, const Dual<T>& b) { return Dual<T>(T(a)) OP b; }
ISOSPEC_DUAL_SCALAR_OPS(+)
ISOSPEC_DUAL_SCALAR_OPS(-)
ISOSPEC_DUAL_SCALAR_OPS(*)
ISOSPEC_DUAL_SCALAR_OPS(/)
#undef ISOSPEC_DUAL_SCALAR_OPS

template <class T> constexpr bool operator<(const Dual<T>& a, const Dual<T>& b) { return a.v < b.v; }
template <class T> constexpr bool operator>(const Dual<T>& a, const Dual<T>& b) { return a.v > b.v; }
template <class T> constexpr bool operator==(const Dual<T>& a, const Dual<T>& b) { return a.v == b.v; }

using std::cos;
using std::cosh;
using std::erf;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sinh;
using std::sqrt;
using std::tan;
using std::tanh;

template <class T> Dual<T> sin(const Dual<T>& a) { return {sin(a.v), a.d * cos(a.v)}; }
template <class T> Dual<T> cos(const Dual<T>& a) { return {cos(a.v), -a.d * sin(a.v)}; }
template <class T> Dual<T> tan(const Dual<T>& a) {
    T t = tan(a.v);
    return {t, a.d * (T(1) + t * t)};
}
template <class T> Dual<T> exp(const Dual<T>& a) {
    T e = exp(a.v);
    return {e, a.d * e};
}
template <class T> Dual<T> log(const Dual<T>& a) { return {log(a.v), a.d / a.v}; }
template <class T> Dual<T> sqrt(const Dual<T>& a) {
    T s = sqrt(a.v);
    return {s, a.d / (T(2) * s)};
}
template <class T> Dual<T> sinh(const Dual<T>& a) { return {sinh(a.v), a.d * cosh(a.v)}; }
template <class T> Dual<T> cosh(const Dual<T>& a) { return {cosh(a.v), a.d * sinh(a.v)}; }
template <class T> Dual<T> tanh(const Dual<T>& a) {
    T t = tanh(a.v);
    return {t, a.d * (T(1) - t * t)};
}
template <class T> Dual<T> erf(const Dual<T>& a) {
    const double two_over_sqrt_pi = 1.1283791670955126;
    return {erf(a.v), a.d * two_over_sqrt_pi * exp(-a.v * a.v)};
}
template <class T> Dual<T> pow(const Dual<T>& a, double p) {
    if (p == 0.0) return Dual<T>(T(1));
    return {pow(a.v, p), a.d * p * pow(a.v, p - 1.0)};
}

/// Plain value of a (possibly nested) dual number.
template <class T>
constexpr double value_of(const T& x) {
    if constexpr (is_dual<T>::value) {
        return value_of(x.v);
    } else {
        return static_cast<double>(x);
    }
}

/// f(x) and f'(x) for a scalar function templated on its argument type.
template <class F>
auto value_and_derivative(F&& f, double x) {
    auto r = f(variable(x));
    struct Result { double value; double derivative; };
    return Result{r.v, r.d};
}

/// f(x), f'(x), f''(x) via nested duals.
template <class F>
auto value_and_derivatives2(F&& f, double x) {
    using D1 = Dual<double>;
    using D2 = Dual<D1>;
    D2 arg{D1{x, 1.0}, D1{1.0, 0.0}};
    D2 r = f(arg);
    struct Result { double value; double first; double second; };
    return Result{r.v.v, r.v.d, r.d.d};
}

}  // namespace isospec::ad
