#pragma once

// The three rationally extended families: radial oscillator (X_m Laguerre),
// Scarf-I and generalized Poschl-Teller (X_m Jacobi).
//
// The superpotential W = W_con + W_m,rat is the source of truth for the
// partner potentials, V(-+) = W^2 -+ W', with W' obtained by forward-mode
// differentiation. The expanded closed forms (`printed_v_minus`, the X_1
// displays) are kept as independent cross-checks.

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "isospec/dual.hpp"
#include "isospec/error.hpp"
#include "isospec/numerics.hpp"
#include "isospec/orthopoly.hpp"

namespace isospec {

enum class Family { radial_oscillator, scarf1, gpt };

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::radial_oscillator: return "radosc";
        case Family::scarf1: return "scarf1";
        case Family::gpt: return "gpt";
    }
    return "?";
}

struct ModelSpec {
    Family family = Family::radial_oscillator;
    double omega = 0.0;  // radial oscillator only
    int ell = 0;         // radial oscillator only
    double A = 0.0;      // Scarf-I / GPT
    double B = 0.0;      // Scarf-I / GPT
    int m = 1;           // X_m index; m = 0 is the conventional potential

    static ModelSpec radial_oscillator(double omega, int ell, int m) {
        ModelSpec s;
        s.family = Family::radial_oscillator;
        s.omega = omega;
        s.ell = ell;
        s.m = m;
        s.validate();
        return s;
    }
    static ModelSpec scarf1(double A, double B, int m) {
        ModelSpec s;
        s.family = Family::scarf1;
        s.A = A;
        s.B = B;
        s.m = m;
        s.validate();
        return s;
    }
    static ModelSpec gpt(double A, double B, int m) {
        ModelSpec s;
        s.family = Family::gpt;
        s.A = A;
        s.B = B;
        s.m = m;
        s.validate();
        return s;
    }

    /// Jacobi parameters of the X_m polynomials (not used by the oscillator).
    double alpha() const { return family == Family::scarf1 ? A - B - 0.5 : B - A - 0.5; }
    double beta() const { return family == Family::scarf1 ? A + B - 0.5 : -B - A - 0.5; }

    DomainKind domain() const {
        switch (family) {
            case Family::radial_oscillator: return DomainKind::half_line_radial;
            case Family::scarf1: return DomainKind::finite_interval;
            case Family::gpt: return DomainKind::half_line_hyperbolic;
        }
        return DomainKind::half_line_radial;
    }

    void validate() const {
        detail::require(m >= 0, "rational index m must be >= 0");
        switch (family) {
            case Family::radial_oscillator:
                detail::require(omega > 0.0, "oscillator needs omega > 0");
                detail::require(ell >= 0, "oscillator needs ell >= 0");
                break;
            case Family::scarf1:
                detail::require(B > 0.0 && B < A - 1.0, "Scarf-I needs 0 < B < A - 1");
                break;
            case Family::gpt:
                detail::require(A + 1.0 > 1.0 && B > A + 1.0, "GPT needs B > A + 1 > 1");
                break;
        }
    }

    std::string describe() const {
        std::ostringstream os;
        os << to_string(family);
        if (family == Family::radial_oscillator) {
            os << "(omega=" << omega << ",ell=" << ell;
        } else {
            os << "(A=" << A << ",B=" << B;
        }
        os << ",m=" << m << ")";
        return os.str();
    }
};

namespace models {

namespace detail {

using orthopoly::jacobi;
using orthopoly::laguerre;

// Laguerre with any negative degree treated as the zero polynomial.
template <class T>
T lag(int n, double a, const T& x) {
    return n < 0 ? T(0.0) : laguerre(n, a, x);
}

template <class T>
T jac(int n, double a, double b, const T& z) {
    return n < 0 ? T(0.0) : jacobi(n, a, b, z);
}

template <class T>
void check_denominator(const T& d) {
    const double v = ad::value_of(d);
    if (v == 0.0 || !std::isfinite(v)) {
        throw DomainError("rational term has a vanishing denominator for these parameters");
    }
}

// 1 - sin x and 1 + sin x without cancellation near x = +-pi/2.
template <class T>
T one_minus_sin(const T& x) {
    using std::sin;
    T s = sin(std::numbers::pi / 4 - x / 2.0);
    return 2.0 * s * s;
}
template <class T>
T one_plus_sin(const T& x) {
    using std::cos;
    T c = cos(std::numbers::pi / 4 - x / 2.0);
    return 2.0 * c * c;
}
// cosh x - 1 without cancellation near 0.
template <class T>
T cosh_minus_one(const T& x) {
    using std::sinh;
    T s = sinh(x / 2.0);
    return 2.0 * s * s;
}

inline double factorial(int n) { return std::tgamma(n + 1.0); }

// Square of a normalisation constant must be positive; otherwise the level
// is not normalisable for these parameters.
inline double checked_sqrt(double n2, int level) {
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw DomainError("level " + std::to_string(level) + " is not normalisable for these parameters");
    }
    return std::sqrt(n2);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Superpotential

template <class T>
T w_con(const ModelSpec& s, const T& x) {
    using std::cosh;
    using std::sinh;
    using std::tan;
    using std::cos;
    switch (s.family) {
        case Family::radial_oscillator:
            return s.omega * x / 2.0 - (s.ell + 1.0) / x;
        case Family::scarf1:
            return s.A * tan(x) - s.B / cos(x);
        case Family::gpt:
            return s.A * cosh(x) / sinh(x) - s.B / sinh(x);
    }
    return T(0.0);
}

template <class T>
T w_rat(const ModelSpec& s, const T& x) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    using detail::jac;
    using detail::lag;
    const int m = s.m;
    if (m == 0) return T(0.0);
    if (s.family == Family::radial_oscillator) {
        const double l = s.ell;
        T mz = -s.omega * x * x / 2.0;
        T d1 = lag(m, l - 0.5, mz);
        T d2 = lag(m, l + 0.5, mz);
        detail::check_denominator(d1);
        detail::check_denominator(d2);
        return s.omega * x * (lag(m - 1, l + 0.5, mz) / d1 - lag(m - 1, l + 1.5, mz) / d2);
    }
    const double a = s.alpha();
    const double b = s.beta();
    T z = s.family == Family::scarf1 ? T(sin(x)) : T(cosh(x));
    T trig = s.family == Family::scarf1 ? T(cos(x)) : T(sinh(x));
    T d1 = jac(m, -a - 2.0, b, z);
    T d2 = jac(m, -a - 1.0, b - 1.0, z);
    detail::check_denominator(d1);
    detail::check_denominator(d2);
    return -(b - a + m - 1.0) / 2.0 * trig * (jac(m - 1, -a - 1.0, b + 1.0, z) / d1 - jac(m - 1, -a, b, z) / d2);
}

template <class T>
T superpotential(const ModelSpec& s, const T& x) {
    return w_con(s, x) + w_rat(s, x);
}

/// Limits of W at the two ends of the domain, when finite.
struct AsymptoticW {
    std::optional<double> lower;
    std::optional<double> upper;
};

inline AsymptoticW asymptotic_w(const ModelSpec& s) {
    if (s.family == Family::gpt) return {std::nullopt, s.A};
    return {};
}

/// V(-) = W^2 - W'.
inline double v_minus(const ModelSpec& s, double x) {
    auto r = ad::value_and_derivative([&](auto t) { return superpotential(s, t); }, x);
    return r.value * r.value - r.derivative;
}

/// V(+) = W^2 + W'.
inline double v_plus(const ModelSpec& s, double x) {
    auto r = ad::value_and_derivative([&](auto t) { return superpotential(s, t); }, x);
    return r.value * r.value + r.derivative;
}

// ---------------------------------------------------------------------------
// Expanded closed forms (cross-checks for W^2 -+ W')

/// V(-)_con + V(-)_m,rat in expanded form.
inline double printed_v_minus(const ModelSpec& s, double x) {
    using detail::jac;
    using detail::lag;
    const int m = s.m;
    switch (s.family) {
        case Family::radial_oscillator: {
            const double w = s.omega;
            const double l = s.ell;
            const double r2 = x * x;
            const double mz = -w * r2 / 2.0;
            const double con = w * w * r2 / 4.0 + l * (l + 1.0) / r2 - w * (l + 1.5);
            const double d = lag(m, l - 0.5, mz);
            const double q = lag(m - 1, l + 0.5, mz) / d;
            const double rat = -w * w * r2 * lag(m - 2, l + 1.5, mz) / d + w * (w * r2 + 2.0 * l - 1.0) * q +
                               2.0 * w * w * r2 * q * q - 2.0 * m * w;
            return con + rat;
        }
        case Family::scarf1: {
            const double A = s.A;
            const double B = s.B;
            const double a = s.alpha();
            const double b = s.beta();
            const double z = std::sin(x);
            const double sec = 1.0 / std::cos(x);
            const double con = ((A - 1.0) * A + B * B) * sec * sec - B * (2.0 * A - 1.0) * sec * std::tan(x) - A * A;
            const double q = jac(m - 1, -a, b, z) / jac(m, -a - 1.0, b - 1.0, z);
            const double c = 2.0 * B + m - 1.0;
            const double cs = std::cos(x);
            const double rat = c * (2.0 * A - 1.0 + (1.0 - 2.0 * B) * z) * q + c * c / 2.0 * cs * cs * q * q + 2.0 * m * c;
            return con + rat;
        }
        case Family::gpt: {
            const double A = s.A;
            const double B = s.B;
            const double a = s.alpha();
            const double b = s.beta();
            const double z = std::cosh(x);
            const double csch = 1.0 / std::sinh(x);
            const double con = ((A + 1.0) * A + B * B) * csch * csch - B * (2.0 * A + 1.0) * csch * z * csch + A * A;
            const double q = jac(m - 1, -a, b, z) / jac(m, -a - 1.0, b - 1.0, z);
            const double c = 2.0 * B - m + 1.0;
            const double sh = std::sinh(x);
            const double rat = -c * (2.0 * A + 1.0 - (2.0 * B + 1.0) * z) * q + c * c / 2.0 * sh * sh * q * q + 2.0 * m * c;
            return con + rat;
        }
    }
    return 0.0;
}

/// V(+)_con + V(+)_m,rat in expanded form.
inline double printed_v_plus(const ModelSpec& s, double x) {
    using detail::jac;
    using detail::lag;
    const int m = s.m;
    switch (s.family) {
        case Family::radial_oscillator: {
            const double w = s.omega;
            const double l = s.ell;
            const double r2 = x * x;
            const double mz = -w * r2 / 2.0;
            const double con = w * w * r2 / 4.0 + (l + 1.0) * (l + 2.0) / r2 - w * (l + 0.5);
            const double d = lag(m, l + 0.5, mz);
            const double q = lag(m - 1, l + 1.5, mz) / d;
            const double rat = -w * w * r2 * lag(m - 2, l + 2.5, mz) / d + w * (w * r2 + 2.0 * l + 1.0) * q +
                               2.0 * w * w * r2 * q * q - 2.0 * m * w;
            return con + rat;
        }
        case Family::scarf1: {
            const double A = s.A;
            const double B = s.B;
            const double a = s.alpha();
            const double b = s.beta();
            const double z = std::sin(x);
            const double sec = 1.0 / std::cos(x);
            const double con = ((A + 1.0) * A + B * B) * sec * sec - B * (2.0 * A + 1.0) * sec * std::tan(x) - A * A;
            const double q = jac(m - 1, -a - 1.0, b + 1.0, z) / jac(m, -a - 2.0, b, z);
            const double c = 2.0 * B + m - 1.0;
            const double cs = std::cos(x);
            const double rat = c * (2.0 * A + 1.0 + (1.0 - 2.0 * B) * z) * q + c * c / 2.0 * cs * cs * q * q + 2.0 * m * c;
            return con + rat;
        }
        case Family::gpt: {
            const double A = s.A;
            const double B = s.B;
            const double a = s.alpha();
            const double b = s.beta();
            const double z = std::cosh(x);
            const double csch = 1.0 / std::sinh(x);
            const double con = (A * (A - 1.0) + B * B) * csch * csch - B * (2.0 * A - 1.0) * csch * z * csch + A * A;
            const double q = jac(m - 1, -a - 1.0, b + 1.0, z) / jac(m, -a - 2.0, b, z);
            const double c = 2.0 * B - m + 1.0;
            const double sh = std::sinh(x);
            const double rat = -c * (2.0 * A - 1.0 - (2.0 * B + 1.0) * z) * q + c * c / 2.0 * sh * sh * q * q + 2.0 * m * c;
            return con + rat;
        }
    }
    return 0.0;
}

/// Dedicated X_1 displays of V(-) (m = 1 only).
inline double x1_v_minus(const ModelSpec& s, double x) {
    ::isospec::detail::require(s.m == 1, "X_1 closed form needs m = 1");
    switch (s.family) {
        case Family::radial_oscillator: {
            const double w = s.omega;
            const double l = s.ell;
            const double d = w * x * x + 2.0 * l + 1.0;
            return w * w * x * x / 4.0 + l * (l + 1.0) / (x * x) +
                   4.0 * w * (1.0 / d - 2.0 * (2.0 * l + 1.0) / (d * d)) - w * (l + 1.5);
        }
        case Family::scarf1: {
            const double A = s.A;
            const double B = s.B;
            const double sec = 1.0 / std::cos(x);
            const double k = 2.0 * A - 1.0;
            const double d = k - 2.0 * B * std::sin(x);
            return ((A - 1.0) * A + B * B) * sec * sec - B * k * sec * std::tan(x) +
                   2.0 * (k / d - (k * k - 4.0 * B * B) / (d * d)) - A * A;
        }
        case Family::gpt: {
            const double A = s.A;
            const double B = s.B;
            const double csch = 1.0 / std::sinh(x);
            const double k = 2.0 * A + 1.0;
            const double d = 2.0 * B * std::cosh(x) - k;
            return (B * B + A * (A + 1.0)) * csch * csch - B * k * csch * std::cosh(x) * csch +
                   2.0 * (k / d - (4.0 * B * B - k * k) / (d * d)) + A * A;
        }
    }
    return 0.0;
}

/// Dedicated X_1 displays of V(+) (m = 1 only).
inline double x1_v_plus(const ModelSpec& s, double x) {
    ::isospec::detail::require(s.m == 1, "X_1 closed form needs m = 1");
    switch (s.family) {
        case Family::radial_oscillator: {
            const double w = s.omega;
            const double l = s.ell;
            const double d = w * x * x + 2.0 * l + 3.0;
            return w * w * x * x / 4.0 + (l + 1.0) * (l + 2.0) / (x * x) +
                   4.0 * w * (1.0 / d - 2.0 * (2.0 * l + 3.0) / (d * d)) - w * (l + 0.5);
        }
        case Family::scarf1: {
            const double A = s.A;
            const double B = s.B;
            const double sec = 1.0 / std::cos(x);
            const double k = 2.0 * A + 1.0;
            const double d = k - 2.0 * B * std::sin(x);
            return ((A + 1.0) * A + B * B) * sec * sec - B * k * sec * std::tan(x) +
                   2.0 * (k / d - (k * k - 4.0 * B * B) / (d * d)) - A * A;
        }
        case Family::gpt: {
            const double A = s.A;
            const double B = s.B;
            const double csch = 1.0 / std::sinh(x);
            const double k = 2.0 * A - 1.0;
            const double d = 2.0 * B * std::cosh(x) - k;
            return (B * B + A * (A - 1.0)) * csch * csch - B * k * csch * std::cosh(x) * csch +
                   2.0 * (k / d - (4.0 * B * B - k * k) / (d * d)) + A * A;
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Spectrum

/// Number of bound levels of V(-); nullopt when the spectrum is purely
/// discrete and infinite. For GPT a level n is bound iff n < A, i.e. its
/// energy lies strictly below the continuum threshold A^2.
inline std::optional<int> bound_state_count(const ModelSpec& s) {
    if (s.family != Family::gpt) return std::nullopt;
    int n = 0;
    while (n < s.A) ++n;
    return n;
}

/// Upper end of the bound spectrum (continuum threshold W(+inf)^2), or +inf.
inline double continuum_threshold(const ModelSpec& s) {
    return s.family == Family::gpt ? s.A * s.A : std::numeric_limits<double>::infinity();
}

inline bool is_bound_level(const ModelSpec& s, int n) {
    if (n < 0) return false;
    auto cap = bound_state_count(s);
    return !cap || n < *cap;
}

/// E(-)_n; E(+)_n = energy(s, n + 1).
inline double energy(const ModelSpec& s, int n) {
    ::isospec::detail::require(n >= 0, "level must be >= 0");
    ::isospec::detail::require(is_bound_level(s, n),
                               "level " + std::to_string(n) + " exceeds the bound-state count of " + s.describe());
    switch (s.family) {
        case Family::radial_oscillator: return 2.0 * n * s.omega;
        case Family::scarf1: return (s.A + n) * (s.A + n) - s.A * s.A;
        case Family::gpt: return s.A * s.A - (s.A - n) * (s.A - n);
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Eigenfunctions

/// Normalisation constant of psi(-)_n. For the partner states use
/// `plus = true` (oscillator: ell -> ell+1; Jacobi families: alpha, beta -> +1).
inline double norm_constant(const ModelSpec& s, int n, bool plus = false) {
    using detail::factorial;
    const int m = s.m;
    switch (s.family) {
        case Family::radial_oscillator: {
            const double l = s.ell + (plus ? 1.0 : 0.0);
            const double w = s.omega;
            const double n2 = factorial(n) * std::pow(w, l + 1.5) /
                              (std::pow(2.0, l + 0.5) * (l + n + m + 0.5) * std::tgamma(l + n + 0.5));
            return detail::checked_sqrt(n2, n);
        }
        case Family::scarf1: {
            const double a = s.alpha() + (plus ? 1.0 : 0.0);
            const double b = s.beta() + (plus ? 1.0 : 0.0);
            const double n2 = factorial(n) * (n + a + 1.0) * (n + a + 1.0) * (a + b + 2.0 * n + 1.0) *
                              std::tgamma(n + a + b + 1.0) /
                              (std::pow(2.0, a + b + 1.0) * (n + a - m + 1.0) * (n + m + b) *
                               std::tgamma(n + a + 2.0) * std::tgamma(n + b));
            return detail::checked_sqrt(n2, n);
        }
        case Family::gpt: {
            const double a = s.alpha() + (plus ? 1.0 : 0.0);
            const double b = s.beta() + (plus ? 1.0 : 0.0);
            const double n2 = factorial(n) * (-a - b - 2.0 * n - 1.0) * (a + n + 1.0) * std::tgamma(-b - n + 1.0) /
                              (std::pow(2.0, a + b + 1.0) * (-b - n - m) * (n + a - m + 1.0) *
                               std::tgamma(a + n + 1.0) * std::tgamma(-a - b - n));
            return detail::checked_sqrt(n2, n);
        }
    }
    return 0.0;
}

namespace detail {

template <class T>
T eigenfunction(const ModelSpec& s, int n, const T& x, bool plus, double norm) {
    using std::cosh;
    using std::exp;
    using std::pow;
    using std::sin;
    const int m = s.m;
    // The X_m Jacobi polynomials carry (-1)^m; undo it so psi0 > 0.
    const double phase = m % 2 == 0 ? 1.0 : -1.0;
    switch (s.family) {
        case Family::radial_oscillator: {
            const double l = s.ell + (plus ? 1.0 : 0.0);
            T z = s.omega * x * x / 2.0;
            T d = lag(m, l - 0.5, T(-z));
            check_denominator(d);
            return norm * pow(x, l + 1.0) * exp(-s.omega * x * x / 4.0) / d *
                   orthopoly::xm_laguerre(m, l + 0.5, n + m, z);
        }
        case Family::scarf1: {
            const double a = s.alpha();
            const double b = s.beta();
            const double up = plus ? 1.0 : 0.0;
            T z = sin(x);
            T d = plus ? jac(m, -a - 2.0, b, z) : jac(m, -a - 1.0, b - 1.0, z);
            check_denominator(d);
            return phase * norm * pow(one_minus_sin(x), (s.A - s.B + up) / 2.0) *
                   pow(one_plus_sin(x), (s.A + s.B + up) / 2.0) / d * orthopoly::xm_jacobi(m, a + up, b + up, n + m, z);
        }
        case Family::gpt: {
            const double a = s.alpha();
            const double b = s.beta();
            const double up = plus ? 1.0 : 0.0;
            T z = cosh(x);
            T d = plus ? jac(m, -a - 2.0, b, z) : jac(m, -a - 1.0, b - 1.0, z);
            check_denominator(d);
            return phase * norm * pow(cosh_minus_one(x), (s.B - s.A + up) / 2.0) *
                   pow(z + 1.0, -(s.B + s.A - up) / 2.0) / d * orthopoly::xm_jacobi(m, a + up, b + up, n + m, z);
        }
    }
    return T(0.0);
}

}  // namespace detail

/// Normalised bound state psi(-)_n of V(-).
template <class T>
T eigenfunction_minus(const ModelSpec& s, int n, const T& x) {
    ::isospec::detail::require(is_bound_level(s, n), "level " + std::to_string(n) + " is not bound in " + s.describe());
    return detail::eigenfunction(s, n, x, false, norm_constant(s, n, false));
}

/// Normalised bound state psi(+)_n of V(+) (energy E(-)_{n+1}).
template <class T>
T eigenfunction_plus(const ModelSpec& s, int n, const T& x) {
    ::isospec::detail::require(is_bound_level(s, n + 1),
                               "partner level " + std::to_string(n) + " is not bound in " + s.describe());
    return detail::eigenfunction(s, n, x, true, norm_constant(s, n, true));
}

// ---------------------------------------------------------------------------
// Closed-form running integral of psi0^2 for the three worked X_1 instances

enum class WorkedInstance { radosc_w2_l1_m1, scarf_a3_b1_m1, gpt_a1_b3_m1 };

inline std::optional<WorkedInstance> worked_instance(const ModelSpec& s) {
    if (s.m != 1) return std::nullopt;
    if (s.family == Family::radial_oscillator && s.omega == 2.0 && s.ell == 1) return WorkedInstance::radosc_w2_l1_m1;
    if (s.family == Family::scarf1 && s.A == 3.0 && s.B == 1.0) return WorkedInstance::scarf_a3_b1_m1;
    if (s.family == Family::gpt && s.A == 1.0 && s.B == 3.0) return WorkedInstance::gpt_a1_b3_m1;
    return std::nullopt;
}

/// I_1(x) = int psi0^2 from the lower end of the domain, in closed form.
inline double closed_form_I1(const ModelSpec& s, double x) {
    auto inst = worked_instance(s);
    if (!inst) throw DomainError("no closed-form I_1 for " + s.describe());
    switch (*inst) {
        case WorkedInstance::radosc_w2_l1_m1: {
            const double r2 = x * x;
            return -2.0 * std::exp(-r2) * x * (15.0 + 4.0 * r2 * (5.0 + r2)) /
                       (5.0 * std::sqrt(std::numbers::pi) * (3.0 + 2.0 * r2)) +
                   std::erf(x);
        }
        case WorkedInstance::scarf_a3_b1_m1: {
            const double bracket = -900.0 * x + 675.0 * std::cos(x) + 176.0 * std::cos(3.0 * x) +
                                   44.0 * std::cos(5.0 * x) + std::cos(7.0 * x) + 360.0 * x * std::sin(x) -
                                   575.0 * std::sin(2.0 * x) - 55.0 * std::sin(4.0 * x) + 5.0 * std::sin(6.0 * x);
            return 0.5 + bracket / (180.0 * std::numbers::pi * (-5.0 + 2.0 * std::sin(x)));
        }
        case WorkedInstance::gpt_a1_b3_m1: {
            const double sech_half = 1.0 / std::cosh(x / 2.0);
            const double t = std::tanh(x / 2.0);
            const double t5 = t * t * t * t * t;
            return (3.0 + 11.0 * std::cosh(x) + std::cosh(2.0 * x)) * sech_half * sech_half * t5 /
                   (-2.0 + 4.0 * std::cosh(x));
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Default grids

inline constexpr std::size_t default_grid_n = 4000;

/// Upper truncation of the half-line domains.
inline double default_cutoff(const ModelSpec& s) {
    switch (s.family) {
        case Family::radial_oscillator: return 12.0 * std::sqrt(2.0 / std::min(s.omega, 2.0));
        case Family::gpt: return 25.0 / std::min(s.A, 1.0);
        case Family::scarf1: return std::numbers::pi / 2;
    }
    return 0.0;
}

inline Grid default_grid(const ModelSpec& s, std::size_t n = default_grid_n, double clip = default_clip,
                         std::optional<double> cutoff = std::nullopt) {
    return make_grid(s.domain(), clip, cutoff.value_or(default_cutoff(s)), n);
}

// ---------------------------------------------------------------------------
// Sampling helpers

inline SampledFunction sample_w(const ModelSpec& s, const Grid& g) {
    return SampledFunction::sample(g, [&](double x) { return superpotential(s, x); });
}

inline SampledFunction sample_v_minus(const ModelSpec& s, const Grid& g) {
    return SampledFunction::sample(g, [&](double x) { return v_minus(s, x); });
}

inline SampledFunction sample_v_plus(const ModelSpec& s, const Grid& g) {
    return SampledFunction::sample(g, [&](double x) { return v_plus(s, x); });
}

inline SampledFunction sample_psi_minus(const ModelSpec& s, int n, const Grid& g) {
    return SampledFunction::sample(g, [&](double x) { return eigenfunction_minus(s, n, x); });
}

inline SampledFunction sample_psi_plus(const ModelSpec& s, int n, const Grid& g) {
    return SampledFunction::sample(g, [&](double x) { return eigenfunction_plus(s, n, x); });
}

/// Exact derivative of psi(-)_n on the grid.
inline SampledFunction sample_psi_minus_derivative(const ModelSpec& s, int n, const Grid& g) {
    return SampledFunction::sample(g, [&](double x) {
        return ad::value_and_derivative([&](auto t) { return eigenfunction_minus(s, n, t); }, x).derivative;
    });
}

}  // namespace models
}  // namespace isospec
