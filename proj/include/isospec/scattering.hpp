#pragma once

// GPT s-wave amplitude, its partner/Pursey/Abraham-Moses relatives, and the
// one-dimensional reflection/transmission partner relations.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "isospec/error.hpp"
#include "isospec/models.hpp"

namespace isospec {

using Complex = std::complex<double>;

namespace detail {

// Lanczos coefficients for g = 7, n = 9.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

inline Complex wrap_imag(Complex z) {
    double im = std::remainder(z.imag(), 2.0 * std::numbers::pi);
    if (im <= -std::numbers::pi) im += 2.0 * std::numbers::pi;
    return {z.real(), im};
}

}  // namespace detail

/// Principal-branch log Gamma(z) (imaginary part reduced to (-pi, pi]).
/// Lanczos for Re z >= 1/2, reflection otherwise.
inline Complex log_gamma_complex(Complex z) {
    using std::numbers::pi;
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw DomainError("log Gamma has a pole at z = " + std::to_string(z.real()));
    }
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        return detail::wrap_imag(std::log(pi) - std::log(std::sin(pi * z)) - log_gamma_complex(1.0 - z));
    }
    z -= 1.0;
    Complex a = detail::lanczos_coef[0];
    for (std::size_t i = 1; i < detail::lanczos_coef.size(); ++i) a += detail::lanczos_coef[i] / (z + double(i));
    const Complex t = z + detail::lanczos_g + 0.5;
    return detail::wrap_imag(0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(a));
}

/// s(-)_m(k') of the rationally extended GPT potential.
inline Complex s_minus_gpt(const ModelSpec& s, double kprime) {
    detail::require(s.family == Family::gpt, "s-wave amplitude is defined for the GPT family");
    detail::require(s.m >= 1, "s-wave amplitude needs m >= 1");
    detail::require(std::isfinite(kprime) && kprime != 0.0, "k' must be real and non-zero");
    const Complex ik(0.0, kprime);
    const double A = s.A;
    const double B = s.B;
    const Complex lg = log_gamma_complex(2.0 * ik) + log_gamma_complex(-A - ik) + log_gamma_complex(B - ik + 0.5) -
                       log_gamma_complex(-2.0 * ik) - log_gamma_complex(-A + ik) - log_gamma_complex(B + ik + 0.5) -
                       4.0 * ik * std::numbers::ln2;
    const double one_m = 1.0 - s.m;
    const Complex num = (B * B - (ik - 0.5) * (ik - 0.5)) + (B - ik + 0.5) * one_m;
    const Complex den = (B * B - (ik + 0.5) * (ik + 0.5)) + (B + ik + 0.5) * one_m;
    return std::exp(lg) * (num / den);
}

/// Moebius phase (W+ + ik')/(W+ - ik').
inline Complex partner_phase(double w_plus, double kprime) {
    const Complex ik(0.0, kprime);
    return (w_plus + ik) / (w_plus - ik);
}

struct AmplitudeSet {
    Complex s_minus;
    Complex s_plus;
    Complex s_pursey;
    Complex s_am;
    double kprime = 0.0;
};

/// s(+) = f s(-), s[P] = s(-), s[AM] = f^2 s(-) with f = (A + ik')/(A - ik').
inline AmplitudeSet related_amplitudes(Complex s_minus, double A, double kprime) {
    detail::require(A != 0.0 || kprime != 0.0, "A and k' cannot both vanish");
    const Complex f = partner_phase(A, kprime);
    return {s_minus, f * s_minus, s_minus, f * f * s_minus, kprime};
}

inline AmplitudeSet gpt_amplitudes(const ModelSpec& s, double kprime) {
    return related_amplitudes(s_minus_gpt(s, kprime), s.A, kprime);
}

/// Asymptotic wavenumbers k = sqrt(E - W-^2), k' = sqrt(E - W+^2).
inline std::pair<double, double> wavenumbers(double w_minus, double w_plus, double E) {
    if (!(E > w_minus * w_minus && E > w_plus * w_plus)) {
        throw DomainError("E = " + std::to_string(E) + " is below a scattering threshold (evanescent regime)");
    }
    return {std::sqrt(E - w_minus * w_minus), std::sqrt(E - w_plus * w_plus)};
}

struct ReflectionTransmission {
    Complex r;
    Complex t;
};

/// (r(-), t(-)) from (r(+), t(+)):
///   r(-) = ((W- + ik)/(W- - ik)) r(+),  t(-) = ((W+ - ik')/(W- - ik)) t(+).
inline ReflectionTransmission oneD_partner_rt(Complex r_plus, Complex t_plus, double w_minus, double w_plus, double E) {
    auto [k, kp] = wavenumbers(w_minus, w_plus, E);
    const Complex ik(0.0, k);
    const Complex ikp(0.0, kp);
    return {((w_minus + ik) / (w_minus - ik)) * r_plus, ((w_plus - ikp) / (w_minus - ik)) * t_plus};
}

/// Pursey amplitudes from those of V(-):
///   r[P] = ((W- - ik)/(W- + ik))^2 r(-),  t[P] = -((W- - ik)/(W- + ik)) t(-).
inline ReflectionTransmission pursey_rt(Complex r_minus, Complex t_minus, double w_minus, double w_plus, double E) {
    auto [k, kp] = wavenumbers(w_minus, w_plus, E);
    const Complex ik(0.0, k);
    const Complex f = (w_minus - ik) / (w_minus + ik);
    return {f * f * r_minus, -f * t_minus};
}

/// Abraham-Moses amplitudes from those of V(-):
///   r[AM] = r(-),  t[AM] = -((W+ + ik')/(W+ - ik')) t(-).
inline ReflectionTransmission am_rt(Complex r_minus, Complex t_minus, double w_minus, double w_plus, double E) {
    auto [k, kp] = wavenumbers(w_minus, w_plus, E);
    (void)k;
    return {r_minus, -partner_phase(w_plus, kp) * t_minus};
}

/// Remove 2 pi jumps from a sequence of principal-branch phases.
inline std::vector<double> unwrap_phase(const std::vector<double>& phase) {
    std::vector<double> out(phase.size());
    double shift = 0.0;
    for (std::size_t i = 0; i < phase.size(); ++i) {
        if (i > 0) {
            const double d = phase[i] - phase[i - 1];
            shift -= 2.0 * std::numbers::pi * std::round(d / (2.0 * std::numbers::pi));
        }
        out[i] = phase[i] + shift;
    }
    return out;
}

/// Uniform k' scan from kmin to kmax (inclusive up to rounding).
inline std::vector<double> k_scan(double kmin, double kmax, double step) {
    detail::require(step > 0.0 && kmax >= kmin, "k' scan needs step > 0 and kmax >= kmin");
    const auto n = static_cast<std::size_t>(std::floor((kmax - kmin) / step + 1e-9)) + 1;
    std::vector<double> ks(n);
    for (std::size_t i = 0; i < n; ++i) ks[i] = kmin + static_cast<double>(i) * step;
    return ks;
}

}  // namespace isospec
