#pragma once

// SUSY factorisation and the one-parameter isospectral deformation
//   W^ = W + phi,  phi = psi0^2 / (I + lambda),
//   V^ = V(-) + 4 W phi + 2 phi^2,
// with the Pursey (lambda = 0) and Abraham-Moses (lambda = -1) limits.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isospec/dual.hpp"
#include "isospec/error.hpp"
#include "isospec/models.hpp"
#include "isospec/numerics.hpp"

namespace isospec {

struct SuperpotentialEval {
    SampledFunction w;
    SampledFunction wprime;
    std::optional<double> w_minus_inf;
    std::optional<double> w_plus_inf;
};

/// W and its exact derivative for a model on a grid.
inline SuperpotentialEval evaluate_superpotential(const ModelSpec& s, const Grid& g) {
    std::vector<double> w(g.size());
    std::vector<double> wp(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto r = ad::value_and_derivative([&](auto t) { return models::superpotential(s, t); }, g[i]);
        w[i] = r.value;
        wp[i] = r.derivative;
    }
    auto lim = models::asymptotic_w(s);
    return {SampledFunction(g, std::move(w)), SampledFunction(g, std::move(wp)), lim.lower, lim.upper};
}

/// (V(-), V(+)) = (W^2 - W', W^2 + W').
inline std::pair<SampledFunction, SampledFunction> partner_potentials(const SuperpotentialEval& sp) {
    auto vm = zip_with(sp.w, sp.wprime, [](double w, double d) { return w * w - d; });
    auto vp = zip_with(sp.w, sp.wprime, [](double w, double d) { return w * w + d; });
    return {std::move(vm), std::move(vp)};
}

/// W = -psi0'/psi0.
inline SampledFunction superpotential_from_ground(const SampledFunction& psi0, const SampledFunction& psi0prime) {
    const std::size_t n = psi0.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(psi0[i] > 0.0)) {
            throw DomainError("ground state must be positive on interior nodes (node " + std::to_string(i) + ")");
        }
    }
    return zip_with(psi0, psi0prime, [](double p, double d) { return p > 0.0 ? -d / p : 0.0; });
}

// ---------------------------------------------------------------------------
// Deformation parameter

enum class DeformationClass { generic, pursey, abraham_moses, undeformed };

inline std::string_view to_string(DeformationClass c) {
    switch (c) {
        case DeformationClass::generic: return "generic";
        case DeformationClass::pursey: return "pursey";
        case DeformationClass::abraham_moses: return "abraham-moses";
        case DeformationClass::undeformed: return "undeformed";
    }
    return "?";
}

class DeformationParam {
public:
    /// Classify lambda. +-inf is the undeformed limit; lambda in (-1, 0) is
    /// rejected because the deformed ground state is then not normalisable.
    explicit DeformationParam(double lambda) : lambda_(lambda) {
        if (std::isnan(lambda)) throw DomainError("lambda is NaN");
        if (std::isinf(lambda)) {
            cls_ = DeformationClass::undeformed;
        } else if (lambda == 0.0) {
            cls_ = DeformationClass::pursey;
        } else if (lambda == -1.0) {
            cls_ = DeformationClass::abraham_moses;
        } else if (lambda > 0.0 || lambda < -1.0) {
            cls_ = DeformationClass::generic;
        } else {
            throw DomainError("lambda = " + std::to_string(lambda) +
                              " lies in (-1, 0): the deformed ground state sqrt(lambda(1+lambda)) psi0/(I+lambda) "
                              "is normalisable only for lambda > 0 or lambda < -1");
        }
    }

    double lambda() const { return lambda_; }
    DeformationClass kind() const { return cls_; }
    bool is_generic() const { return cls_ == DeformationClass::generic; }

private:
    double lambda_;
    DeformationClass cls_ = DeformationClass::generic;
};

/// Nodes where I (Pursey) or 1 - I (Abraham-Moses) fall below this are not
/// reported.
inline constexpr double default_weight_floor = 1e-12;

// ---------------------------------------------------------------------------
// Deformed family

/// Ground-state data of V(-) on a grid together with a deformation parameter.
/// I is accumulated from the lower end and J = 1 - I from the upper end, so
/// both the Pursey (I -> 0) and Abraham-Moses (1 - I -> 0) denominators keep
/// relative accuracy.
class DeformedFamily {
public:
    /// Exact ground state and W of a model; I and J by panel-wise Gauss-Legendre.
    DeformedFamily(const ModelSpec& s, const Grid& g, DeformationParam p)
        : base_(s),
          param_(p),
          psi0_(models::sample_psi_minus(s, 0, g)),
          w_(models::sample_w(s, g)),
          i_(g, std::vector<double>(g.size())),
          j_(g, std::vector<double>(g.size())) {
        auto [fwd, bwd] = running_integrals(g, [&](double x) {
            const double v = models::eigenfunction_minus(s, 0, x);
            return v * v;
        });
        i_ = std::move(fwd);
        j_ = std::move(bwd);
        total_ = 1.0;
    }

    /// Sampled ground state and W; I by cumulative quadrature and J = I_end - I.
    static DeformedFamily from_samples(const SampledFunction& psi0, const SampledFunction& w, DeformationParam p,
                                       QuadratureRule rule = QuadratureRule::trapezoid) {
        detail::require(psi0.grid().same_nodes(w.grid()), "psi0 and W must share a grid");
        auto sq = map_values(psi0, [](double v) { return v * v; });
        auto I = cumulative_integral(sq, rule);
        const double end = I[I.size() - 1];
        auto J = map_values(I, [end](double v) { return end - v; });
        return DeformedFamily(std::nullopt, p, psi0, w, std::move(I), std::move(J), end);
    }

    const std::optional<ModelSpec>& base() const { return base_; }
    const DeformationParam& param() const { return param_; }
    const Grid& grid() const { return psi0_.grid(); }
    const SampledFunction& psi0() const { return psi0_; }
    const SampledFunction& w() const { return w_; }
    const SampledFunction& I() const { return i_; }
    /// Tail integral, int_x^{end} psi0^2.
    const SampledFunction& J() const { return j_; }
    /// Normalisation used for I + J (1 for analytic ground states).
    double total() const { return total_; }

    /// Same ground-state data with another lambda.
    DeformedFamily with_lambda(DeformationParam p) const {
        DeformedFamily f = *this;
        f.param_ = p;
        return f;
    }

    /// I[k] + lambda, written so that the vanishing side stays accurate.
    double denominator(std::size_t k) const {
        const double l = param_.lambda();
        switch (param_.kind()) {
            case DeformationClass::undeformed: return std::numeric_limits<double>::infinity();
            case DeformationClass::pursey: return i_[k];
            case DeformationClass::abraham_moses: return -j_[k];
            case DeformationClass::generic: return l > 0.0 ? i_[k] + l : (total_ + l) - j_[k];
        }
        return 0.0;
    }

    /// Nodes on which the deformation is reported. Generic and undeformed
    /// families use the whole grid; Pursey drops nodes with I <= floor and
    /// Abraham-Moses those with 1 - I <= floor.
    Grid valid_window(double floor = default_weight_floor) const {
        const std::size_t n = grid().size();
        std::size_t first = 0;
        std::size_t last = n - 1;
        if (param_.kind() == DeformationClass::pursey) {
            while (first < n && !(i_[first] > floor)) ++first;
        } else if (param_.kind() == DeformationClass::abraham_moses) {
            while (last > 0 && !(j_[last] > floor)) --last;
        }
        if (first + 2 > last) throw NumericalError("deformation window is empty; lower the weight floor");
        return grid().window(first, last);
    }

private:
    DeformedFamily(std::optional<ModelSpec> base, DeformationParam p, SampledFunction psi0, SampledFunction w,
                   SampledFunction I, SampledFunction J, double total)
        : base_(std::move(base)),
          param_(p),
          psi0_(std::move(psi0)),
          w_(std::move(w)),
          i_(std::move(I)),
          j_(std::move(J)),
          total_(total) {}

    std::optional<ModelSpec> base_;
    DeformationParam param_;
    SampledFunction psi0_;
    SampledFunction w_;
    SampledFunction i_;
    SampledFunction j_;
    double total_ = 1.0;
};

namespace detail {

inline SampledFunction phi_on(const DeformedFamily& fam, const Grid& win) {
    const std::size_t off = win.offset_in(fam.grid());
    std::vector<double> v(win.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double den = fam.denominator(off + i);
        const double p = fam.psi0()[off + i];
        v[i] = std::isinf(den) ? 0.0 : p * p / den;
    }
    return {win, std::move(v)};
}

inline SampledFunction deformed_potential_on(const DeformedFamily& fam, const SampledFunction& vminus,
                                             const SampledFunction& w, const Grid& win) {
    detail::require(vminus.grid().same_nodes(fam.grid()) && w.grid().same_nodes(fam.grid()),
                    "V(-) and W must be sampled on the family grid");
    auto phi = phi_on(fam, win);
    auto vm = vminus.restrict_to(win);
    auto ww = w.restrict_to(win);
    std::vector<double> v(win.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = vm[i] + 4.0 * ww[i] * phi[i] + 2.0 * phi[i] * phi[i];
    return {win, std::move(v)};
}

inline void require_generic(const DeformedFamily& fam, const char* what) {
    const auto k = fam.param().kind();
    if (k == DeformationClass::pursey || k == DeformationClass::abraham_moses) {
        throw DomainError(std::string(what) + ": lambda = 0 and -1 have dedicated Pursey/Abraham-Moses routines");
    }
}

}  // namespace detail

/// phi = psi0^2 / (I + lambda); identically zero in the undeformed limit.
inline SampledFunction deformation_phi(const DeformedFamily& fam) {
    detail::require_generic(fam, "deformation_phi");
    return detail::phi_on(fam, fam.grid());
}

/// W^ = W + phi on the family's valid window.
inline SampledFunction deformed_superpotential(const DeformedFamily& fam, double floor = default_weight_floor) {
    Grid win = fam.valid_window(floor);
    auto phi = detail::phi_on(fam, win);
    return zip_with(fam.w().restrict_to(win), phi, [](double a, double b) { return a + b; });
}

/// V^(lambda) = V(-) + 4 W phi + 2 phi^2 for generic or infinite lambda.
inline SampledFunction deformed_potential(const DeformedFamily& fam, const SampledFunction& vminus,
                                          const SampledFunction& w) {
    detail::require_generic(fam, "deformed_potential");
    return detail::deformed_potential_on(fam, vminus, w, fam.grid());
}

/// V[P] = V(-) + 4 W psi0^2/I + 2 psi0^4/I^2 on nodes with I > floor.
inline SampledFunction pursey_potential(const SampledFunction& vminus, const DeformedFamily& fam,
                                        double floor = default_weight_floor) {
    detail::require(fam.param().kind() == DeformationClass::pursey, "pursey_potential needs lambda = 0");
    return detail::deformed_potential_on(fam, vminus, fam.w(), fam.valid_window(floor));
}

/// V[AM] = V(-) + 4 W psi0^2/(I-1) + 2 psi0^4/(I-1)^2 on nodes with 1 - I > floor.
inline SampledFunction am_potential(const SampledFunction& vminus, const DeformedFamily& fam,
                                    double floor = default_weight_floor) {
    detail::require(fam.param().kind() == DeformationClass::abraham_moses, "am_potential needs lambda = -1");
    return detail::deformed_potential_on(fam, vminus, fam.w(), fam.valid_window(floor));
}

/// Any class: generic/undeformed on the full grid, Pursey/AM on their windows.
inline SampledFunction isospectral_potential(const DeformedFamily& fam, const SampledFunction& vminus,
                                             double floor = default_weight_floor) {
    switch (fam.param().kind()) {
        case DeformationClass::pursey: return pursey_potential(vminus, fam, floor);
        case DeformationClass::abraham_moses: return am_potential(vminus, fam, floor);
        default: return deformed_potential(fam, vminus, fam.w());
    }
}

/// psi^0 = sqrt(lambda (1 + lambda)) psi0 / (I + lambda).
inline SampledFunction deformed_ground_state(const DeformedFamily& fam) {
    const auto k = fam.param().kind();
    if (k == DeformationClass::undeformed) return fam.psi0();
    const double l = fam.param().lambda();
    if (k != DeformationClass::generic || !(l * (1.0 + l) > 0.0)) {
        throw DomainError("deformed ground state needs lambda (1 + lambda) > 0");
    }
    const double pre = std::sqrt(l * (1.0 + l));
    std::vector<double> v(fam.grid().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = pre * fam.psi0()[i] / fam.denominator(i);
    return {fam.grid(), std::move(v)};
}

struct DeformedState {
    SampledFunction psi;  // unit norm by quadrature
    double raw_norm;      // norm before re-normalisation
};

/// psi^_{n+1} = psi_{n+1} + (1/E) phi (psi'_{n+1} + W psi_{n+1}), re-normalised.
/// Works for generic lambda and for the Pursey/Abraham-Moses windows.
inline DeformedState deformed_excited_state(const DeformedFamily& fam, const SampledFunction& psi,
                                            const SampledFunction& psiprime, double E, const SampledFunction& w,
                                            double floor = default_weight_floor) {
    if (!(E > 0.0)) throw DomainError("excited-state transform needs E > 0");
    detail::require(psi.grid().same_nodes(fam.grid()) && psiprime.grid().same_nodes(fam.grid()) &&
                        w.grid().same_nodes(fam.grid()),
                    "state, derivative and W must be sampled on the family grid");
    Grid win = fam.valid_window(floor);
    auto phi = detail::phi_on(fam, win);
    auto p = psi.restrict_to(win);
    auto dp = psiprime.restrict_to(win);
    auto ww = w.restrict_to(win);
    std::vector<double> v(win.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p[i] + phi[i] * (dp[i] + ww[i] * p[i]) / E;
    auto [unit, norm] = normalized(SampledFunction(win, std::move(v)));
    return {std::move(unit), norm};
}

/// Convenience: the transformed model state psi(-)_{n+1} of a model-built family.
inline DeformedState deformed_model_state(const DeformedFamily& fam, int level, double floor = default_weight_floor) {
    detail::require(fam.base().has_value(), "family was not built from a model");
    detail::require(level >= 1, "transform applies to excited levels (level >= 1)");
    const ModelSpec& s = *fam.base();
    const Grid& g = fam.grid();
    auto psi = models::sample_psi_minus(s, level, g);
    auto dpsi = models::sample_psi_minus_derivative(s, level, g);
    return deformed_excited_state(fam, psi, dpsi, models::energy(s, level), fam.w(), floor);
}

}  // namespace isospec
