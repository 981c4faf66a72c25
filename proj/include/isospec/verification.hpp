#pragma once

// Checks that tie the analytic model formulas to the numerical oracle. Each
// returns a CheckResult carrying the measured worst-case value and the
// tolerance it was held to.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "isospec/csv.hpp"
#include "isospec/models.hpp"
#include "isospec/numerics.hpp"
#include "isospec/scattering.hpp"
#include "isospec/spectral.hpp"
#include "isospec/susy.hpp"

namespace isospec::verify {

struct CheckResult {
    std::string name;
    std::string subject;
    double value = 0.0;  // worst measured deviation
    double tol = 0.0;
    bool pass = false;
    std::string detail;
};

inline CheckResult make_result(std::string name, std::string subject, double value, double tol,
                               std::string detail = {}) {
    return {std::move(name), std::move(subject), value, tol, value <= tol && std::isfinite(value), std::move(detail)};
}

/// The three worked instances.
inline std::vector<ModelSpec> worked_instances() {
    return {ModelSpec::radial_oscillator(2.0, 1, 1), ModelSpec::scarf1(3.0, 1.0, 1), ModelSpec::gpt(1.0, 3.0, 1)};
}

inline std::vector<double> sweep_lambdas() { return {0.05, 0.1, 1.0, 10.0, -1.1, -3.0}; }

// ---------------------------------------------------------------------------
// Oracle spectra

enum class PotentialKind { minus, plus, deformed };

struct PotentialChoice {
    PotentialKind kind = PotentialKind::minus;
    double lambda = std::numeric_limits<double>::infinity();

    static PotentialChoice minus() { return {}; }
    static PotentialChoice plus() { return {PotentialKind::plus}; }
    static PotentialChoice deformed(double l) { return {PotentialKind::deformed, l}; }

    std::string label() const {
        switch (kind) {
            case PotentialKind::minus: return "V-";
            case PotentialKind::plus: return "V+";
            case PotentialKind::deformed: {
                if (lambda == 0.0) return "V[P]";
                if (lambda == -1.0) return "V[AM]";
                std::ostringstream os;
                os << "V^(lambda=" << lambda << ")";
                return os.str();
            }
        }
        return "?";
    }
    bool singular_limit() const { return kind == PotentialKind::deformed && (lambda == 0.0 || lambda == -1.0); }
};

/// Sampler for the chosen potential, optionally shifted by a constant.
inline PotentialSampler sampler_for(const ModelSpec& s, PotentialChoice c, double shift = 0.0) {
    return [s, c, shift](const Grid& g) {
        SampledFunction v = [&] {
            switch (c.kind) {
                case PotentialKind::minus: return models::sample_v_minus(s, g);
                case PotentialKind::plus: return models::sample_v_plus(s, g);
                case PotentialKind::deformed: break;
            }
            DeformedFamily fam(s, g, DeformationParam(c.lambda));
            // The oracle needs the whole window where the weight is positive.
            return isospectral_potential(fam, models::sample_v_minus(s, g), 0.0);
        }();
        if (shift == 0.0) return v;
        return map_values(v, [shift](double x) { return x + shift; });
    };
}

struct OracleSettings {
    std::size_t n_coarse = 4000;
    std::size_t n_fine = 8000;
    double wall = 1e6;  // |V| wall for the Pursey/Abraham-Moses limits
    double tol = 1e-6;
};

/// Oracle spectrum: `levels` lowest levels, or every level below the
/// continuum threshold for GPT.
inline SpectrumReport oracle_spectrum(const ModelSpec& s, PotentialChoice c, std::size_t levels,
                                      const OracleSettings& o = {}, double shift = 0.0,
                                      std::optional<double> wall_override = std::nullopt) {
    OracleOptions opt;
    opt.n_coarse = o.n_coarse;
    opt.n_fine = o.n_fine;
    opt.tol = o.tol;
    if (c.singular_limit()) opt.wall = wall_override.value_or(o.wall);
    const Grid dom = models::default_grid(s, o.n_fine);
    const double ceiling = models::continuum_threshold(s);
    if (std::isfinite(ceiling)) return converged_spectrum_below(sampler_for(s, c, shift), dom, ceiling, opt);
    return converged_spectrum(sampler_for(s, c, shift), dom, levels, opt);
}

/// Analytic V(-) levels below the cap (at most `levels`).
inline std::vector<double> analytic_levels(const ModelSpec& s, std::size_t levels) {
    std::vector<double> e;
    for (std::size_t n = 0; n < levels && models::is_bound_level(s, static_cast<int>(n)); ++n) {
        e.push_back(models::energy(s, static_cast<int>(n)));
    }
    return e;
}

/// Largest |a_i - b_i|; infinite when the level counts differ.
inline double level_mismatch(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline std::string join(const std::vector<double>& v) {
    std::ostringstream os;
    os.precision(10);
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "}";
    return os.str();
}

/// Oracle V(-) levels against the closed-form energies.
inline CheckResult check_spectrum_formula(const ModelSpec& s, std::size_t levels, double tol,
                                          const OracleSettings& o = {}) {
    auto rep = oracle_spectrum(s, PotentialChoice::minus(), levels, o);
    // Above a continuum threshold every bound level is compared.
    const bool capped = std::isfinite(models::continuum_threshold(s));
    auto expect = analytic_levels(s, capped ? std::size_t{1000} : levels);
    auto all = rep.best();
    const double d = level_mismatch(all, expect);
    return make_result("spectrum", s.describe(), d, tol, "oracle " + join(all) + " expected " + join(expect));
}

/// V^(lambda) against V(-), level by level.
inline CheckResult check_isospectral(const ModelSpec& s, double lambda, std::size_t levels, double tol,
                                     const OracleSettings& o = {}, double shift = 0.0) {
    auto base = oracle_spectrum(s, PotentialChoice::minus(), levels, o).best();
    auto def = oracle_spectrum(s, PotentialChoice::deformed(lambda), levels, o, shift).best();
    return make_result("isospectral", s.describe() + " lambda=" + csv::format_number(lambda), level_mismatch(base, def), tol,
                       "V- " + join(base) + " V^ " + join(def));
}

/// Pursey or Abraham-Moses spectrum against V(-) without its ground level and
/// against V(+).
inline std::pair<CheckResult, CheckResult> check_deletion(const ModelSpec& s, double lambda, std::size_t levels,
                                                          double tol, const OracleSettings& o = {}) {
    auto base = oracle_spectrum(s, PotentialChoice::minus(), levels + 1, o).best();
    auto plus = oracle_spectrum(s, PotentialChoice::plus(), levels, o).best();
    auto lim = oracle_spectrum(s, PotentialChoice::deformed(lambda), levels, o).best();
    std::vector<double> removed(base.begin() + (base.empty() ? 0 : 1), base.end());
    if (removed.size() > levels) removed.resize(levels);
    const std::string who = s.describe() + (lambda == 0.0 ? " Pursey" : " Abraham-Moses");
    return {make_result("ground-state deletion", who, level_mismatch(removed, lim), tol,
                        "V- minus E0 " + join(removed) + " got " + join(lim)),
            make_result("partner isospectrality", who, level_mismatch(plus, lim), tol,
                        "V+ " + join(plus) + " got " + join(lim))};
}

/// Spectrum insensitivity of the Pursey/AM oracle to the wall threshold.
inline CheckResult check_wall_insensitivity(const ModelSpec& s, double lambda, std::size_t levels, double tol,
                                            const OracleSettings& o = {}) {
    auto a = oracle_spectrum(s, PotentialChoice::deformed(lambda), levels, o, 0.0, o.wall / 10.0).best();
    auto b = oracle_spectrum(s, PotentialChoice::deformed(lambda), levels, o, 0.0, o.wall * 10.0).best();
    return make_result("wall insensitivity", s.describe() + " lambda=" + csv::format_number(lambda), level_mismatch(a, b), tol);
}

// ---------------------------------------------------------------------------
// Analytic consistency

/// Max over interior nodes of |W^2 - W' - printed V(-)| / (1 + |V(-)|), and
/// likewise for V(+).
inline CheckResult check_factorization(const ModelSpec& s, double tol, std::size_t n = 4000) {
    const Grid g = models::default_grid(s, n);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
        const double x = g[i];
        const double vm = models::v_minus(s, x);
        const double vp = models::v_plus(s, x);
        worst = std::max(worst, std::abs(vm - models::printed_v_minus(s, x)) / (1.0 + std::abs(vm)));
        worst = std::max(worst, std::abs(vp - models::printed_v_plus(s, x)) / (1.0 + std::abs(vp)));
        if (s.m == 1) {
            worst = std::max(worst, std::abs(vm - models::x1_v_minus(s, x)) / (1.0 + std::abs(vm)));
            worst = std::max(worst, std::abs(vp - models::x1_v_plus(s, x)) / (1.0 + std::abs(vp)));
        }
    }
    return make_result("W^2 -+ W' = printed V-+", s.describe(), worst, tol);
}

/// Max over interior nodes of |W + psi0'/psi0| / (1 + |W|), psi0' exact.
inline CheckResult check_w_from_ground(const ModelSpec& s, double tol, std::size_t n = 4000) {
    const Grid g = models::default_grid(s, n);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
        const double x = g[i];
        auto p = ad::value_and_derivative([&](auto t) { return models::eigenfunction_minus(s, 0, t); }, x);
        if (p.value == 0.0) continue;  // underflow far in the tail
        const double w = models::superpotential(s, x);
        worst = std::max(worst, std::abs(w + p.derivative / p.value) / (1.0 + std::abs(w)));
    }
    return make_result("W = -psi0'/psi0", s.describe(), worst, tol);
}

/// Grid with spacing close to h on the model's default domain.
inline Grid grid_with_spacing(const ModelSpec& s, double h) {
    const Grid d = models::default_grid(s, 3);
    const auto n = static_cast<std::size_t>(std::ceil((d.b() - d.a()) / h)) + 1;
    return models::default_grid(s, std::max<std::size_t>(n, 3));
}

/// Finite-difference Schrodinger residuals of psi(-)_n and psi(+)_n at the
/// printed energies, n <= nmax (bound levels only).
inline CheckResult check_residuals(const ModelSpec& s, int nmax, double tol, double h = 1e-4) {
    const Grid g = grid_with_spacing(s, h);
    const auto vm = models::sample_v_minus(s, g);
    const auto vp = models::sample_v_plus(s, g);
    double worst = 0.0;
    std::ostringstream os;
    for (int n = 0; n <= nmax; ++n) {
        if (models::is_bound_level(s, n)) {
            const double r = eigen_residual(models::sample_psi_minus(s, n, g), models::energy(s, n), vm);
            os << "psi-_" << n << ":" << r << " ";
            worst = std::max(worst, r);
        }
        if (models::is_bound_level(s, n + 1)) {
            const double r = eigen_residual(models::sample_psi_plus(s, n, g), models::energy(s, n + 1), vp);
            os << "psi+_" << n << ":" << r << " ";
            worst = std::max(worst, r);
        }
    }
    return make_result("eigenfunction residual", s.describe(), worst, tol, os.str());
}

/// |int psi_n^2 - 1| for the bound levels n <= nmax of V(-) and V(+).
inline CheckResult check_normalization(const ModelSpec& s, int nmax, double tol, std::size_t n = 8001) {
    const Grid g = models::default_grid(s, n);
    double worst = 0.0;
    for (int k = 0; k <= nmax; ++k) {
        if (models::is_bound_level(s, k)) {
            auto p = models::sample_psi_minus(s, k, g);
            worst = std::max(worst, std::abs(inner_product(p, p, QuadratureRule::simpson) - 1.0));
        }
        if (models::is_bound_level(s, k + 1)) {
            auto p = models::sample_psi_plus(s, k, g);
            worst = std::max(worst, std::abs(inner_product(p, p, QuadratureRule::simpson) - 1.0));
        }
    }
    return make_result("eigenfunction norm", s.describe(), worst, tol);
}

/// Closed-form I_1 against the running integral of psi0^2 at every node and
/// against 1 at the upper end. `rule` empty selects panel Gauss-Legendre.
inline CheckResult check_closed_form_I1(const ModelSpec& s, std::size_t n, double tol,
                                        std::optional<QuadratureRule> rule = std::nullopt) {
    const Grid g = models::default_grid(s, n);
    SampledFunction I = [&] {
        if (!rule) {
            return running_integrals(g, [&](double x) {
                       const double p = models::eigenfunction_minus(s, 0, x);
                       return p * p;
                   }).first;
        }
        auto sq = map_values(models::sample_psi_minus(s, 0, g), [](double v) { return v * v; });
        return cumulative_integral(sq, *rule);
    }();
    // The quadrature starts at the clipped end; add the closed-form mass below it.
    const double below = models::closed_form_I1(s, g[0]) - models::closed_form_I1(s, s.family == Family::scarf1
                                                                                         ? -std::numbers::pi / 2
                                                                                         : 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, std::abs(models::closed_form_I1(s, g[i]) - (below + I[i])));
    }
    const double end = std::abs(models::closed_form_I1(s, g.b()) - 1.0);
    worst = std::max(worst, end);
    std::string how = !rule ? "gauss-legendre" : (*rule == QuadratureRule::trapezoid ? "trapezoid" : "simpson");
    return make_result("closed-form I1", s.describe() + " " + how, worst, tol,
                       "|I1(end) - 1| = " + std::to_string(end));
}

/// Deformed ground-state norm and mutual orthogonality of psi^_0..psi^_3.
inline std::pair<CheckResult, CheckResult> check_deformed_states(const ModelSpec& s, double lambda, double tol_norm,
                                                                 double tol_orth, std::size_t n = 8001) {
    const Grid g = models::default_grid(s, n);
    DeformedFamily fam(s, g, DeformationParam(lambda));
    auto g0 = deformed_ground_state(fam);
    const double norm_err = std::abs(inner_product(g0, g0, QuadratureRule::simpson) - 1.0);
    std::vector<SampledFunction> states{g0};
    std::ostringstream raw;
    for (int k = 1; k <= 3 && models::is_bound_level(s, k); ++k) {
        auto st = deformed_model_state(fam, k);
        raw << "raw norm " << k << ": " << st.raw_norm << " ";
        states.push_back(st.psi);
    }
    double orth = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            orth = std::max(orth, std::abs(inner_product(states[i], states[j], QuadratureRule::simpson)));
        }
    }
    const std::string who = s.describe() + " lambda=" + csv::format_number(lambda);
    return {make_result("deformed ground-state norm", who, norm_err, tol_norm),
            make_result("deformed orthogonality", who, orth, tol_orth, raw.str())};
}

// ---------------------------------------------------------------------------
// Scattering

struct ScatteringChecks {
    CheckResult unitarity;
    CheckResult pursey_equal;
    CheckResult am_ratio;
    CheckResult partner_ratio;
    CheckResult phase_continuity;
};

inline ScatteringChecks check_scattering(const ModelSpec& s, double kmin, double kmax, double step, double tol) {
    double unit = 0.0;
    double pursey = 0.0;
    double am = 0.0;
    double partner = 0.0;
    std::vector<double> phase;
    for (double k : k_scan(kmin, kmax, step)) {
        auto a = gpt_amplitudes(s, k);
        for (Complex z : {a.s_minus, a.s_plus, a.s_pursey, a.s_am}) unit = std::max(unit, std::abs(std::abs(z) - 1.0));
        pursey = std::max(pursey, a.s_pursey == a.s_minus ? 0.0 : std::abs(a.s_pursey - a.s_minus) + 1.0);
        const Complex ik(0.0, k);
        const Complex f = (s.A + ik) / (s.A - ik);
        am = std::max(am, std::abs(a.s_am / a.s_minus - f * f));
        partner = std::max(partner, std::abs(a.s_plus / a.s_minus - f));
        phase.push_back(std::arg(a.s_minus));
    }
    auto un = unwrap_phase(phase);
    double jump = 0.0;
    for (std::size_t i = 1; i < un.size(); ++i) jump = std::max(jump, std::abs(un[i] - un[i - 1]));
    const std::string who = s.describe();
    return {make_result("|s| = 1", who, unit, tol), make_result("s[P] == s-", who, pursey, 0.0),
            make_result("s[AM]/s- = f^2", who, am, tol), make_result("s+/s- = f", who, partner, tol),
            make_result("unwrapped phase step", who, jump, 0.5)};
}

}  // namespace isospec::verify
