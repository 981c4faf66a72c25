#pragma once

// Finite-difference eigensolver for -psi'' + V psi = E psi with Dirichlet
// walls at both grid ends. Eigenvalues come from Sturm-sequence bisection on
// the symmetric tridiagonal matrix; two grids give a Richardson estimate.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "isospec/error.hpp"
#include "isospec/numerics.hpp"

namespace isospec {

/// Tridiagonal operator on the interior nodes 1..n-2 of the grid.
struct DiscretizedHamiltonian {
    std::vector<double> diag;
    std::vector<double> offdiag;
    Grid grid;
};

inline DiscretizedHamiltonian build_hamiltonian(const SampledFunction& v) {
    const Grid& g = v.grid();
    const std::size_t n = g.size();
    detail::require(n >= 3, "Hamiltonian needs at least one interior node");
    const double ih2 = 1.0 / (g.h() * g.h());
    std::vector<double> d(n - 2);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = 2.0 * ih2 + v[i + 1];
    return {std::move(d), std::vector<double>(n > 3 ? n - 3 : 0, -ih2), g};
}

/// Number of eigenvalues strictly below x (LDL^T pivot sign count).
inline std::size_t count_below(const DiscretizedHamiltonian& h, double x) {
    std::size_t count = 0;
    double d = 1.0;
    const double tiny = std::numeric_limits<double>::min();
    for (std::size_t i = 0; i < h.diag.size(); ++i) {
        const double b2 = i == 0 ? 0.0 : h.offdiag[i - 1] * h.offdiag[i - 1];
        d = (h.diag[i] - x) - (i == 0 ? 0.0 : b2 / d);
        if (d == 0.0) d = -tiny;
        if (d < 0.0) ++count;
    }
    return count;
}

/// Gershgorin interval containing every eigenvalue.
inline std::pair<double, double> gershgorin(const DiscretizedHamiltonian& h) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t n = h.diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(h.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(h.offdiag[i]);
        lo = std::min(lo, h.diag[i] - r);
        hi = std::max(hi, h.diag[i] + r);
    }
    return {lo, hi};
}

/// k-th smallest eigenvalue (k = 0 is the lowest) by bisection.
inline double kth_eigenvalue(const DiscretizedHamiltonian& h, std::size_t k, double lo, double hi) {
    detail::require(k < h.diag.size(), "eigenvalue index out of range");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (count_below(h, mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct SpectrumReport {
    std::vector<double> energies;              // finest-grid eigenvalues, ascending
    std::size_t grid_n = 0;                    // nodes of the finest grid
    std::vector<double> richardson_estimate;   // empty without refinement
    std::vector<double> error_estimate;        // per level, empty without refinement
    std::vector<bool> converged;                // per level, empty without refinement

    std::size_t size() const { return energies.size(); }
    /// Best available estimate of level i.
    double best(std::size_t i) const { return richardson_estimate.empty() ? energies[i] : richardson_estimate[i]; }
    std::vector<double> best() const { return richardson_estimate.empty() ? energies : richardson_estimate; }
};

/// The k lowest eigenvalues on a single grid (no error estimate).
inline SpectrumReport lowest_eigenvalues(const DiscretizedHamiltonian& h, std::size_t k) {
    detail::require(k >= 1 && k < h.grid.size() / 4, "requested level count must satisfy 1 <= k < n/4");
    auto [lo, hi] = gershgorin(h);
    SpectrumReport r;
    r.grid_n = h.grid.size();
    r.energies.reserve(k);
    double floor = lo;
    for (std::size_t i = 0; i < k; ++i) {
        const double e = kth_eigenvalue(h, i, floor, hi);
        r.energies.push_back(e);
        floor = std::max(floor, e - 1e-9 * (1.0 + std::abs(e)));
    }
    return r;
}

/// Eigenvalues strictly below `ceiling` (at most `max_levels`).
inline std::vector<double> eigenvalues_below(const DiscretizedHamiltonian& h, double ceiling,
                                             std::size_t max_levels = 64) {
    const std::size_t c = std::min(count_below(h, ceiling), max_levels);
    auto [lo, hi] = gershgorin(h);
    std::vector<double> out;
    for (std::size_t i = 0; i < c; ++i) out.push_back(kth_eigenvalue(h, i, lo, std::min(hi, ceiling)));
    return out;
}

/// Richardson extrapolation for an O(h^2) quantity on two spacings.
inline double richardson(double e1, double h1, double e2, double h2) {
    return (e2 * h1 * h1 - e1 * h2 * h2) / (h1 * h1 - h2 * h2);
}

/// Drop nodes at either end where |V| >= threshold; Dirichlet walls sit at
/// the first and last retained node.
inline SampledFunction wall_window(const SampledFunction& v, double threshold) {
    std::size_t first = 0;
    std::size_t last = v.size() - 1;
    while (first < last && !(std::abs(v[first]) < threshold)) ++first;
    while (last > first && !(std::abs(v[last]) < threshold)) --last;
    if (last < first + 2) throw NumericalError("potential exceeds the wall threshold everywhere");
    return v.window(first, last);
}

/// Samples a potential on a grid (may return a window of it).
using PotentialSampler = std::function<SampledFunction(const Grid&)>;

struct OracleOptions {
    std::size_t n_coarse = 4000;
    std::size_t n_fine = 8000;
    double tol = 1e-6;
    std::optional<double> wall;  // |V| threshold for the Dirichlet walls
};

/// Spectrum with Richardson extrapolation over the two grids. The error
/// estimate compares with a third, coarser pair so it is conservative.
inline SpectrumReport converged_spectrum(const PotentialSampler& sampler, const Grid& domain, std::size_t k,
                                         const OracleOptions& opt = {}) {
    auto grid_of = [&](std::size_t n) { return Grid(domain.kind(), domain.a(), domain.b(), n); };
    auto solve = [&](std::size_t n) {
        SampledFunction v = sampler(grid_of(n));
        if (opt.wall) v = wall_window(v, *opt.wall);
        auto h = build_hamiltonian(v);
        return std::pair{lowest_eigenvalues(h, k).energies, v.grid().h()};
    };
    auto [e0, h0] = solve(opt.n_coarse / 2);
    auto [e1, h1] = solve(opt.n_coarse);
    auto [e2, h2] = solve(opt.n_fine);
    SpectrumReport r;
    r.energies = e2;
    r.grid_n = opt.n_fine;
    for (std::size_t i = 0; i < k; ++i) {
        const double best = richardson(e1[i], h1, e2[i], h2);
        const double prev = richardson(e0[i], h0, e1[i], h1);
        r.richardson_estimate.push_back(best);
        r.error_estimate.push_back(std::abs(best - prev));
        r.converged.push_back(std::abs(best - prev) < opt.tol);
    }
    return r;
}

/// Converged levels strictly below `ceiling` (used above a continuum threshold).
inline SpectrumReport converged_spectrum_below(const PotentialSampler& sampler, const Grid& domain, double ceiling,
                                               const OracleOptions& opt = {}) {
    SampledFunction v = sampler(Grid(domain.kind(), domain.a(), domain.b(), opt.n_fine));
    if (opt.wall) v = wall_window(v, *opt.wall);
    const std::size_t c = count_below(build_hamiltonian(v), ceiling);
    if (c == 0) {
        SpectrumReport r;
        r.grid_n = opt.n_fine;
        return r;
    }
    auto r = converged_spectrum(sampler, domain, c, opt);
    // A level converging onto the threshold from below is not a bound state.
    while (!r.energies.empty() && !(r.best(r.size() - 1) < ceiling)) {
        r.energies.pop_back();
        r.richardson_estimate.pop_back();
        r.error_estimate.pop_back();
        r.converged.pop_back();
    }
    return r;
}

/// max over interior nodes of |-psi'' + V psi - E psi| / max|psi|.
inline double eigen_residual(const SampledFunction& psi, double E, const SampledFunction& v) {
    detail::require(psi.grid().same_nodes(v.grid()), "residual needs psi and V on a shared grid");
    const double ih2 = 1.0 / (psi.grid().h() * psi.grid().h());
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < psi.size(); ++i) {
        const double d2 = (psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) * ih2;
        worst = std::max(worst, std::abs(-d2 + (v[i] - E) * psi[i]));
    }
    const double scale = psi.max_abs();
    if (!(scale > 0.0)) throw NumericalError("residual of a zero function");
    return worst / scale;
}

enum class IsospectralMode { equal, shifted_by_one };

struct IsospectralReport {
    IsospectralMode mode = IsospectralMode::equal;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> diff;
    double max_diff = 0.0;
    bool passed = false;
};

/// Compare the k lowest levels of two potentials. In shifted_by_one mode,
/// level i of `b` is compared with level i+1 of `a`.
inline IsospectralReport compare_spectra(const SpectrumReport& sa, const SpectrumReport& sb, std::size_t k,
                                         double tol, IsospectralMode mode = IsospectralMode::equal) {
    const std::size_t shift = mode == IsospectralMode::shifted_by_one ? 1 : 0;
    detail::require(sa.size() >= k + shift && sb.size() >= k, "not enough levels to compare");
    IsospectralReport r;
    r.mode = mode;
    for (std::size_t i = 0; i < k; ++i) {
        if ((!sa.converged.empty() && !sa.converged[i + shift]) || (!sb.converged.empty() && !sb.converged[i])) {
            throw NumericalError("level " + std::to_string(i) + " did not converge at the requested tolerance");
        }
        r.a.push_back(sa.best(i + shift));
        r.b.push_back(sb.best(i));
        r.diff.push_back(std::abs(r.a.back() - r.b.back()));
        r.max_diff = std::max(r.max_diff, r.diff.back());
    }
    r.passed = r.max_diff < tol;
    return r;
}

/// Oracle spectra of two sampled potentials on their own grids, compared.
inline IsospectralReport verify_isospectral(const SampledFunction& a, const SampledFunction& b, std::size_t k,
                                            double tol, IsospectralMode mode = IsospectralMode::equal) {
    const std::size_t shift = mode == IsospectralMode::shifted_by_one ? 1 : 0;
    auto sa = lowest_eigenvalues(build_hamiltonian(a), k + shift);
    auto sb = lowest_eigenvalues(build_hamiltonian(b), k);
    return compare_spectra(sa, sb, k, tol, mode);
}

}  // namespace isospec
