#pragma once

// Uniform grids, sampled functions, cumulative quadrature and finite
// differences. Everything else in the library is expressed on these types.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isospec/error.hpp"

namespace isospec {

/// Domain classes of the supported models. Singular endpoints are clipped,
/// infinite ones truncated.
enum class DomainKind {
    half_line_radial,      // 0 < r < inf
    finite_interval,       // -pi/2 < x < pi/2
    half_line_hyperbolic,  // 0 < x < inf
};

inline std::string_view to_string(DomainKind k) {
    switch (k) {
        case DomainKind::half_line_radial: return "half-line-radial";
        case DomainKind::finite_interval: return "finite-interval";
        case DomainKind::half_line_hyperbolic: return "half-line-hyperbolic";
    }
    return "?";
}

inline constexpr double default_clip = 1e-6;

class Grid {
public:
    /// Uniform grid with n nodes on [a, b].
    Grid(DomainKind kind, double a, double b, std::size_t n) : kind_(kind), a_(a), b_(b) {
        detail::require(n >= 3, "grid needs at least 3 nodes, got " + std::to_string(n));
        detail::require(std::isfinite(a) && std::isfinite(b) && b > a,
                        "grid endpoints must be finite with b > a");
        h_ = (b - a) / static_cast<double>(n - 1);
        nodes_.resize(n);
        for (std::size_t i = 0; i < n; ++i) nodes_[i] = a + static_cast<double>(i) * h_;
        nodes_.back() = b;
    }

    DomainKind kind() const { return kind_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double h() const { return h_; }
    std::size_t size() const { return nodes_.size(); }
    double operator[](std::size_t i) const { return nodes_[i]; }
    std::span<const double> nodes() const { return nodes_; }

    /// Sub-grid made of nodes [first, last]; spacing is unchanged.
    Grid window(std::size_t first, std::size_t last) const {
        detail::require(first < last && last < size() && last - first >= 2,
                        "grid window must keep at least 3 nodes");
        Grid g = *this;
        g.nodes_.assign(nodes_.begin() + static_cast<std::ptrdiff_t>(first),
                        nodes_.begin() + static_cast<std::ptrdiff_t>(last) + 1);
        g.a_ = g.nodes_.front();
        g.b_ = g.nodes_.back();
        return g;
    }

    /// Index of the node of `other` at which this grid starts, when this grid
    /// is a window of it.
    std::size_t offset_in(const Grid& other) const {
        double k = (a_ - other.a_) / other.h_;
        return static_cast<std::size_t>(std::llround(k));
    }

    bool same_nodes(const Grid& o) const {
        return size() == o.size() && std::abs(a_ - o.a_) <= 1e-12 * (1.0 + std::abs(a_)) &&
               std::abs(h_ - o.h_) <= 1e-12 * h_;
    }

private:
    DomainKind kind_;
    double a_;
    double b_;
    double h_ = 0.0;
    std::vector<double> nodes_;
};

/// make_grid: uniform grid on [clip, cutoff] for the half-line domains, or on
/// [-pi/2 + clip, pi/2 - clip] for the finite interval (cutoff ignored).
inline Grid make_grid(DomainKind kind, double clip, double cutoff, std::size_t n) {
    detail::require(n >= 3, "grid needs at least 3 nodes");
    detail::require(clip > 0.0, "singular endpoints need a positive clip");
    if (kind == DomainKind::finite_interval) {
        const double half = std::numbers::pi / 2;
        detail::require(clip < half, "clip swallows the interval");
        return Grid(kind, -half + clip, half - clip, n);
    }
    detail::require(std::isfinite(cutoff), "cutoff must be finite");
    detail::require(cutoff > clip, "cutoff must exceed clip");
    return Grid(kind, clip, cutoff, n);
}

class SampledFunction {
public:
    SampledFunction(Grid grid, std::vector<double> values)
        : grid_(std::move(grid)), values_(std::move(values)) {
        detail::require(values_.size() == grid_.size(), "sample count does not match grid");
        for (double v : values_) {
            if (!std::isfinite(v)) throw DomainError("sampled function has a non-finite value");
        }
    }

    template <class F>
    static SampledFunction sample(const Grid& g, F&& f) {
        std::vector<double> v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) v[i] = f(g[i]);
        return {g, std::move(v)};
    }

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }

    double max_abs() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::abs(v));
        return m;
    }

    SampledFunction window(std::size_t first, std::size_t last) const {
        Grid g = grid_.window(first, last);
        return {std::move(g), std::vector<double>(values_.begin() + static_cast<std::ptrdiff_t>(first),
                                                  values_.begin() + static_cast<std::ptrdiff_t>(last) + 1)};
    }

    /// Restrict to the nodes of `sub`, which must be a window of this grid.
    SampledFunction restrict_to(const Grid& sub) const {
        std::size_t off = sub.offset_in(grid_);
        detail::require(off + sub.size() <= size(), "grid is not a window of this function's grid");
        return window(off, off + sub.size() - 1);
    }

private:
    Grid grid_;
    std::vector<double> values_;
};

enum class QuadratureRule { trapezoid, simpson };

/// Running integral I[k] = int_{x_0}^{x_k} f. Trapezoid by default; the
/// Simpson variant uses composite Simpson on even nodes and the three-point
/// half-panel rule for odd ones.
inline SampledFunction cumulative_integral(const SampledFunction& f,
                                           QuadratureRule rule = QuadratureRule::trapezoid) {
    const std::size_t n = f.size();
    const double h = f.grid().h();
    std::vector<double> out(n, 0.0);
    if (rule == QuadratureRule::trapezoid) {
        for (std::size_t k = 1; k < n; ++k) out[k] = out[k - 1] + 0.5 * h * (f[k - 1] + f[k]);
        return {f.grid(), std::move(out)};
    }
    for (std::size_t k = 2; k < n; k += 2) out[k] = out[k - 2] + h / 3.0 * (f[k - 2] + 4.0 * f[k - 1] + f[k]);
    for (std::size_t k = 1; k < n; k += 2) {
        if (k + 1 < n) {
            out[k] = out[k - 1] + h / 12.0 * (5.0 * f[k - 1] + 8.0 * f[k] - f[k + 1]);
        } else {
            out[k] = out[k - 1] + h / 12.0 * (-f[k - 2] + 8.0 * f[k - 1] + 5.0 * f[k]);
        }
    }
    return {f.grid(), std::move(out)};
}

/// Definite integral over the whole grid.
inline double integrate(const SampledFunction& f, QuadratureRule rule = QuadratureRule::trapezoid) {
    return cumulative_integral(f, rule)[f.size() - 1];
}

inline double inner_product(const SampledFunction& f, const SampledFunction& g,
                            QuadratureRule rule = QuadratureRule::trapezoid) {
    detail::require(f.grid().same_nodes(g.grid()), "inner product needs a shared grid");
    std::vector<double> p(f.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = f[i] * g[i];
    return integrate(SampledFunction(f.grid(), std::move(p)), rule);
}

namespace detail {

// 8-point Gauss-Legendre on [-1, 1].
inline constexpr std::array<double, 4> gl8_nodes = {0.1834346424956498, 0.5255324099163290,
                                                    0.7966664774136267, 0.9602898564975363};
inline constexpr std::array<double, 4> gl8_weights = {0.3626837833783620, 0.3137066458778873,
                                                      0.2223810344533745, 0.1012285362903763};

template <class F>
double gauss_legendre8(F&& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double s = 0.0;
    for (std::size_t i = 0; i < gl8_nodes.size(); ++i) {
        const double dx = half * gl8_nodes[i];
        s += gl8_weights[i] * (f(mid - dx) + f(mid + dx));
    }
    return s * half;
}

}  // namespace detail

/// Running integrals of an integrand known in closed form, panel by panel
/// with 8-point Gauss-Legendre. Returns (forward, backward) where
/// forward[k] = int_{x_0}^{x_k} f and backward[k] = int_{x_k}^{x_last} f,
/// each accumulated from its own end so both keep relative accuracy where
/// they are small.
template <class F>
std::pair<SampledFunction, SampledFunction> running_integrals(const Grid& g, F&& f) {
    const std::size_t n = g.size();
    std::vector<double> panel(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) panel[k] = detail::gauss_legendre8(f, g[k], g[k + 1]);
    std::vector<double> fwd(n, 0.0);
    std::vector<double> bwd(n, 0.0);
    for (std::size_t k = 1; k < n; ++k) fwd[k] = fwd[k - 1] + panel[k - 1];
    for (std::size_t k = n - 1; k-- > 0;) bwd[k] = bwd[k + 1] + panel[k];
    return {SampledFunction(g, std::move(fwd)), SampledFunction(g, std::move(bwd))};
}

/// First derivative: central differences inside, second-order one-sided at
/// the two ends.
inline SampledFunction derivative(const SampledFunction& f) {
    const std::size_t n = f.size();
    const double h = f.grid().h();
    std::vector<double> d(n);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return {f.grid(), std::move(d)};
}

/// Three-point second difference; endpoint values are copied from their
/// neighbours and should not be used.
inline SampledFunction second_derivative(const SampledFunction& f) {
    const std::size_t n = f.size();
    const double h2 = f.grid().h() * f.grid().h();
    std::vector<double> d(n);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
    d[0] = d[1];
    d[n - 1] = d[n - 2];
    return {f.grid(), std::move(d)};
}

/// Pointwise combination of samples on a shared grid.
template <class Op>
SampledFunction zip_with(const SampledFunction& f, const SampledFunction& g, Op op) {
    detail::require(f.grid().same_nodes(g.grid()), "pointwise operation needs a shared grid");
    std::vector<double> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(f[i], g[i]);
    return {f.grid(), std::move(v)};
}

template <class Op>
SampledFunction map_values(const SampledFunction& f, Op op) {
    std::vector<double> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(f[i]);
    return {f.grid(), std::move(v)};
}

/// L2 normalisation by quadrature; returns the function and its original norm.
inline std::pair<SampledFunction, double> normalized(const SampledFunction& f,
                                                     QuadratureRule rule = QuadratureRule::simpson) {
    const double norm = std::sqrt(inner_product(f, f, rule));
    if (!(norm > 0.0)) throw NumericalError("cannot normalise a zero function");
    return {map_values(f, [norm](double v) { return v / norm; }), norm};
}

}  // namespace isospec
