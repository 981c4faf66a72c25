#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isospec/spectral.hpp"
#include "isospec/verification.hpp"

using namespace isospec;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> box_levels(std::size_t n, std::size_t k, double c = 0.0) {
    Grid g(DomainKind::finite_interval, 0.0, std::numbers::pi, n);
    auto v = SampledFunction::sample(g, [c](double) { return c; });
    return lowest_eigenvalues(build_hamiltonian(v), k).energies;
}

// Real roots of a monic cubic with three real roots (trigonometric form).
std::vector<double> cubic_roots(double b, double c, double d) {
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double phi = std::acos(3.0 * q / (p * r));
    std::vector<double> out;
    for (int k = 0; k < 3; ++k) out.push_back(r * std::cos((phi - 2.0 * std::numbers::pi * k) / 3.0) - b / 3.0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("Hamiltonian shape") {
    Grid g(DomainKind::finite_interval, 0.0, 1.0, 11);
    auto h = build_hamiltonian(SampledFunction::sample(g, [](double x) { return x; }));
    CHECK(h.diag.size() == 9);
    CHECK(h.offdiag.size() == 8);
    CHECK_THAT(h.diag[0], WithinRel(200.0 + 0.1, 1e-12));
    CHECK_THAT(h.offdiag[0], WithinRel(-100.0, 1e-12));
}

TEST_CASE("bisection agrees with the characteristic cubic of a 3x3 matrix") {
    Grid g(DomainKind::finite_interval, 0.0, 4.0, 5);
    auto v = SampledFunction::sample(g, [](double x) { return x * x - 2.0; });
    auto h = build_hamiltonian(v);
    const double a0 = h.diag[0];
    const double a1 = h.diag[1];
    const double a2 = h.diag[2];
    const double b0 = h.offdiag[0];
    const double b1 = h.offdiag[1];
    // det(H - x) = -(x^3 + B x^2 + C x + D)
    const double B = -(a0 + a1 + a2);
    const double C = a0 * a1 + a1 * a2 + a0 * a2 - b0 * b0 - b1 * b1;
    const double D = -(a0 * a1 * a2 - a0 * b1 * b1 - a2 * b0 * b0);
    auto roots = cubic_roots(B, C, D);
    auto [lo, hi] = gershgorin(h);
    for (std::size_t k = 0; k < 3; ++k) CHECK_THAT(kth_eigenvalue(h, k, lo, hi), WithinAbs(roots[k], 1e-12));
    CHECK(count_below(h, roots[1] + 1e-9) == 2);
}

TEST_CASE("particle in a box converges to 1, 4, 9 at second order") {
    auto coarse = box_levels(1001, 3);
    auto fine = box_levels(2001, 3);
    for (std::size_t k = 0; k < 3; ++k) {
        const double exact = double((k + 1) * (k + 1));
        CHECK_THAT(fine[k], WithinRel(exact, 1e-4));
        const double ratio = (exact - coarse[k]) / (exact - fine[k]);
        CHECK_THAT(ratio, WithinAbs(4.0, 0.05));
    }
}

TEST_CASE("a constant potential shifts the box spectrum") {
    auto base = box_levels(801, 4);
    auto shifted = box_levels(801, 4, 2.5);
    for (std::size_t k = 0; k < 4; ++k) CHECK_THAT(shifted[k] - base[k], WithinAbs(2.5, 1e-9));
}

TEST_CASE("harmonic oscillator levels") {
    const Grid dom(DomainKind::finite_interval, -10.0, 10.0, 3);
    PotentialSampler sampler = [](const Grid& g) { return SampledFunction::sample(g, [](double x) { return x * x; }); };
    auto r = converged_spectrum(sampler, dom, 5);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK_THAT(r.best(k), WithinAbs(2.0 * k + 1.0, 1e-7));
        CHECK(r.converged[k]);
        CHECK(r.error_estimate[k] < 1e-6);
    }
    CHECK(std::is_sorted(r.energies.begin(), r.energies.end()));
}

TEST_CASE("level count is range-checked") {
    Grid g(DomainKind::finite_interval, 0.0, 1.0, 40);
    auto h = build_hamiltonian(SampledFunction::sample(g, [](double) { return 0.0; }));
    CHECK_THROWS_AS(lowest_eigenvalues(h, 10), DomainError);
    CHECK_THROWS_AS(lowest_eigenvalues(h, 0), DomainError);
    CHECK_NOTHROW(lowest_eigenvalues(h, 9));
}

TEST_CASE("Richardson removes the h^2 term") {
    const double exact = 3.0;
    auto e = [&](double h) { return exact + 0.7 * h * h; };
    CHECK_THAT(richardson(e(0.1), 0.1, e(0.05), 0.05), WithinAbs(exact, 1e-14));
}

TEST_CASE("wall window trims divergent ends") {
    Grid g(DomainKind::finite_interval, 0.0, 1.0, 11);
    auto v = SampledFunction(g, {1e9, 1e7, 5, 1, 0, 0, 0, 1, 5, 2e6, 1e8});
    auto w = wall_window(v, 1e6);
    CHECK(w.size() == 7);
    CHECK(w[0] == 5.0);
    CHECK_THROWS_AS(wall_window(SampledFunction(g, std::vector<double>(11, 1e7)), 1e6), NumericalError);
}

TEST_CASE("eigen residual") {
    Grid g(DomainKind::finite_interval, 0.0, std::numbers::pi, 1001);
    auto psi = SampledFunction::sample(g, [](double x) { return std::sin(x); });
    auto zero = SampledFunction::sample(g, [](double) { return 0.0; });
    const double h = g.h();
    CHECK(eigen_residual(psi, 1.0, zero) < h * h);
    CHECK(eigen_residual(psi, 1.1, zero) > 0.099);
}

TEST_CASE("model eigenfunctions have small residuals at h = 1e-3") {
    for (const auto& s : verify::worked_instances()) {
        INFO(s.describe());
        const Grid g = verify::grid_with_spacing(s, 1e-3);
        auto vm = models::sample_v_minus(s, g);
        for (int n = 0; n < 3 && models::is_bound_level(s, n); ++n) {
            const double r = eigen_residual(models::sample_psi_minus(s, n, g), models::energy(s, n), vm);
            CHECK(r < 1e-3);
        }
    }
}

TEST_CASE("oscillator V- spectrum on a single grid") {
    const ModelSpec s = ModelSpec::radial_oscillator(2.0, 1, 1);
    auto r = lowest_eigenvalues(build_hamiltonian(models::sample_v_minus(s, models::default_grid(s))), 3);
    CHECK_THAT(r.energies[0], WithinAbs(0.0, 1e-3));
    CHECK_THAT(r.energies[1], WithinAbs(4.0, 1e-3));
    CHECK_THAT(r.energies[2], WithinAbs(8.0, 1e-3));
    CHECK(r.converged.empty());
}

TEST_CASE("isospectral comparison modes") {
    const ModelSpec s = ModelSpec::radial_oscillator(2.0, 1, 1);
    const Grid g = models::default_grid(s);
    auto vm = models::sample_v_minus(s, g);
    auto self = verify_isospectral(vm, vm, 5, 1e-12);
    CHECK(self.passed);
    CHECK(self.max_diff == 0.0);

    DeformedFamily fam(s, g, DeformationParam(1.0));
    auto vhat = deformed_potential(fam, vm, fam.w());
    CHECK(verify_isospectral(vm, vhat, 5, 1e-3).passed);

    auto vp = isospectral_potential(fam.with_lambda(DeformationParam(0.0)), vm, 0.0);
    auto shifted = verify_isospectral(vm, wall_window(vp, 1e6), 4, 1e-3, IsospectralMode::shifted_by_one);
    CHECK(shifted.passed);
    CHECK_FALSE(verify_isospectral(vm, wall_window(vp, 1e6), 4, 1e-3).passed);
}

TEST_CASE("unconverged levels are reported") {
    SpectrumReport a;
    a.energies = {0.0, 1.0};
    a.richardson_estimate = {0.0, 1.0};
    a.error_estimate = {0.0, 1.0};
    a.converged = {true, false};
    CHECK_THROWS_AS(compare_spectra(a, a, 2, 1e-6), NumericalError);
    CHECK_NOTHROW(compare_spectra(a, a, 1, 1e-6));
}

TEST_CASE("levels below a continuum threshold") {
    const ModelSpec s = ModelSpec::gpt(1.0, 3.0, 1);
    auto r = verify::oracle_spectrum(s, verify::PotentialChoice::minus(), 5);
    REQUIRE(r.size() == 1);
    CHECK_THAT(r.best(0), WithinAbs(0.0, 1e-6));
    auto p = verify::oracle_spectrum(s, verify::PotentialChoice::plus(), 5);
    CHECK(p.size() == 0);
}
