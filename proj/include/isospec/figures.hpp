#pragma once

// Curve tables for the potential families of the three worked X_1 instances
// and for ad-hoc tabulation.

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "isospec/csv.hpp"
#include "isospec/models.hpp"
#include "isospec/susy.hpp"

namespace isospec::figures {

inline std::string lambda_label(double l) { return "lambda=" + csv::format_number(l); }

/// Column name used for the curve of a deformation parameter.
inline std::string curve_name(double l) {
    if (l == 0.0) return "V[P]";
    if (l == -1.0) return "V[AM]";
    if (std::isinf(l)) return "V-";
    return "V^(" + lambda_label(l) + ")";
}

/// Potential for one lambda on the family grid (window for Pursey/AM).
inline SampledFunction potential_for(const ModelSpec& s, const Grid& g, const SampledFunction& vminus, double lambda,
                                     double floor = default_weight_floor) {
    DeformedFamily fam(s, g, DeformationParam(lambda));
    return isospectral_potential(fam, vminus, floor);
}

/// Columns x, V-, one per lambda (in order), and optionally V+.
inline csv::Table tabulate(const ModelSpec& s, const Grid& g, const std::vector<double>& lambdas,
                           bool with_partner = false) {
    auto vm = models::sample_v_minus(s, g);
    std::vector<std::pair<std::string, SampledFunction>> curves;
    curves.emplace_back("V-", vm);
    for (double l : lambdas) {
        std::string name = curve_name(l);
        if (std::isinf(l)) name = "V^(" + lambda_label(l) + ")";
        curves.emplace_back(name, potential_for(s, g, vm, l));
    }
    if (with_partner) curves.emplace_back("V+", models::sample_v_plus(s, g));
    return csv::curves_on(g, curves);
}

struct FigureSpec {
    int number;
    ModelSpec model;
    std::vector<double> positive;  // panel (a), including 0 and +inf
    std::vector<double> negative;  // panel (b), including -1 and -inf
    double plot_hi;                // rows with x beyond this are not written
    bool divide_by_x;              // panel (d) plots psi^0 / r
};

inline std::vector<FigureSpec> standard_figures() {
    const double inf = std::numeric_limits<double>::infinity();
    return {
        {1, ModelSpec::radial_oscillator(2.0, 1, 1), {inf, 1.0, 0.1, 0.05, 0.0}, {-inf, -3.0, -1.1, -1.001, -1.0},
         6.0, true},
        {2, ModelSpec::scarf1(3.0, 1.0, 1), {inf, 0.5, 0.1, 0.05, 0.0}, {-inf, -1.1, -1.01, -1.001, -1.0},
         std::numbers::pi / 2, false},
        {3, ModelSpec::gpt(1.0, 3.0, 1), {inf, 0.1, 0.025, 0.01, 0.0}, {-inf, -1.05, -1.005, -1.0005, -1.0}, 8.0,
         false},
    };
}

struct FigurePanel {
    std::string name;  // e.g. "fig1a"
    csv::Table table;
};

/// Panels (a) positive lambda, (b) negative lambda, (c) V+, V[P], V[AM],
/// (d) deformed ground states for the positive generic lambdas.
inline std::vector<FigurePanel> figure_panels(const FigureSpec& f, std::size_t n = models::default_grid_n) {
    const ModelSpec& s = f.model;
    const Grid g = models::default_grid(s, n);
    const auto vm = models::sample_v_minus(s, g);
    const std::string tag = "fig" + std::to_string(f.number);
    const std::string model = "model " + s.describe();
    const std::string xname = s.family == Family::radial_oscillator ? "r" : "x";
    auto finish = [&](csv::Table t, std::string what) {
        t = csv::clip_rows(t, g.a(), f.plot_hi);
        t.comments = {model, std::move(what), "grid n=" + std::to_string(n) + " on [" + csv::format_number(g.a()) +
                                                  ", " + csv::format_number(g.b()) + "]"};
        return t;
    };
    auto lambda_panel = [&](const std::vector<double>& ls) {
        std::vector<std::pair<std::string, SampledFunction>> curves;
        for (double l : ls) curves.emplace_back(lambda_label(l), potential_for(s, g, vm, l));
        return csv::curves_on(g, curves, xname);
    };
    std::vector<FigurePanel> out;
    out.push_back({tag + "a", finish(lambda_panel(f.positive),
                                     "isospectral potentials, lambda >= 0 (lambda=0 is the Pursey potential)")});
    out.push_back({tag + "b", finish(lambda_panel(f.negative),
                                     "isospectral potentials, lambda <= -1 (lambda=-1 is the Abraham-Moses potential)")});
    out.push_back({tag + "c", finish(csv::curves_on(g,
                                                    {{"V+", models::sample_v_plus(s, g)},
                                                     {"V[P]", potential_for(s, g, vm, 0.0)},
                                                     {"V[AM]", potential_for(s, g, vm, -1.0)}},
                                                    xname),
                                     "partner, Pursey and Abraham-Moses potentials")});
    std::vector<std::pair<std::string, SampledFunction>> states;
    DeformedFamily base(s, g, DeformationParam(std::numeric_limits<double>::infinity()));
    for (double l : f.positive) {
        if (l == 0.0) continue;
        auto psi = deformed_ground_state(base.with_lambda(DeformationParam(l)));
        if (f.divide_by_x) psi = zip_with(psi, SampledFunction::sample(g, [](double x) { return x; }),
                                          [](double p, double x) { return p / x; });
        states.emplace_back(lambda_label(l), std::move(psi));
    }
    out.push_back({tag + "d", finish(csv::curves_on(g, states, xname),
                                     f.divide_by_x ? "normalized deformed ground states divided by r"
                                                   : "normalized deformed ground states")});
    return out;
}

/// Minimal gnuplot script for a panel file.
inline std::string gnuplot_script(const FigurePanel& p, const std::string& csv_name) {
    std::string s = "set datafile separator ','\nset datafile missing 'nan'\nset key top right\n";
    s += "set terminal pngcairo size 800,600\nset output '" + p.name + ".png'\n";
    if (p.name.back() != 'd') s += "set yrange [-20:60]\n";
    s += "plot ";
    for (std::size_t j = 1; j < p.table.columns.size(); ++j) {
        if (j > 1) s += ", \\\n     ";
        s += "'" + csv_name + "' using 1:" + std::to_string(j + 1) + " with lines title '" +
             p.table.columns[j].name + "'";
    }
    return s + "\n";
}

}  // namespace isospec::figures
