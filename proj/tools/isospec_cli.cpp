// isospec: tabulate, verify and plot-data front end for the isospectral
// potential library.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 numerical
// non-convergence.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isospec/csv.hpp"
#include "isospec/figures.hpp"
#include "isospec/models.hpp"
#include "isospec/scattering.hpp"
#include "isospec/spectral.hpp"
#include "isospec/susy.hpp"
#include "isospec/verification.hpp"
#include "isospec/version.hpp"

namespace {

using namespace isospec;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_numerical = 3;

struct RunConfig {
    std::string command;
    std::string family = "radosc";
    bool family_given = false;
    std::optional<double> omega;
    std::optional<int> ell;
    std::optional<double> A;
    std::optional<double> B;
    int m = 1;
    std::string lambda;
    std::size_t grid_n = models::default_grid_n;
    double clip = default_clip;
    std::optional<double> cutoff;
    std::size_t levels = 5;
    double tol = 1e-4;
    std::string out = "-";
    std::string format = "csv";
    bool partner = false;
    bool gnuplot = false;
    double perturb = 0.0;
    double kmin = 0.1;
    double kmax = 5.0;
    double kstep = 0.01;
};

ModelSpec model_of(const RunConfig& c) {
    if (c.family == "radosc") return ModelSpec::radial_oscillator(c.omega.value_or(2.0), c.ell.value_or(1), c.m);
    if (c.family == "scarf1") return ModelSpec::scarf1(c.A.value_or(3.0), c.B.value_or(1.0), c.m);
    if (c.family == "gpt") return ModelSpec::gpt(c.A.value_or(1.0), c.B.value_or(3.0), c.m);
    throw DomainError("unknown family " + c.family);
}

double parse_lambda(const std::string& tok) {
    if (tok == "inf" || tok == "+inf") return std::numeric_limits<double>::infinity();
    if (tok == "-inf") return -std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || tok.empty()) throw DomainError("cannot parse lambda value '" + tok + "'");
    DeformationParam check(v);  // rejects (-1, 0) with the normalisability explanation
    return v;
}

std::vector<double> lambdas_of(const RunConfig& c) {
    std::vector<double> out;
    std::stringstream ss(c.lambda);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (!tok.empty()) out.push_back(parse_lambda(tok));
    }
    return out;
}

Grid grid_of(const RunConfig& c, const ModelSpec& s) { return models::default_grid(s, c.grid_n, c.clip, c.cutoff); }

char separator(const RunConfig& c) { return c.format == "tsv" ? '\t' : ','; }

std::vector<std::string> config_echo(const RunConfig& c, const ModelSpec& s, const Grid* g) {
    std::vector<std::string> lines{"command=" + c.command, "model " + s.describe()};
    if (!c.lambda.empty()) lines.push_back("lambda=" + c.lambda);
    if (g) {
        lines.push_back("grid n=" + std::to_string(g->size()) + " on [" + csv::format_number(g->a()) + ", " +
                        csv::format_number(g->b()) + "]");
    }
    lines.push_back("format=" + c.format);
    return lines;
}

void emit(const RunConfig& c, const csv::Table& t) {
    if (c.out == "-") {
        csv::write(std::cout, t, separator(c));
    } else {
        csv::write_file(c.out, t, separator(c));
    }
}

int cmd_tabulate(const RunConfig& c) {
    const ModelSpec s = model_of(c);
    const Grid g = grid_of(c, s);
    auto t = figures::tabulate(s, g, lambdas_of(c), c.partner);
    t.comments = config_echo(c, s, &g);
    emit(c, t);
    return exit_ok;
}

int cmd_spectrum(const RunConfig& c) {
    const ModelSpec s = model_of(c);
    auto ls = lambdas_of(c);
    if (ls.size() > 1) throw DomainError("spectrum takes at most one lambda");
    verify::PotentialChoice choice = verify::PotentialChoice::minus();
    if (c.partner) choice = verify::PotentialChoice::plus();
    if (!ls.empty()) choice = verify::PotentialChoice::deformed(ls.front());
    const bool deleted = c.partner || choice.singular_limit();

    verify::OracleSettings o;
    o.n_coarse = c.grid_n;
    o.n_fine = 2 * c.grid_n;
    o.tol = c.tol;
    auto rep = verify::oracle_spectrum(s, choice, c.levels, o, c.perturb);

    csv::Table t;
    t.comments = config_echo(c, s, nullptr);
    t.comments.push_back("potential " + choice.label() + "; oracle grids n=" + std::to_string(o.n_coarse / 2) + "," +
                         std::to_string(o.n_coarse) + "," + std::to_string(o.n_fine) + " with Richardson");
    const std::size_t shift = deleted ? 1 : 0;
    const bool capped = std::isfinite(models::continuum_threshold(s));
    std::size_t rows = capped ? rep.size() : c.levels;
    while (capped && models::is_bound_level(s, static_cast<int>(rows + shift))) ++rows;
    std::vector<double> level, analytic, oracle, diff, err, conv;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    bool all_converged = true;
    for (std::size_t i = 0; i < rows; ++i) {
        const int n = static_cast<int>(i + shift);
        const double e = models::is_bound_level(s, n) ? models::energy(s, n) : nan;
        const double got = i < rep.size() ? rep.best(i) : nan;
        level.push_back(static_cast<double>(i));
        analytic.push_back(e);
        oracle.push_back(got);
        diff.push_back(std::abs(got - e));
        err.push_back(i < rep.size() ? rep.error_estimate[i] : nan);
        const bool ok = i < rep.size() && rep.converged[i];
        conv.push_back(ok ? 1.0 : 0.0);
        all_converged = all_converged && ok;
    }
    t.add("level", level);
    t.add("analytic", analytic);
    t.add("oracle", oracle);
    t.add("absdiff", diff);
    t.add("error_estimate", err);
    t.add("converged", conv);
    emit(c, t);
    return all_converged ? exit_ok : exit_numerical;
}

int cmd_verify(const RunConfig& c) {
    std::vector<ModelSpec> instances = c.family_given ? std::vector<ModelSpec>{model_of(c)} : verify::worked_instances();
    auto ls = c.lambda.empty() ? verify::sweep_lambdas() : lambdas_of(c);
    const double tol = c.tol;
    std::vector<verify::CheckResult> results;
    auto add = [&](verify::CheckResult r) {
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.subject << "] " << r.value
                  << " (tol " << r.tol << ")" << (r.detail.empty() ? "" : " " + r.detail) << '\n';
        results.push_back(std::move(r));
    };
    for (const auto& s : instances) {
        add(verify::check_factorization(s, 1e-8));
        add(verify::check_w_from_ground(s, 1e-6));
        add(verify::check_residuals(s, 3, 1e-5));
        add(verify::check_normalization(s, 3, 1e-8));
        if (models::worked_instance(s)) add(verify::check_closed_form_I1(s, c.grid_n + 1, 1e-8));
        add(verify::check_spectrum_formula(s, c.levels, tol));
        for (double l : ls) {
            DeformationParam p(l);
            if (p.kind() == DeformationClass::pursey || p.kind() == DeformationClass::abraham_moses) {
                auto [del, part] = verify::check_deletion(s, l, c.levels - 1, tol);
                add(del);
                add(part);
                continue;
            }
            add(verify::check_isospectral(s, l, c.levels, tol, {}, c.perturb));
            if (p.is_generic()) {
                auto [nrm, orth] = verify::check_deformed_states(s, l, 1e-6, 1e-5);
                add(nrm);
                add(orth);
            }
        }
        if (c.lambda.empty()) {
            for (double l : {0.0, -1.0}) {
                auto [del, part] = verify::check_deletion(s, l, c.levels - 1, tol);
                add(del);
                add(part);
            }
        }
        if (s.family == Family::gpt) {
            auto sc = verify::check_scattering(s, c.kmin, c.kmax, c.kstep, 1e-10);
            for (auto* r : {&sc.unitarity, &sc.pursey_equal, &sc.am_ratio, &sc.partner_ratio, &sc.phase_continuity}) {
                add(*r);
            }
        }
    }
    csv::Table t;
    t.comments = {"command=verify", "instances=" + std::to_string(instances.size())};
    std::vector<double> idx, value, tl, pass;
    for (std::size_t i = 0; i < results.size(); ++i) {
        idx.push_back(static_cast<double>(i));
        value.push_back(results[i].value);
        tl.push_back(results[i].tol);
        pass.push_back(results[i].pass ? 1.0 : 0.0);
        t.comments.push_back("check " + std::to_string(i) + ": " + results[i].name + " [" + results[i].subject + "]");
    }
    t.add("check", idx);
    t.add("value", value);
    t.add("tol", tl);
    t.add("pass", pass);
    emit(c, t);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    std::cerr << (failed == 0 ? "all " + std::to_string(results.size()) + " checks passed"
                              : std::to_string(failed) + " of " + std::to_string(results.size()) + " checks failed")
              << '\n';
    return failed == 0 ? exit_ok : exit_failed;
}

int cmd_figures(const RunConfig& c) {
    const std::filesystem::path dir = c.out == "-" ? std::filesystem::path("figures") : std::filesystem::path(c.out);
    std::filesystem::create_directories(dir);
    const std::string ext = c.format == "tsv" ? ".tsv" : ".csv";
    for (const auto& f : figures::standard_figures()) {
        for (auto& panel : figures::figure_panels(f, c.grid_n)) {
            const std::string name = panel.name + ext;
            csv::write_file((dir / name).string(), panel.table, separator(c));
            if (c.gnuplot) {
                std::ofstream gp(dir / (panel.name + ".gp"));
                gp << figures::gnuplot_script(panel, name);
            }
            std::cerr << "wrote " << (dir / name).string() << '\n';
        }
    }
    return exit_ok;
}

int cmd_scatter(const RunConfig& c) {
    const ModelSpec s = model_of(c);
    if (s.family != Family::gpt) throw DomainError("scatter needs --family gpt");
    const auto ks = k_scan(c.kmin, c.kmax, c.kstep);
    csv::Table t;
    t.comments = config_echo(c, s, nullptr);
    t.comments.push_back("k' from " + csv::format_number(c.kmin) + " to " + csv::format_number(c.kmax) + " step " +
                         csv::format_number(c.kstep));
    std::vector<std::vector<double>> cols(20);
    std::vector<double> phase;
    for (double k : ks) {
        auto a = gpt_amplitudes(s, k);
        std::size_t j = 0;
        for (Complex z : {a.s_minus, a.s_plus, a.s_pursey, a.s_am}) {
            cols[j++].push_back(z.real());
            cols[j++].push_back(z.imag());
            cols[j++].push_back(std::abs(z));
            cols[j++].push_back(std::arg(z));
        }
        const Complex ratio = a.s_am / a.s_minus;
        cols[j++].push_back(ratio.real());
        cols[j++].push_back(ratio.imag());
        phase.push_back(std::arg(a.s_minus));
    }
    t.add("kprime", ks);
    const char* names[] = {"s-", "s+", "s[P]", "s[AM]"};
    std::size_t j = 0;
    for (const char* n : names) {
        for (const char* part : {"re_", "im_", "abs_", "arg_"}) t.add(std::string(part) + n, cols[j++]);
    }
    t.add("re_s[AM]/s-", cols[j++]);
    t.add("im_s[AM]/s-", cols[j++]);
    t.add("arg_s-_unwrapped", unwrap_phase(phase));
    emit(c, t);
    return exit_ok;
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option_function<std::string>(
           "--family",
           [&c](const std::string& f) {
               c.family = f;
               c.family_given = true;
           },
           "Model family")
        ->check(CLI::IsMember({"radosc", "scarf1", "gpt"}));
    sub->add_option("--omega", c.omega, "Oscillator frequency (radosc)");
    sub->add_option("--ell", c.ell, "Angular momentum (radosc)");
    sub->add_option("--A", c.A, "Parameter A (scarf1, gpt)");
    sub->add_option("--B", c.B, "Parameter B (scarf1, gpt)");
    sub->add_option("--m", c.m, "Rational index m")->check(CLI::NonNegativeNumber);
    sub->add_option("--lambda", c.lambda, "Comma-separated lambda list; inf and -inf allowed")
        ->allow_extra_args(false);
    sub->add_option("--grid-n", c.grid_n, "Grid nodes")->check(CLI::Range(std::size_t{3}, std::size_t{10000000}));
    sub->add_option("--clip", c.clip, "Clip at singular endpoints")->check(CLI::PositiveNumber);
    sub->add_option("--cutoff", c.cutoff, "Truncation of infinite domains");
    sub->add_option("--levels", c.levels, "Number of levels")->check(CLI::Range(std::size_t{1}, std::size_t{200}));
    sub->add_option("--tol", c.tol, "Eigenvalue tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", c.out, "Output file ('-' for stdout; directory for figures)");
    sub->add_option("--format", c.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Isospectral deformations of rationally extended potentials"};
    app.set_version_flag("--version", std::string("isospec ") + isospec::version);
    app.require_subcommand(1);
    RunConfig cfg;

    auto* tab = app.add_subcommand("tabulate", "Tabulate V-, deformed potentials and optionally V+");
    add_common(tab, cfg);
    tab->add_flag("--partner", cfg.partner, "Append a V+ column");

    auto* spec = app.add_subcommand("spectrum", "Oracle spectrum against the analytic energies");
    add_common(spec, cfg);
    spec->add_flag("--partner", cfg.partner, "Use V+ instead of V-");
    spec->add_option("--perturb", cfg.perturb, "Add a constant to the potential (test hook)");

    auto* ver = app.add_subcommand("verify", "Run the consistency and isospectrality checks");
    add_common(ver, cfg);
    ver->add_option("--perturb", cfg.perturb, "Add a constant to deformed potentials (test hook)");

    auto* fig = app.add_subcommand("figures", "Write the figure data files");
    add_common(fig, cfg);
    fig->add_flag("--gnuplot", cfg.gnuplot, "Also write gnuplot scripts");

    auto* sc = app.add_subcommand("scatter", "GPT s-wave amplitudes on a k' scan");
    add_common(sc, cfg);
    sc->add_option("--kmin", cfg.kmin, "First k'");
    sc->add_option("--kmax", cfg.kmax, "Last k'");
    sc->add_option("--kstep", cfg.kstep, "k' step")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (tab->parsed()) cfg.command = "tabulate";
        if (spec->parsed()) cfg.command = "spectrum";
        if (ver->parsed()) cfg.command = "verify";
        if (fig->parsed()) cfg.command = "figures";
        if (sc->parsed()) cfg.command = "scatter";
        if (cfg.command == "tabulate") return cmd_tabulate(cfg);
        if (cfg.command == "spectrum") return cmd_spectrum(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        if (cfg.command == "figures") return cmd_figures(cfg);
        if (cfg.command == "scatter") return cmd_scatter(cfg);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
