#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "isospec/csv.hpp"
#include "isospec/figures.hpp"

using namespace isospec;
using Catch::Matchers::StartsWith;

TEST_CASE("number formatting round-trips") {
    CHECK(csv::format_number(0.1) == "0.1");
    CHECK(csv::format_number(std::nan("")) == "nan");
    CHECK(csv::format_number(-std::numeric_limits<double>::infinity()) == "-inf");
    for (double v : {1.0 / 3.0, -2.5e-300, 6.02214076e23, 4.0}) CHECK(std::stod(csv::format_number(v)) == v);
}

TEST_CASE("table write and read") {
    csv::Table t;
    t.comments = {"model test"};
    t.add("x", {0.0, 0.5, 1.0});
    t.add("y", {1.0, std::nan(""), 3.25});
    CHECK_THROWS_AS(t.add("z", {1.0}), DomainError);
    std::ostringstream os;
    csv::write(os, t);
    const std::string text = os.str();
    CHECK_THAT(text, StartsWith("# isospec " + std::string(version) + "\n# model test\nx,y\n"));
    std::istringstream is(text);
    auto back = csv::read(is);
    REQUIRE(back.rows() == 3);
    CHECK(back.column("y").values[2] == 3.25);
    CHECK(std::isnan(back.column("y").values[1]));
    CHECK(back.comments.back() == "model test");

    std::ostringstream tsv;
    csv::write(tsv, t, '\t');
    CHECK(tsv.str().find("x\ty\n") != std::string::npos);
}

TEST_CASE("curves on windows are padded with nan") {
    Grid g(DomainKind::finite_interval, 0.0, 1.0, 11);
    auto f = SampledFunction::sample(g.window(2, 8), [](double x) { return x; });
    auto t = csv::curves_on(g, {{"f", f}});
    CHECK(std::isnan(t.column("f").values[0]));
    CHECK(t.column("f").values[2] == g[2]);
    CHECK(std::isnan(t.column("f").values[10]));
    auto c = csv::clip_rows(t, 0.25, 0.75);
    CHECK(c.rows() == 5);
}

TEST_CASE("tabulate column order") {
    const ModelSpec s = ModelSpec::radial_oscillator(2.0, 1, 1);
    const Grid g = models::default_grid(s, 200);
    auto empty = figures::tabulate(s, g, {});
    REQUIRE(empty.columns.size() == 2);
    CHECK(empty.columns[0].name == "x");
    CHECK(empty.columns[1].name == "V-");
    auto t = figures::tabulate(s, g, {0.05, 0.1, 1.0, 0.0, -1.0}, true);
    std::vector<std::string> names;
    for (const auto& c : t.columns) names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"x", "V-", "V^(lambda=0.05)", "V^(lambda=0.1)", "V^(lambda=1)", "V[P]",
                                            "V[AM]", "V+"});
}

TEST_CASE("figure panels") {
    for (const auto& f : figures::standard_figures()) {
        auto panels = figures::figure_panels(f, 800);
        REQUIRE(panels.size() == 4);
        const std::string tag = "fig" + std::to_string(f.number);
        CHECK(panels[0].name == tag + "a");
        CHECK(panels[0].table.columns.size() == 1 + f.positive.size());
        CHECK(panels[1].table.columns.size() == 1 + f.negative.size());
        CHECK(panels[2].table.columns[1].name == "V+");
        CHECK(panels[3].table.columns.size() == f.positive.size());
        CHECK(panels[0].table.columns.front().values.back() <= f.plot_hi);
        auto script = figures::gnuplot_script(panels[0], tag + "a.csv");
        CHECK(script.find("set terminal") < script.find("set output"));
        CHECK(script.find("using 1:2") != std::string::npos);
    }
}

TEST_CASE("output is deterministic") {
    const auto f = figures::standard_figures()[1];
    auto a = figures::figure_panels(f, 400);
    auto b = figures::figure_panels(f, 400);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::ostringstream x;
        std::ostringstream y;
        csv::write(x, a[i].table);
        csv::write(y, b[i].table);
        CHECK(x.str() == y.str());
    }
}
