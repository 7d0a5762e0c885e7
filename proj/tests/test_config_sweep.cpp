#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "casimir/config.hpp"
#include "casimir/scenarios.hpp"
#include "casimir/sweep.hpp"

using namespace casimir;

namespace {

RunConfig parse(const std::string& text, const Scenario* base = nullptr) {
    std::istringstream in(text);
    return parse_config(in, base);
}

} // namespace

TEST_CASE("parse a full scalar3d config") {
    const auto cfg = parse(R"(
# two spheres
[system]
field = scalar3d
method = oracle
units = natural
threads = 2
[geometry]
radius_a = 1
radius_b = 2
center_distance = 10
[material]
chi1 = 11.68
chi2 = 2.6
[temperature]
min = 0.01
max = 1
steps = 50
scale = log
[numerics]
l_max = 20000
sphere_order = 16
[output]
path = out.csv
)");
    CHECK(cfg.scenario.field == FieldType::Scalar3D);
    CHECK(cfg.method == Method::Oracle);
    CHECK(cfg.threads == 2);
    REQUIRE(cfg.scenario.spheres.has_value());
    CHECK(cfg.scenario.spheres->radius_b == doctest::Approx(2.0));
    CHECK(cfg.scenario.spheres->chi1 == doctest::Approx(11.68));
    CHECK(cfg.scenario.grid.steps == 50);
    CHECK(cfg.scenario.grid.log_scale);
    CHECK(cfg.numerics.l_max == 20000);
    CHECK(cfg.numerics.sphere_polar_order == 16);
    CHECK(cfg.output_path == "out.csv");
}

TEST_CASE("dotted keys work without section headers") {
    const auto cfg = parse(R"(
system.field = scalar1d
geometry.a = 0
geometry.b = 1
geometry.c = 3
geometry.d = 4
material.chi1 = 1
material.chi2 = 0.5
temperature.min = 0.1
temperature.max = 1
temperature.steps = 5
)");
    CHECK(cfg.scenario.field == FieldType::Scalar1D);
    REQUIRE(cfg.scenario.ribbons.has_value());
    CHECK(cfg.scenario.ribbons->chi2 == doctest::Approx(0.5));
}

TEST_CASE("scalar2d bodies parse") {
    const auto cfg = parse(R"(
[system]
field = scalar2d
[geometry]
body1 = disk 0 0 1
body2 = rect 4 0 1 0.5
[material]
chi1 = 1
chi2 = 1
[temperature]
min = 0.5
max = 2
steps = 3
)");
    REQUIRE(cfg.scenario.bodies2d.has_value());
    CHECK(scalar2d::min_gap(*cfg.scenario.bodies2d) == doctest::Approx(2.0));
}

TEST_CASE("config errors carry line numbers and key names") {
    // geometry key from the wrong field
    CHECK_THROWS_WITH_AS(parse("[system]\nfield = scalar1d\n[geometry]\nradius_a = 1\n"
                               "a=0\nb=1\nc=2\nd=3\n[material]\nchi1=1\nchi2=1\n"
                               "[temperature]\nmin=0.1\nmax=1\nsteps=2\n"),
                         doctest::Contains("radius_a"), ConfigError);
    CHECK_THROWS_WITH_AS(parse("[system]\nfield = scalar1d\n"), doctest::Contains("a, b, c, d"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse("[bogus]\nx = 1\n"), doctest::Contains("unknown section"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse("[system]\nfield = maxwell\n"), doctest::Contains("unknown field"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse("x = 1\n"), doctest::Contains("before any"), ConfigError);
    // Z axis is an em-only concept
    CHECK_THROWS_WITH_AS(parse("[system]\nfield = scalar1d\n[geometry]\na=0\nb=1\nc=2\nd=3\n"
                               "[material]\nchi1=1\nchi2=1\n[temperature]\nmin=0.1\nmax=1\n"
                               "steps=2\naxis = Z\n"),
                         doctest::Contains("Z axis"), ConfigError);
}

TEST_CASE("scenario base with config overrides") {
    const Scenario* base = find_scenario("fig3-blue");
    REQUIRE(base != nullptr);
    const auto cfg = parse("[material]\nchi2 = 5.0\n[temperature]\nsteps = 7\n", base);
    CHECK(cfg.scenario.spheres->chi1 == doctest::Approx(11.68));
    CHECK(cfg.scenario.spheres->chi2 == doctest::Approx(5.0));
    CHECK(cfg.scenario.grid.steps == 7);
    CHECK(cfg.scenario.grid.min == doctest::Approx(0.001));
}

TEST_CASE("format_double round-trips") {
    for (double v : {0.1, -3.634516837773449e3, 1.0 / 3.0, 2.615408863756705, 0.0}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("zero susceptibility sweep has all-zero interaction columns") {
    auto cfg = parse(R"(
[system]
field = scalar1d
[geometry]
a = 0
b = 1
c = 3
d = 4
[material]
chi1 = 0
chi2 = 0
[temperature]
min = 0.1
max = 1
steps = 4
)");
    std::ostringstream out;
    CHECK(run_sweep(cfg, cfg.method, out) == 0);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "T,E_self,E_int,E_total,S,U,F,status");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        // every numeric column but T must be exactly zero
        std::size_t first = line.find(',');
        const std::string rest = line.substr(first + 1);
        CHECK(rest == "0,0,0,0,0,0,ok");
    }
    CHECK(rows == 4);
}

TEST_CASE("sweeps are byte-identical across worker counts and repeats") {
    const Scenario* base = find_scenario("fig1-blue");
    auto cfg = config_from_scenario(*base);
    cfg.scenario.grid.steps = 24;
    std::ostringstream a, b, c;
    cfg.threads = 1;
    run_sweep(cfg, Method::Closed, a);
    cfg.threads = 4;
    run_sweep(cfg, Method::Closed, b);
    run_sweep(cfg, Method::Closed, c);
    CHECK(a.str() == b.str());
    CHECK(b.str() == c.str());
    CHECK(a.str().find("unconverged") == std::string::npos);
}

TEST_CASE("em sweeps run on the Z axis") {
    const Scenario* base = find_scenario("fig4-chi20");
    auto cfg = config_from_scenario(*base);
    cfg.scenario.grid.steps = 5;
    cfg.numerics.sphere_polar_order = cfg.numerics.sphere_azimuth_order = 8;
    std::ostringstream out;
    CHECK(run_sweep(cfg, Method::Closed, out) == 0);
    CHECK(out.str().rfind("Z,", 0) == 0);
    // series method runs on the same config
    std::ostringstream out2;
    CHECK(run_sweep(cfg, Method::Series, out2) == 0);
    CHECK(out2.str().rfind("Z,", 0) == 0);
}

TEST_CASE("series method is rejected outside the em field") {
    const Scenario* base = find_scenario("fig1-blue");
    auto cfg = config_from_scenario(*base);
    std::ostringstream out;
    CHECK_THROWS_AS(run_sweep(cfg, Method::Series, out), std::invalid_argument);
}

TEST_CASE("non-convergence yields exit code 2 with flagged rows still written") {
    auto cfg = config_from_scenario(*find_scenario("disks"));
    cfg.scenario.grid = {0.05, 0.06, 2, true, false};
    cfg.numerics.l_max = 2;  // hopeless at this temperature
    cfg.numerics.body2d_order = 8;
    std::ostringstream out;
    CHECK(run_sweep(cfg, Method::Closed, out) == 2);
    const std::string csv = out.str();
    CHECK(csv.find("unconverged") != std::string::npos);
    // both data rows are present
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("sweep in SI nm/K units") {
    const auto cfg = parse(R"(
[system]
field = scalar1d
units = si-nm-k
[geometry]
a = 0
b = 2
c = 10
d = 14
[material]
chi1 = 1
chi2 = 1
[temperature]
min = 100
max = 600
steps = 3
scale = linear
)");
    std::ostringstream out;
    CHECK(run_sweep(cfg, Method::Closed, out) == 0);
    CHECK(out.str().find("unconverged") == std::string::npos);
}

TEST_CASE("oracle sweep on a small 1d grid matches the closed sweep loosely") {
    const Scenario* base = find_scenario("fig2-orange");
    auto cfg = config_from_scenario(*base);
    cfg.scenario.grid = {0.1, 1.0, 3, true, false};
    std::ostringstream closed, ora;
    CHECK(run_sweep(cfg, Method::Closed, closed) == 0);
    CHECK(run_sweep(cfg, Method::Oracle, ora) == 0);
    CHECK(closed.str() != ora.str());  // different computational routes
    // compare the E_total column of the last row
    auto last_row_field = [](const std::string& csv, int field) {
        const auto pos = csv.find_last_of('\n', csv.size() - 2);
        std::istringstream row(csv.substr(pos + 1));
        std::string cell;
        for (int i = 0; i <= field; ++i) std::getline(row, cell, ',');
        return std::stod(cell);
    };
    CHECK(last_row_field(closed.str(), 3) ==
          doctest::Approx(last_row_field(ora.str(), 3)).epsilon(1e-7));
}
