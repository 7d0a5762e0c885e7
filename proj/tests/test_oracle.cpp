#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "casimir/oracle.hpp"
#include "casimir/scalar1d.hpp"
#include "casimir/scenarios.hpp"

using namespace casimir;

namespace {
const UnitSystem kUnits = UnitSystem::natural();
}

TEST_CASE("degenerate constant free energy: S = 0, U = E") {
    auto constant = [](double) { return -2.5; };
    const auto pt = oracle::thermo_from_free_energy(constant, 0.8, 1e-4);
    CHECK(pt.entropy == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(pt.internal_energy == doctest::Approx(-2.5).epsilon(1e-9));
}

TEST_CASE("oracle reproduces the scalar1d closed forms") {
    const Scenario& sc = *find_scenario("fig1-blue");
    const geom::RibbonPair& p = *sc.ribbons;
    oracle::Numerics num;
    for (double t : {0.05, 0.4, 2.0}) {
        const auto ora = oracle::thermo_1d(p, t, kUnits, num);
        const auto cl = scalar1d::evaluate(p, t, kUnits);
        CHECK(cl.energy_total() == doctest::Approx(ora.energy_total()).epsilon(1e-8));
        CHECK(cl.energy_self == doctest::Approx(ora.energy_self).epsilon(1e-8));
        CHECK(cl.entropy == doctest::Approx(ora.entropy).epsilon(1e-4));
        CHECK(cl.internal_energy == doctest::Approx(ora.internal_energy).epsilon(1e-4));
        CHECK(cl.force == doctest::Approx(ora.force).epsilon(1e-6));
    }
}

TEST_CASE("auto-raised l_max in the deep low-temperature regime") {
    oracle::Numerics num;
    CHECK(oracle::effective_l_max(num, 2 * std::numbers::pi, 1.0, 1.0) == num.l_max);
    CHECK(oracle::effective_l_max(num, 2 * std::numbers::pi, 1e-5, 0.5) == num.l_max * 10);
}

TEST_CASE("compare() classifies pass, fail, and documented deviation") {
    const auto pass = oracle::compare("s", "q", 1.0, 1.0 + 1e-10, 1e-8);
    CHECK(pass.status == "pass");
    const auto fail = oracle::compare("s", "q", 1.0, 1.1, 1e-8);
    CHECK(fail.status == "fail");
    const auto claim = oracle::compare("s", "q", 1.0, 1.1, 1e-8, true, "known");
    CHECK(claim.status == "documented-deviation");
    CHECK(claim.deviation == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("negative control: a corrupted closed form fails the comparison") {
    const Scenario& sc = *find_scenario("fig1-blue");
    const geom::RibbonPair& p = *sc.ribbons;
    oracle::Numerics num;
    const double t = 0.4;
    const double reference = oracle::free_energy_1d(p, t, kUnits, num);
    const double corrupted = scalar1d::free_energy(p, t, kUnits).total() * 1.001;
    const auto rec = oracle::compare("fig1-blue", "free_energy_corrupted", reference, corrupted,
                                     1e-8);
    CHECK(rec.status == "fail");
}

TEST_CASE("report writer emits one record per line") {
    std::vector<oracle::Report> reports;
    reports.push_back(oracle::compare("a", "b", 1.0, 1.0, 1e-8));
    reports.push_back(oracle::compare("c", "d", 1.0, 2.0, 1e-8, true, "note text"));
    std::ostringstream out;
    oracle::write_report(reports, out);
    const std::string text = out.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    CHECK(text.find("a b ") == 0);
    CHECK(text.find("documented-deviation") != std::string::npos);
    CHECK(text.find("# note text") != std::string::npos);
    CHECK(oracle::count_failures(reports) == 0);
}

TEST_CASE("dyadic contraction static limit") {
    // nu -> 0 recovers 3/(8 pi^2 s^6)
    const double s = 1.7;
    const double want = 3.0 / (8.0 * std::pow(std::numbers::pi, 2) * std::pow(s, 6));
    CHECK(oracle::em_dyadic_contraction(0.0, s) == doctest::Approx(want).epsilon(1e-6));
}

TEST_CASE("validation suite passes on the shipped scenarios") {
    oracle::Numerics num;
    // trimmed settings keep this unit run quick; the acceptance suite and the
    // CLI run the full defaults
    num.mc_samples = 500000;
    num.sphere_polar_order = num.sphere_azimuth_order = 16;
    const auto reports = oracle::validate_all(num);
    CHECK(oracle::count_failures(reports) == 0);
    int passes = 0, claims = 0;
    for (const auto& r : reports) {
        if (r.status == "pass") ++passes;
        if (r.status == "documented-deviation") ++claims;
    }
    CHECK(passes >= 12);
    CHECK(claims >= 5);  // published variants really do deviate
}
