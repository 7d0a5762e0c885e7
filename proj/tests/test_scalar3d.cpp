#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "casimir/oracle.hpp"
#include "casimir/scalar3d.hpp"
#include "casimir/scenarios.hpp"
#include "casimir/variants.hpp"

using namespace casimir;

namespace {
const UnitSystem kUnits = UnitSystem::natural();
const oracle::Numerics kNum{};

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}

TEST_CASE("geometric series identity at gamma T s = 1") {
    // sum_l exp(-2 l) against 1/(1 - exp(-2))
    double direct = 0.0;
    for (int l = 0; l < 60; ++l) direct += std::exp(-2.0 * l);
    CHECK(direct == doctest::Approx(1.0 / (1.0 - std::exp(-2.0))).epsilon(1e-14));
    // and the kernel itself at matching arguments
    const double g = kUnits.gamma;
    const double s = 1.0, t = 1.0 / g;  // gamma T s = 1
    const double kernel = scalar3d::free_energy_kernel(s, t, kUnits);
    CHECK(kernel == doctest::Approx(-t / (16.0 * std::numbers::pi) * direct).epsilon(1e-12));
}

TEST_CASE("kernel tail: massless 1/s^2 behaviour at large separation") {
    const double t = 0.8;
    const double far = 50.0;
    const double want = -t / (16.0 * std::numbers::pi * far * far);
    CHECK(scalar3d::free_energy_kernel(far, t, kUnits) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("closed kernel matches the direct Matsubara sum at random points") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10; ++i) {
        const double s = uniform(rng, 0.3, 8.0);
        const double t = uniform(rng, 0.05, 2.0);
        const double closed = scalar3d::free_energy_kernel(s, t, kUnits);
        const double direct = oracle::free_energy_3d_kernel(s, t, kUnits, kNum);
        CHECK(closed == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("kernel thermodynamics: U = E + T S at 1e-8 and S = -dE/dT") {
    for (double s : {0.5, 2.0, 7.0})
        for (double t : {0.1, 0.5, 2.0}) {
            const double e = scalar3d::free_energy_kernel(s, t, kUnits);
            const double sv = scalar3d::entropy_kernel(s, t, kUnits);
            const double u = scalar3d::internal_energy_kernel(s, t, kUnits);
            CHECK(u == doctest::Approx(e + t * sv).epsilon(1e-8));
            auto e_of_t = [&](double tt) { return scalar3d::free_energy_kernel(s, tt, kUnits); };
            CHECK(sv == doctest::Approx(thermo::entropy_from_free_energy(e_of_t, t).value)
                            .epsilon(1e-8));
        }
}

TEST_CASE("entropy kernel high-temperature limit") {
    // exponentials die out: S -> (1/16 pi s^2) * 1 per unit chi product
    const double s = 1.0, t = 50.0;
    CHECK(scalar3d::entropy_kernel(s, t, kUnits) ==
          doctest::Approx(1.0 / (16.0 * std::numbers::pi * s * s)).epsilon(1e-10));
}

TEST_CASE("low-T series matches the exact kernel deep in the expansion regime") {
    const double s = 2.0;
    const double t = 0.1 / (kUnits.gamma * s);  // gamma T s = 0.1
    const auto eval = scalar3d::entropy_kernel_series(s, t, kUnits, 4);
    const double exact = scalar3d::entropy_kernel(s, t, kUnits);
    CHECK(eval.in_regime);
    CHECK(eval.value == doctest::Approx(exact).epsilon(1e-6));
}

TEST_CASE("low-T series error decreases monotonically with the term count") {
    const double s = 1.0;
    const double t = 0.2 / (kUnits.gamma * s);  // gamma T s = 0.2
    const double exact = scalar3d::entropy_kernel(s, t, kUnits);
    double prev_err = 1e300;
    for (int n = 1; n <= 4; ++n) {
        const auto eval = scalar3d::entropy_kernel_series(s, t, kUnits, n);
        const double err = std::abs(eval.value - exact);
        CHECK(err < prev_err);
        prev_err = err;
    }
}

TEST_CASE("low-T series error is bounded by the first omitted term") {
    for (double y : {0.05, 0.1, 0.2, 0.3}) {
        const double s = 1.7;
        const double t = y / (kUnits.gamma * s);
        const double exact = scalar3d::entropy_kernel(s, t, kUnits);
        for (int n = 2; n <= 5; ++n) {
            const auto eval = scalar3d::entropy_kernel_series(s, t, kUnits, n);
            // the 1e-15 floor absorbs double roundoff once the truncation
            // error falls below machine precision
            CHECK(std::abs(eval.value - exact) <=
                  eval.first_omitted * 1.05 + 1e-15 * std::abs(exact));
        }
    }
}

TEST_CASE("series coefficients agree with an independent numerical expansion") {
    // Extract the y^3 and y^5 coefficients of 16 pi s^2 S(y) - 1/2 - y/3 by
    // Richardson-style fits at small y; they must reproduce -2/45 and 2/315.
    const double s = 1.0;
    auto sigma = [&](double y) {
        const double t = y / (kUnits.gamma * s);
        return scalar3d::entropy_kernel(s, t, kUnits) * 16.0 * std::numbers::pi * s * s;
    };
    auto rest = [&](double y) { return sigma(y) - 0.5 - y / 3.0; };
    const double y0 = 0.02;
    const double c3_est = rest(y0) / (y0 * y0 * y0);
    CHECK(c3_est == doctest::Approx(-2.0 / 45.0).epsilon(2e-3));
    auto rest5 = [&](double y) { return rest(y) + 2.0 / 45.0 * y * y * y; };
    const double y1 = 0.08;
    const double c5_est = rest5(y1) / std::pow(y1, 5);
    CHECK(c5_est == doctest::Approx(2.0 / 315.0).epsilon(1e-2));
    // and the tabulated rationals themselves
    const auto& coeffs = scalar3d::entropy_series_coefficients();
    CHECK(coeffs[0].coefficient == doctest::Approx(0.5));
    CHECK(coeffs[1].coefficient == doctest::Approx(1.0 / 3.0));
    CHECK(coeffs[2].coefficient == doctest::Approx(-2.0 / 45.0));
    CHECK(coeffs[3].coefficient == doctest::Approx(2.0 / 315.0));
    CHECK(coeffs[4].coefficient == doctest::Approx(-4.0 / 4725.0));
}

TEST_CASE("two-sphere: chi product of zero gives zero") {
    const geom::SpherePair p(1, 2, 10, 0.0, 2.6);
    scalar3d::SphereNumerics sn;
    sn.polar_order = sn.azimuth_order = 12;
    const auto res = scalar3d::two_sphere(p, 0.05, kUnits, sn);
    CHECK(res.point.energy_total() == 0.0);
    CHECK(res.point.entropy == 0.0);
    CHECK(res.entropy_series == 0.0);
}

TEST_CASE("two-sphere point limit: series collapses onto the single-separation kernel") {
    // tiny hats: the series reduces to (4 pi)^2 a^2 b^2 x kernel-series at s = R
    const geom::SpherePair p(0.001, 0.001, 10.0, 1.0, 1.0);
    const double t = 0.02 / (kUnits.gamma * 10.0);
    scalar3d::SphereNumerics sn;
    sn.polar_order = sn.azimuth_order = 12;
    const auto res = scalar3d::two_sphere(p, t, kUnits, sn);
    const double weights = std::pow(4.0 * std::numbers::pi, 2) * std::pow(0.001, 4);
    const double kernel_series = scalar3d::entropy_kernel_series(10.0, t, kUnits, 4).value;
    CHECK(res.entropy_series == doctest::Approx(weights * kernel_series).epsilon(1e-6));
    CHECK(res.point.entropy == doctest::Approx(weights * kernel_series).epsilon(1e-5));
}

TEST_CASE("two-sphere series matches the quadrature-exact entropy in regime") {
    for (const char* name : {"fig3-blue", "fig3-red"}) {
        const Scenario& sc = *find_scenario(name);
        const geom::SpherePair& p = *sc.spheres;
        scalar3d::SphereNumerics sn;
        sn.polar_order = sn.azimuth_order = 24;
        for (double x : {0.1, 0.3}) {
            const double t = x / (kUnits.gamma * p.gap());
            const auto res = scalar3d::two_sphere(p, t, kUnits, sn);
            CHECK(res.entropy_series == doctest::Approx(res.point.entropy).epsilon(1e-3));
        }
    }
}

TEST_CASE("two-sphere quadrature-exact entropy is positive across the scan") {
    const Scenario& sc = *find_scenario("fig3-blue");
    const geom::SpherePair& p = *sc.spheres;
    scalar3d::SphereNumerics sn;
    sn.polar_order = sn.azimuth_order = 16;
    for (double t : SweepGrid{0.001, 10.0, 20, true, false}.points())
        CHECK(scalar3d::two_sphere_entropy_exact(p, t, kUnits, sn) > 0.0);
}

TEST_CASE("two-sphere U matches -T^2 d/dT(E/T) of the quadrature energy") {
    const Scenario& sc = *find_scenario("fig3-blue");
    const geom::SpherePair& p = *sc.spheres;
    scalar3d::SphereNumerics sn;
    sn.polar_order = sn.azimuth_order = 16;
    const double t = 0.05;
    const auto res = scalar3d::two_sphere(p, t, kUnits, sn);
    const auto grid = geom::sphere_pair_nodes(p, 16, 16);
    auto e_of_t = [&](double tt) {
        double sum = 0.0;
        for (std::size_t j = 0; j < grid.distance.size(); ++j)
            sum += grid.weight[j] * scalar3d::free_energy_kernel(grid.distance[j], tt, kUnits);
        return p.chi1 * p.chi2 * sum;
    };
    const double u_fd = thermo::internal_energy_from_free_energy(e_of_t, t).value;
    CHECK(res.point.internal_energy == doctest::Approx(u_fd).epsilon(1e-4));
}

TEST_CASE("two-sphere free energy agrees with the direct-sum oracle") {
    const Scenario& sc = *find_scenario("fig3-blue");
    const geom::SpherePair& p = *sc.spheres;
    scalar3d::SphereNumerics sn;
    sn.polar_order = kNum.sphere_polar_order;
    sn.azimuth_order = kNum.sphere_azimuth_order;
    for (double t : {0.01, 0.1, 1.0}) {
        const auto res = scalar3d::two_sphere(p, t, kUnits, sn);
        const double direct = oracle::free_energy_sphere_3d(p, t, kUnits, kNum);
        CHECK(res.point.energy_total() == doctest::Approx(direct).epsilon(1e-8));
    }
}

TEST_CASE("two-sphere quantities are symmetric under swapping the spheres") {
    const geom::SpherePair ab(1.0, 2.0, 10.0, 3.0, 0.7);
    const geom::SpherePair ba(2.0, 1.0, 10.0, 0.7, 3.0);
    scalar3d::SphereNumerics sn;
    sn.polar_order = sn.azimuth_order = 16;
    const double t = 0.05;
    const auto pa = scalar3d::two_sphere(ab, t, kUnits, sn);
    const auto pb = scalar3d::two_sphere(ba, t, kUnits, sn);
    CHECK(pa.point.energy_total() == doctest::Approx(pb.point.energy_total()).epsilon(1e-12));
    CHECK(pa.point.entropy == doctest::Approx(pb.point.entropy).epsilon(1e-12));
    CHECK(pa.entropy_series == doctest::Approx(pb.entropy_series).epsilon(1e-12));
}

TEST_CASE("published low-T coefficients deviate from the exact kernel") {
    // the published variant keeps a 1/(gamma T s) term the exact kernel does
    // not have; the validation report records this as a documented deviation
    const double s = 1.0;
    const double t = 0.1 / (kUnits.gamma * s);
    const double exact = scalar3d::entropy_kernel(s, t, kUnits);
    const double published = variants::entropy_3d_kernel_series_published(s, t, kUnits);
    CHECK(std::abs(published - exact) / std::abs(exact) > 0.5);
}
