#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <numbers>
#include <vector>

#include "casimir/quadrature.hpp"

using namespace casimir::quadrature;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    for (int n : {2, 5, 16, 64}) {
        const Rule& r = gauss_legendre(n);
        // exact for degree <= 2n-1; check monomials
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double got = 0.0;
            for (int i = 0; i < n; ++i) got += r.weights[i] * std::pow(r.nodes[i], k);
            const double want = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
            CHECK(got == doctest::Approx(want).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("gauss-legendre integrates exp") {
    const Rule& r = gauss_legendre(20);
    double got = 0.0;
    for (int i = 0; i < 20; ++i) got += r.weights[i] * std::exp(r.nodes[i]);
    CHECK(got == doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("gauss-legendre weights sum to 2 and nodes are symmetric") {
    for (int n : {3, 17, 48}) {
        const Rule& r = gauss_legendre(n);
        double wsum = 0.0;
        for (double w : r.weights) wsum += w;
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
        for (int i = 0; i < n; ++i)
            CHECK(r.nodes[i] == doctest::Approx(-r.nodes[n - 1 - i]).epsilon(1e-13).scale(1.0));
    }
}

TEST_CASE("periodic angles integrate a smooth periodic function") {
    const auto a = periodic_angles(24);
    double got = 0.0;
    for (double psi : a) got += std::exp(std::cos(psi));
    got *= 2.0 * std::numbers::pi / 24;
    // 2 pi I0(1)
    CHECK(got == doctest::Approx(2.0 * std::numbers::pi * 1.2660658777520084).epsilon(1e-13));
}

TEST_CASE("kahan accumulator tames cancellation") {
    KahanAccumulator acc;
    acc.add(1e16);
    for (int i = 0; i < 10000; ++i) acc.add(0.1);
    acc.add(-1e16);
    CHECK(acc.value() == doctest::Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("parallel_for covers every index once, any worker count") {
    for (int threads : {1, 2, 8}) {
        std::vector<std::atomic<int>> hits(1000);
        parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i].fetch_add(1); });
        for (auto& h : hits) CHECK(h.load() == 1);
    }
}
