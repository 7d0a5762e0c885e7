#include "casimir/variants.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "casimir/specfun.hpp"

namespace casimir::variants {

namespace {

constexpr double kPi = std::numbers::pi;

struct Distances {
    double d1, d2, d3, d4;  // r+r'+r'', r-r'-r'', r-r'+r'', r+r'-r''
};

Distances distances(const geom::RibbonPair& p) {
    const double r = p.center_distance(), rp = p.half_width2(), rpp = p.half_width1();
    return {r + rp + rpp, r - rp - rpp, r - rp + rpp, r + rp - rpp};
}

} // namespace

double entropy_1d_log_form(const geom::RibbonPair& pair, double temperature,
                           const UnitSystem& units) {
    const double g = units.gamma, t = temperature;
    const auto [d1, d2, d3, d4] = distances(pair);
    const double self = -(pair.chi1 * pair.chi1 * pair.half_width1() +
                          pair.chi2 * pair.chi2 * pair.half_width2()) *
                        specfun::zeta(3) / std::pow(g * t, 3);
    auto li2 = [&](double d) { return specfun::polylog(2, std::exp(-2.0 * g * t * d)); };
    auto wlog = [&](double d) { return d * std::log1p(-std::exp(-2.0 * g * t * d)); };
    const double chi = pair.chi1 * pair.chi2;
    const double li2_part = chi / (2.0 * g * g * t * t) * (li2(d4) - li2(d1) - li2(d2) + li2(d3));
    const double log_part = -chi / (g * t) * (wlog(d4) - wlog(d1) - wlog(d2) + wlog(d3));
    return -(self + li2_part + log_part);
}

double force_1d_log_form(const geom::RibbonPair& pair, double temperature,
                         const UnitSystem& units) {
    const double g = units.gamma, t = temperature;
    const auto [d1, d2, d3, d4] = distances(pair);
    auto lg = [&](double d) { return std::log1p(-std::exp(-2.0 * g * t * d)); };
    return -pair.chi1 * pair.chi2 / (2.0 * g) * (-lg(d1) + lg(d3) + lg(d4) - lg(d2));
}

double internal_energy_1d_alt_signs(const geom::RibbonPair& pair, double temperature,
                                    const UnitSystem& units) {
    const double g = units.gamma, t = temperature;
    const auto [d1, d2, d3, d4] = distances(pair);
    auto li = [&](int s, double d) { return specfun::polylog(s, std::exp(-2.0 * g * t * d)); };
    const double chi = pair.chi1 * pair.chi2;
    const double self = 3.0 *
                        (pair.chi1 * pair.chi1 * pair.half_width1() +
                         pair.chi2 * pair.chi2 * pair.half_width2()) /
                        (4.0 * g * g * g * t * t);
    const double li4_part = chi / (2.0 * std::pow(g, 4) * std::pow(t, 3)) *
                            (li(4, d1) - li(4, d2) + li(4, d3) - li(4, d4));
    const double li3_part = -chi / (4.0 * std::pow(g, 3) * t * t) *
                            (-d1 * li(3, d1) - d2 * li(3, d2) - d3 * li(3, d3) - d4 * li(3, d4));
    return self + li4_part + li3_part;
}

double entropy_3d_kernel_series_published(double s, double temperature, const UnitSystem& units) {
    const double gt = units.gamma * temperature;
    const double bracket = 1.0 / (gt * s) + 0.5 + std::pow(gt, 3) * s / 45.0 -
                           4.0 * std::pow(gt, 5) * s * s * s / 945.0;
    return -bracket / (16.0 * kPi * s * s);
}

double two_sphere_entropy_series_published(const geom::SpherePair& pair, double temperature,
                                           const UnitSystem& units) {
    const double gt = units.gamma * temperature;
    const double R = pair.center_distance;
    const double pre = (4.0 * kPi) * (4.0 * kPi) / (16.0 * kPi) * pair.chi1 * pair.chi2 *
                       pair.radius_a * pair.radius_a * pair.radius_b * pair.radius_b;
    const double bracket =
        (1.0 / gt) * std::pow(R, -3) * geom::p_factor(-3, pair) +
        0.5 * std::pow(R, -2) * geom::p_factor(-2, pair) +
        std::pow(gt, 3) / 45.0 * R * geom::p_factor(1, pair) -
        4.0 / 945.0 * std::pow(gt, 5) * R * R * R * geom::p_factor(3, pair);
    return -pre * bracket;
}

} // namespace casimir::variants
