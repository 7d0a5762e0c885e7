#include "casimir/em3d.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/quadrature.hpp"

namespace casimir::em3d {

namespace {

constexpr double kPi = std::numbers::pi;
// numerators of the five kernel terms, index = power of nu
constexpr std::array<double, 5> kTermCoeff{3.0, 6.0, 5.0, 2.0, 1.0};

void check_args(double s, double t) {
    if (!(s > 0.0)) throw std::domain_error("em3d: separation must be positive");
    if (!(t > 0.0)) throw std::domain_error("em3d: temperature must be positive");
}

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

} // namespace

double kernel_h(double nu, double s) {
    if (!(s > 0.0)) throw std::domain_error("em3d: separation must be positive");
    if (nu < 0.0) throw std::domain_error("em3d: frequency must be non-negative");
    const double inv_s = 1.0 / s;
    double poly = 0.0;
    double nupow = 1.0;
    for (int m = 0; m <= 4; ++m) {
        poly += kTermCoeff[m] * nupow * ipow(inv_s, 6 - m);
        nupow *= nu;
    }
    return std::exp(-2.0 * nu * s) / (8.0 * kPi * kPi) * poly;
}

double power_sum(int m, double q) {
    if (!(q >= 0.0 && q < 1.0)) throw std::domain_error("power_sum: q must lie in [0,1)");
    const double om = 1.0 - q;
    switch (m) {
        case 0: return 1.0 / om;
        case 1: return q / (om * om);
        case 2: return q * (1.0 + q) / ipow(om, 3);
        case 3: return q * (1.0 + q * (4.0 + q)) / ipow(om, 4);
        case 4: return q * (1.0 + q * (11.0 + q * (11.0 + q))) / ipow(om, 5);
        case 5: return q * (1.0 + q * (26.0 + q * (66.0 + q * (26.0 + q)))) / ipow(om, 6);
        default: throw std::domain_error("power_sum: m must lie in [0,5]");
    }
}

namespace {

// E, S, U per point pair from the resummed l-sum.  With q = exp(-2 gamma T s)
// and Phi_m = power_sum(m, q):
//   E = -(1/8 pi^2) sum_m c_m s^{m-6} gamma^m T^{m+1} Phi_m
//   S = +(1/8 pi^2) sum_m c_m s^{m-6} gamma^m
//         [(m+1) T^m Phi_m - 2 gamma s T^{m+1} Phi_{m+1}]
//   U = +(1/8 pi^2) sum_m c_m s^{m-6} gamma^m T^{m+1}
//         [m Phi_m - 2 gamma s T Phi_{m+1}]
// S = -dE/dT and U = E + T S hold exactly, term by term.
struct KernelEval {
    double e, s, u;
};

KernelEval kernel_eval(double sep, double t, double gamma) {
    const double q = std::exp(-2.0 * gamma * t * sep);
    std::array<double, 6> phi;
    for (int m = 0; m <= 5; ++m) phi[m] = power_sum(m, q);
    const double inv_s = 1.0 / sep;
    double e = 0.0, s = 0.0, u = 0.0;
    double gpow = 1.0;   // gamma^m
    double tpow = t;     // T^{m+1}
    for (int m = 0; m <= 4; ++m) {
        const double am = kTermCoeff[m] * ipow(inv_s, 6 - m) * gpow;
        e -= am * tpow * phi[m];
        s += am * ((m + 1) * (tpow / t) * phi[m] - 2.0 * gamma * sep * tpow * phi[m + 1]);
        u += am * tpow * (m * phi[m] - 2.0 * gamma * sep * t * phi[m + 1]);
        gpow *= gamma;
        tpow *= t;
    }
    const double norm = 1.0 / (8.0 * kPi * kPi);
    return {e * norm, s * norm, u * norm};
}

} // namespace

double free_energy_kernel(double s, double temperature, const UnitSystem& units) {
    check_args(s, temperature);
    return kernel_eval(s, temperature, units.gamma).e;
}

double entropy_kernel(double s, double temperature, const UnitSystem& units) {
    check_args(s, temperature);
    return kernel_eval(s, temperature, units.gamma).s;
}

double internal_energy_kernel(double s, double temperature, const UnitSystem& units) {
    check_args(s, temperature);
    return kernel_eval(s, temperature, units.gamma).u;
}

thermo::ThermoPoint two_sphere_closed(const geom::SpherePair& pair, double temperature,
                                      const UnitSystem& units, const SphereNumerics& numerics) {
    check_args(pair.gap(), temperature);
    const auto grid = geom::sphere_pair_nodes(pair, numerics.polar_order, numerics.azimuth_order);
    const double chi = pair.chi1 * pair.chi2;
    quadrature::KahanAccumulator e, s, u;
    for (std::size_t j = 0; j < grid.distance.size(); ++j) {
        const KernelEval k = kernel_eval(grid.distance[j], temperature, units.gamma);
        e.add(grid.weight[j] * k.e);
        s.add(grid.weight[j] * k.s);
        u.add(grid.weight[j] * k.u);
    }
    thermo::ThermoPoint pt;
    pt.temperature = temperature;
    pt.energy_interaction = chi * e.value();
    pt.entropy = chi * s.value();
    pt.internal_energy = chi * u.value();

    const double big_r = pair.center_distance;
    const double h = numerics.fd_step_rel * big_r;
    auto e_at = [&](double r) {
        const auto g2 = geom::sphere_pair_nodes(pair.with_center_distance(r),
                                                numerics.polar_order, numerics.azimuth_order);
        quadrature::KahanAccumulator acc;
        for (std::size_t j = 0; j < g2.distance.size(); ++j)
            acc.add(g2.weight[j] * kernel_eval(g2.distance[j], temperature, units.gamma).e);
        return chi * acc.value();
    };
    const double d1 = (e_at(big_r + h) - e_at(big_r - h)) / (2.0 * h);
    const double d2 = (e_at(big_r + 0.5 * h) - e_at(big_r - 0.5 * h)) / h;
    pt.force = (4.0 * d2 - d1) / 3.0;
    pt.has_force = true;
    return pt;
}

namespace {

double series_prefactor(const geom::SpherePair& pair) {
    const double aabb = pair.radius_a * pair.radius_a * pair.radius_b * pair.radius_b;
    return pair.chi1 * pair.chi2 * aabb * (4.0 * kPi) * (4.0 * kPi);
}

} // namespace

double free_energy_series(const geom::SpherePair& pair, double temperature,
                          const UnitSystem& units) {
    check_args(pair.gap(), temperature);
    const double g = units.gamma, t = temperature, R = pair.center_distance;
    const double ah = pair.a_hat(), bh = pair.b_hat();
    const double gt = g * t;
    const double bracket =
        55.0 / gt * std::pow(R, -7) * geom::detail::p_factor_any(-7, ah, bh) +
        1.5 * std::pow(R, -6) * geom::p_factor(-6, pair) -
        0.25 * gt * std::pow(R, -5) * geom::p_factor(-5, pair) -
        ipow(gt, 3) / 240.0 * std::pow(R, -3) * geom::p_factor(-3, pair) +
        73.0 * ipow(gt, 5) / 30240.0 / R * geom::p_factor(-1, pair) -
        197.0 * ipow(gt, 7) / 352800.0 * R * geom::p_factor(1, pair);
    return -t * series_prefactor(pair) * bracket;
}

double entropy_series(const geom::SpherePair& pair, double temperature, const UnitSystem& units) {
    check_args(pair.gap(), temperature);
    // In natural units (gamma = 2 pi) the coefficients below reduce to the
    // published pi-power form: gamma/2 = pi, gamma^3/60 = 2 pi^3/15,
    // gamma^5/5040 = 2 pi^5/315, gamma^7/256 = pi^7/2.
    const double g = units.gamma, t = temperature, R = pair.center_distance;
    const double bracket =
        1.5 * std::pow(R, -6) * geom::p_factor(-6, pair) -
        0.5 * g * t * std::pow(R, -5) * geom::p_factor(-5, pair) -
        ipow(g * t, 3) / 60.0 * std::pow(R, -3) * geom::p_factor(-3, pair) +
        ipow(g * t, 5) / 5040.0 / R * geom::p_factor(-1, pair) -
        ipow(g * t, 7) / 256.0 * R * geom::p_factor(1, pair);
    return -series_prefactor(pair) * bracket;
}

double internal_energy_series(const geom::SpherePair& pair, double temperature,
                              const UnitSystem& units) {
    check_args(pair.gap(), temperature);
    const double g = units.gamma, t = temperature, R = pair.center_distance;
    const double bracket =
        55.0 / g * std::pow(R, -7) * geom::detail::p_factor_any(-7, pair.a_hat(), pair.b_hat()) +
        0.25 * g * std::pow(R, -5) * geom::p_factor(-5, pair) * t * t +
        ipow(g, 3) / 80.0 * std::pow(R, -3) * geom::p_factor(-3, pair) * ipow(t, 4) -
        73.0 * ipow(g, 5) / 6048.0 / R * geom::p_factor(-1, pair) * ipow(t, 6);
    return series_prefactor(pair) * bracket;
}

double z_from_temperature(const geom::SpherePair& pair, double temperature) {
    return 4.0 * kPi * pair.center_distance * temperature;
}

double temperature_from_z(const geom::SpherePair& pair, double z) {
    return z / (4.0 * kPi * pair.center_distance);
}

} // namespace casimir::em3d
