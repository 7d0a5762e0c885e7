#include "casimir/scalar3d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/quadrature.hpp"

namespace casimir::scalar3d {

namespace {

constexpr double kPi = std::numbers::pi;

void check_args(double s, double t) {
    if (!(s > 0.0)) throw std::domain_error("scalar3d: separation must be positive");
    if (!(t > 0.0)) throw std::domain_error("scalar3d: temperature must be positive");
}

// x/(e^x - 1) pieces shared by the kernels; u = e^{-x}
struct BoseFactors {
    double f;  // 1/(1-u)
    double g;  // x u/(1-u)^2
};

BoseFactors bose(double x) {
    const double em = -std::expm1(-x);  // 1 - e^{-x}, accurate for small x
    const double u = std::exp(-x);
    return {1.0 / em, x * u / (em * em)};
}

} // namespace

double free_energy_kernel(double s, double temperature, const UnitSystem& units) {
    check_args(s, temperature);
    const double x = 2.0 * units.gamma * temperature * s;
    return -temperature / (16.0 * kPi * s * s) * bose(x).f;
}

double entropy_kernel(double s, double temperature, const UnitSystem& units) {
    check_args(s, temperature);
    const double x = 2.0 * units.gamma * temperature * s;
    const BoseFactors b = bose(x);
    return (b.f - b.g) / (16.0 * kPi * s * s);
}

double internal_energy_kernel(double s, double temperature, const UnitSystem& units) {
    check_args(s, temperature);
    const double x = 2.0 * units.gamma * temperature * s;
    return -temperature / (16.0 * kPi * s * s) * bose(x).g;
}

const std::vector<SeriesTerm>& entropy_series_coefficients() {
    // 1/2 + (1/2) d/dy [y coth y]: coefficients 2^{2n-1} B_{2n} / (2n-1)!
    static const std::vector<SeriesTerm> terms = {
        {0, 0.5},
        {1, 1.0 / 3.0},
        {3, -2.0 / 45.0},
        {5, 2.0 / 315.0},
        {7, -4.0 / 4725.0},
        {9, 2.0 / 18711.0},
    };
    return terms;
}

SeriesEval entropy_kernel_series(double s, double temperature, const UnitSystem& units,
                                 int n_terms) {
    check_args(s, temperature);
    const auto& coeffs = entropy_series_coefficients();
    if (n_terms < 1 || n_terms >= static_cast<int>(coeffs.size()))
        throw std::domain_error("entropy_kernel_series: term count out of range");
    const double y = units.gamma * temperature * s;
    SeriesEval out;
    out.in_regime = y < 1.0;
    out.terms_used = n_terms;
    const double prefactor = 1.0 / (16.0 * kPi * s * s);
    double sum = 0.0;
    for (int i = 0; i < n_terms; ++i) sum += coeffs[i].coefficient * std::pow(y, coeffs[i].power);
    out.value = prefactor * sum;
    out.first_omitted =
        std::abs(prefactor * coeffs[n_terms].coefficient * std::pow(y, coeffs[n_terms].power));
    return out;
}

namespace {

thermo::ThermoPoint sphere_point(const geom::SpherePair& pair, double t,
                                 const UnitSystem& units, const SphereNumerics& num,
                                 const geom::SurfaceGrid& grid) {
    const double chi = pair.chi1 * pair.chi2;
    quadrature::KahanAccumulator e, s, u;
    for (std::size_t j = 0; j < grid.distance.size(); ++j) {
        const double sj = grid.distance[j], wj = grid.weight[j];
        const double x = 2.0 * units.gamma * t * sj;
        const double em = -std::expm1(-x);
        const double f = 1.0 / em;
        const double g = x * std::exp(-x) / (em * em);
        const double base = wj / (16.0 * kPi * sj * sj);
        e.add(-t * base * f);
        s.add(base * (f - g));
        u.add(-t * base * g);
    }
    thermo::ThermoPoint pt;
    pt.temperature = t;
    pt.energy_self = 0.0;
    pt.energy_interaction = chi * e.value();
    pt.entropy = chi * s.value();
    pt.internal_energy = chi * u.value();

    // force dE/dR by Richardson central differences in the center distance
    const double h = num.fd_step_rel * pair.center_distance;
    auto e_at = [&](double big_r) {
        const auto g2 = geom::sphere_pair_nodes(pair.with_center_distance(big_r),
                                                num.polar_order, num.azimuth_order);
        quadrature::KahanAccumulator acc;
        for (std::size_t j = 0; j < g2.distance.size(); ++j) {
            const double sj = g2.distance[j];
            const double x = 2.0 * units.gamma * t * sj;
            acc.add(-t * g2.weight[j] / (16.0 * kPi * sj * sj) / -std::expm1(-x));
        }
        return chi * acc.value();
    };
    const double d1 = (e_at(pair.center_distance + h) - e_at(pair.center_distance - h)) / (2.0 * h);
    const double d2 =
        (e_at(pair.center_distance + 0.5 * h) - e_at(pair.center_distance - 0.5 * h)) / h;
    pt.force = (4.0 * d2 - d1) / 3.0;
    pt.has_force = true;
    return pt;
}

} // namespace

TwoSphereResult two_sphere(const geom::SpherePair& pair, double temperature,
                           const UnitSystem& units, const SphereNumerics& numerics) {
    if (!(temperature > 0.0)) throw std::domain_error("scalar3d: temperature must be positive");
    const auto grid = geom::sphere_pair_nodes(pair, numerics.polar_order, numerics.azimuth_order);

    TwoSphereResult res;
    res.point = sphere_point(pair, temperature, units, numerics, grid);

    // P_p entropy series: integrating the kernel series term y^p / s^2 gives
    // (gamma T)^p (4 pi)^2 R^(p-2) P_{p-2} a^2 b^2 per unit chi product.
    const double chi = pair.chi1 * pair.chi2;
    const double aabb = pair.radius_a * pair.radius_a * pair.radius_b * pair.radius_b;
    const double R = pair.center_distance;
    const double gt = units.gamma * temperature;
    const double prefactor = chi * aabb * (4.0 * kPi) * (4.0 * kPi) / (16.0 * kPi);
    const auto& coeffs = entropy_series_coefficients();
    const int n_terms = 4;
    double sum = 0.0;
    res.expansion_terms.clear();
    for (int i = 0; i < n_terms; ++i) {
        const int p = coeffs[i].power;
        const double term_coeff = prefactor * coeffs[i].coefficient *
                                  std::pow(units.gamma, p) * std::pow(R, p - 2) *
                                  geom::p_factor(p - 2, pair);
        res.expansion_terms.emplace_back(p, term_coeff);
        sum += term_coeff * std::pow(temperature, p);
    }
    res.entropy_series = sum;
    {
        const int p = coeffs[n_terms].power;  // first omitted: needs P_5 via continuation
        res.entropy_series_error =
            std::abs(prefactor * coeffs[n_terms].coefficient * std::pow(gt, p) *
                     std::pow(R, p - 2) * geom::detail::p_factor_any(p - 2, pair.a_hat(), pair.b_hat()));
    }
    res.series_in_regime = gt * (R + pair.radius_a + pair.radius_b) < 1.0;
    return res;
}

double two_sphere_entropy_exact(const geom::SpherePair& pair, double temperature,
                                const UnitSystem& units, const SphereNumerics& numerics) {
    if (!(temperature > 0.0)) throw std::domain_error("scalar3d: temperature must be positive");
    const auto grid = geom::sphere_pair_nodes(pair, numerics.polar_order, numerics.azimuth_order);
    quadrature::KahanAccumulator acc;
    for (std::size_t j = 0; j < grid.distance.size(); ++j) {
        const double sj = grid.distance[j];
        const double x = 2.0 * units.gamma * temperature * sj;
        const double em = -std::expm1(-x);
        const double f = 1.0 / em;
        const double g = x * std::exp(-x) / (em * em);
        acc.add(grid.weight[j] * (f - g) / (16.0 * kPi * sj * sj));
    }
    return pair.chi1 * pair.chi2 * acc.value();
}

} // namespace casimir::scalar3d
