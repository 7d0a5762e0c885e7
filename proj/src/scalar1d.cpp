#include "casimir/scalar1d.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "casimir/specfun.hpp"

namespace casimir::scalar1d {

namespace {

struct Combos {
    // endpoint distances d-a, c-b, c-a, d-b expressed as r +- r' +- r''
    std::array<double, 4> d;
    // signs of the four interaction terms
    static constexpr std::array<double, 4> tau{1.0, 1.0, -1.0, -1.0};
};

Combos combos(const geom::RibbonPair& p) {
    const double r = p.center_distance(), rp = p.half_width2(), rpp = p.half_width1();
    return {{{r + rp + rpp, r - rp - rpp, r - rp + rpp, r + rp - rpp}}};
}

void check_temperature(double t) {
    if (!(t > 0.0)) throw std::domain_error("scalar1d: temperature must be positive");
}

double self_coefficient(const geom::RibbonPair& p) {
    return p.chi1 * p.chi1 * p.half_width1() + p.chi2 * p.chi2 * p.half_width2();
}

// sum_i tau_i Li_s(exp(-2 gamma T d_i)), optionally weighted by d_i
double polylog_combo(const Combos& c, int s, double gt, bool weight_by_d) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double z = std::exp(-2.0 * gt * c.d[i]);
        double term = Combos::tau[i] * specfun::polylog(s, z);
        if (weight_by_d) term *= c.d[i];
        sum += term;
    }
    return sum;
}

} // namespace

EnergyParts free_energy(const geom::RibbonPair& pair, double temperature, const UnitSystem& units) {
    check_temperature(temperature);
    const double g = units.gamma, t = temperature;
    const double zeta3 = specfun::zeta(3);
    EnergyParts parts;
    parts.self_energy = -self_coefficient(pair) * zeta3 / (4.0 * g * g * g * t * t);
    const Combos c = combos(pair);
    const double l4 = polylog_combo(c, 4, g * t, false);
    parts.interaction = -pair.chi1 * pair.chi2 / (8.0 * g * g * g * g * t * t * t) * l4;
    return parts;
}

double entropy_self(const geom::RibbonPair& pair, double temperature, const UnitSystem& units) {
    check_temperature(temperature);
    const double g = units.gamma, t = temperature;
    return -self_coefficient(pair) * specfun::zeta(3) / (2.0 * g * g * g * t * t * t);
}

double entropy_interaction(const geom::RibbonPair& pair, double temperature,
                           const UnitSystem& units) {
    check_temperature(temperature);
    const double g = units.gamma, t = temperature;
    const Combos c = combos(pair);
    const double l4 = polylog_combo(c, 4, g * t, false);
    const double m3 = polylog_combo(c, 3, g * t, true);
    return -pair.chi1 * pair.chi2 / (8.0 * g * g * g * g * t * t * t * t) *
           (3.0 * l4 + 2.0 * g * t * m3);
}

double entropy(const geom::RibbonPair& pair, double temperature, const UnitSystem& units) {
    return entropy_self(pair, temperature, units) +
           entropy_interaction(pair, temperature, units);
}

double internal_energy(const geom::RibbonPair& pair, double temperature, const UnitSystem& units) {
    check_temperature(temperature);
    const double g = units.gamma, t = temperature;
    const double u_self = -3.0 * self_coefficient(pair) * specfun::zeta(3) / (4.0 * g * g * g * t * t);
    const Combos c = combos(pair);
    const double l4 = polylog_combo(c, 4, g * t, false);
    const double m3 = polylog_combo(c, 3, g * t, true);
    const double chi = pair.chi1 * pair.chi2;
    const double u_int = -chi / (2.0 * g * g * g * g * t * t * t) * l4 -
                         chi / (4.0 * g * g * g * t * t) * m3;
    return u_self + u_int;
}

double force(const geom::RibbonPair& pair, double temperature, const UnitSystem& units) {
    check_temperature(temperature);
    const double g = units.gamma, t = temperature;
    const Combos c = combos(pair);
    const double l3 = polylog_combo(c, 3, g * t, false);
    return pair.chi1 * pair.chi2 / (4.0 * g * g * g * t * t) * l3;
}

double force_on_body(const geom::RibbonPair& pair, double temperature, const UnitSystem& units) {
    return -force(pair, temperature, units);
}

thermo::ThermoPoint evaluate(const geom::RibbonPair& pair, double temperature,
                             const UnitSystem& units) {
    thermo::ThermoPoint pt;
    pt.temperature = temperature;
    const EnergyParts e = free_energy(pair, temperature, units);
    pt.energy_self = e.self_energy;
    pt.energy_interaction = e.interaction;
    pt.entropy = entropy(pair, temperature, units);
    pt.internal_energy = internal_energy(pair, temperature, units);
    pt.force = force(pair, temperature, units);
    pt.has_force = true;
    return pt;
}

} // namespace casimir::scalar1d
