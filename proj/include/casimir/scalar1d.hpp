#pragma once

#include "casimir/geometry.hpp"
#include "casimir/thermo.hpp"
#include "casimir/units.hpp"

namespace casimir::scalar1d {

/// Free energy of two ribbons in the (1+1)D massless scalar field at
/// temperature T, split into the chi^2 self terms and the chi1*chi2
/// interaction term.  Closed polylog resummation of the Matsubara series:
///   E_self = -(chi1^2 r'' + chi2^2 r') zeta(3) / (4 gamma^3 T^2)
///   E_int  = -chi1 chi2 / (8 gamma^4 T^3) * [Li4(z1)+Li4(z2)-Li4(z3)-Li4(z4)]
/// with z_i = exp(-2 gamma T d_i) on the four endpoint distances
/// d = (r+r'+r'', r-r'-r'', r-r'+r'', r+r'-r'').
struct EnergyParts {
    double self_energy;
    double interaction;
    double total() const { return self_energy + interaction; }
};

EnergyParts free_energy(const geom::RibbonPair& pair, double temperature, const UnitSystem& units);

double entropy_self(const geom::RibbonPair& pair, double temperature, const UnitSystem& units);
double entropy_interaction(const geom::RibbonPair& pair, double temperature, const UnitSystem& units);
/// S = -dE/dT of free_energy, in closed form.
double entropy(const geom::RibbonPair& pair, double temperature, const UnitSystem& units);

/// U = -T^2 d/dT(E/T) in closed form; satisfies U = E + T S identically.
double internal_energy(const geom::RibbonPair& pair, double temperature, const UnitSystem& units);

/// F = dE/dr at fixed widths (only the interaction part depends on r).
double force(const geom::RibbonPair& pair, double temperature, const UnitSystem& units);

/// -dE/dr: the force acting on body 2 along +r in the mechanical sign
/// convention (negative = attraction).
double force_on_body(const geom::RibbonPair& pair, double temperature, const UnitSystem& units);

/// Full state point (E parts, S, U, F).
thermo::ThermoPoint evaluate(const geom::RibbonPair& pair, double temperature,
                             const UnitSystem& units);

} // namespace casimir::scalar1d
