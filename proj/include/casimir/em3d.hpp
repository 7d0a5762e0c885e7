#pragma once

#include "casimir/geometry.hpp"
#include "casimir/thermo.hpp"
#include "casimir/units.hpp"

namespace casimir::em3d {

/// Trace kernel of the electromagnetic two-body energy,
///   h(nu, s) = e^{-2 nu s} / (8 pi^2) *
///              [nu^4/s^2 + 2 nu^3/s^3 + 5 nu^2/s^4 + 6 nu/s^5 + 3/s^6]
/// (natural units, c = 1).  Equals the full contraction G0_ij G0_ji of the
/// free dyadic Green's function for disjoint points; h(0, s) = 3/(8 pi^2 s^6).
double kernel_h(double nu, double s);

/// sum_{l>=0} l^m q^l for 0 <= m <= 5 and 0 <= q < 1 (closed rational forms).
double power_sum(int m, double q);

/// Closed Matsubara resummation of -T sum_l h(nu_l, s) per unit chi product,
/// and its exact temperature derivatives:
///   E(s,T), S = -dE/dT, U = E + T S.
double free_energy_kernel(double s, double temperature, const UnitSystem& units);
double entropy_kernel(double s, double temperature, const UnitSystem& units);
double internal_energy_kernel(double s, double temperature, const UnitSystem& units);

struct SphereNumerics {
    int polar_order = 24;
    int azimuth_order = 24;
    double fd_step_rel = 1e-4;
};

/// Two spherical shells: quadrature of the closed kernels over both surfaces
/// (with the a^2 b^2 surface Jacobians).  Force is dE/dR.
thermo::ThermoPoint two_sphere_closed(const geom::SpherePair& pair, double temperature,
                                      const UnitSystem& units, const SphereNumerics& numerics = {});

/// Truncated series forms of E, S, U for two shells, evaluated with the P_p
/// geometric factors.  These implement the published truncated expansions
/// as stated; they are claims to be compared against the closed/oracle
/// route, not derived from it (see the validation report).
double free_energy_series(const geom::SpherePair& pair, double temperature,
                          const UnitSystem& units);
double entropy_series(const geom::SpherePair& pair, double temperature, const UnitSystem& units);
double internal_energy_series(const geom::SpherePair& pair, double temperature,
                              const UnitSystem& units);

/// Z = 4 pi R T axis used by the sphere-pair scans.
double z_from_temperature(const geom::SpherePair& pair, double temperature);
double temperature_from_z(const geom::SpherePair& pair, double z);

} // namespace casimir::em3d
