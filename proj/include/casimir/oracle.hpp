#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/scalar2d.hpp"
#include "casimir/thermo.hpp"
#include "casimir/units.hpp"

namespace casimir::oracle {

/// Knobs for the brute-force reference evaluations.  l_max is raised
/// automatically (x10, capped at 2e6) whenever gamma*T*gap < 0.05.
struct Numerics {
    long l_max = 100000;
    double tol = 1e-13;
    int sphere_polar_order = 24;
    int sphere_azimuth_order = 24;
    int body2d_order = 24;
    double fd_step_rel = 1e-4;
    std::uint64_t mc_samples = 10000000;
    std::uint64_t mc_seed = 0x5eed0cae5a12dULL;
};

long effective_l_max(const Numerics& numerics, double gamma, double temperature, double gap);

/// Direct Matsubara summation of the defining ribbon series (self terms
/// 1/(4 a^3) and the literal product form of the cross term), no polylogs.
double free_energy_1d(const geom::RibbonPair& pair, double temperature, const UnitSystem& units,
                      const Numerics& numerics);

/// The chi1*chi2 cross part of the ribbon series alone.  The separation
/// derivative is differenced on this piece, away from the much larger
/// r-independent self terms.
double free_energy_1d_interaction(const geom::RibbonPair& pair, double temperature,
                                  const UnitSystem& units, const Numerics& numerics);

/// Direct l-sum of the (3+1)D point-pair series e^{-2 nu_l s} / s^2.
double free_energy_3d_kernel(double s, double temperature, const UnitSystem& units,
                             const Numerics& numerics);

/// Direct l-sum of the electromagnetic kernel h(nu_l, s).
double free_energy_em_kernel(double s, double temperature, const UnitSystem& units,
                             const Numerics& numerics);

/// Direct l-sum + surface quadrature for sphere pairs (scalar / EM field).
double free_energy_sphere_3d(const geom::SpherePair& pair, double temperature,
                             const UnitSystem& units, const Numerics& numerics);
double free_energy_sphere_em(const geom::SpherePair& pair, double temperature,
                             const UnitSystem& units, const Numerics& numerics);

/// Component-by-component contraction G0_ij G0_ji of the free electromagnetic
/// dyadic Green's function at imaginary frequency (independent check of
/// em3d::kernel_h).
double em_dyadic_contraction(double nu, double s);

/// Monte-Carlo evaluation of the (2+1)D double area integral with a fixed
/// seed.  The node sample is drawn once per call sequence, so repeated calls
/// with the same numerics are bit-reproducible.
struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

McEstimate free_energy_2d_mc(const scalar2d::PlanarBodyPair& pair, double temperature,
                             const UnitSystem& units, const Numerics& numerics);

/// Angular quadrature oracle for the P_p factors (reduced 3D tensor rule).
double p_factor_quadrature(int p, const geom::SpherePair& pair, int order = 64);

/// Finite-difference thermodynamics on top of any free-energy function:
/// S and U by Richardson central differences in T.
thermo::ThermoPoint thermo_from_free_energy(const std::function<double(double)>& free_energy,
                                            double temperature, double fd_step_rel);

/// Brute-force state points per field (energy by direct summation, S/U by
/// finite differences, force by differencing in the separation).
thermo::ThermoPoint thermo_1d(const geom::RibbonPair& pair, double temperature,
                              const UnitSystem& units, const Numerics& numerics);
thermo::ThermoPoint thermo_sphere_3d(const geom::SpherePair& pair, double temperature,
                                     const UnitSystem& units, const Numerics& numerics);
thermo::ThermoPoint thermo_sphere_em(const geom::SpherePair& pair, double temperature,
                                     const UnitSystem& units, const Numerics& numerics);
thermo::ThermoPoint thermo_2d_mc(const scalar2d::PlanarBodyPair& pair, double temperature,
                                 const UnitSystem& units, const Numerics& numerics);

/// One comparison record of the validation suite.
struct Report {
    std::string scenario;
    std::string quantity;
    double reference = 0.0;   // oracle / ground-truth value
    double value = 0.0;       // closed-form or claimed value
    double deviation = 0.0;   // |value - reference| / max(|reference|, floor)
    std::string status;       // "pass" | "fail" | "documented-deviation"
    std::string note;
    // convergence metadata of the oracle run behind the record
    long l_max = 0;
    int quadrature_order = 0;
    double fd_step_rel = 0.0;
};

/// Builds a record, classifying pass/fail against tol; records flagged as
/// claims become "documented-deviation" instead of "fail" when they miss.
Report compare(const std::string& scenario, const std::string& quantity, double reference,
               double value, double tol, bool claim = false, const std::string& note = "");

/// Runs the shipped validation suite.
std::vector<Report> validate_all(const Numerics& numerics = {});

/// One line per record: scenario quantity reference value deviation status [note].
void write_report(const std::vector<Report>& reports, std::ostream& out);

int count_failures(const std::vector<Report>& reports);

} // namespace casimir::oracle
