#pragma once

#include <utility>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/thermo.hpp"
#include "casimir/units.hpp"

namespace casimir::scalar3d {

/// Per point-pair kernels for the (3+1)D massless scalar field, per unit
/// chi1*chi2 density product.  With x = 2 gamma T s and u = exp(-x):
///   E = -(T/16 pi s^2) / (1 - u)                (geometric Matsubara sum)
///   S = +(1/16 pi s^2) [1/(1-u) - x u/(1-u)^2]  (= -dE/dT)
///   U = -(T/16 pi s^2) * x u/(1-u)^2            (= E + T S)
double free_energy_kernel(double s, double temperature, const UnitSystem& units);
double entropy_kernel(double s, double temperature, const UnitSystem& units);
double internal_energy_kernel(double s, double temperature, const UnitSystem& units);

/// Low-temperature expansion of the entropy kernel,
///   S = (1/16 pi s^2) * sum_n c_n y^(p_n),  y = gamma T s,
/// with Bernoulli-number coefficients (1/2, 1/3, -2/45, 2/315, -4/4725, ...).
/// Returns the (power, rational coefficient) list actually used.
struct SeriesTerm {
    int power;          // power of y = gamma T s
    double coefficient;
};

const std::vector<SeriesTerm>& entropy_series_coefficients();

struct SeriesEval {
    double value = 0.0;
    double first_omitted = 0.0;  // magnitude of the first dropped term
    int terms_used = 0;
    bool in_regime = true;       // gamma T s < 1
};

SeriesEval entropy_kernel_series(double s, double temperature, const UnitSystem& units,
                                 int n_terms = 4);

struct SphereNumerics {
    int polar_order = 32;
    int azimuth_order = 32;
    double fd_step_rel = 1e-4;  // used for the force derivative in R
};

/// Two-sphere result: the quadrature-exact thermodynamic point (the product
/// of record) plus the truncated P_p entropy series with its error estimate.
struct TwoSphereResult {
    thermo::ThermoPoint point;
    double entropy_series = 0.0;
    double entropy_series_error = 0.0;     // first omitted series term
    bool series_in_regime = true;          // gamma T (R+a+b) < 1
    std::vector<std::pair<int, double>> expansion_terms;  // (power of T, full coefficient)
};

TwoSphereResult two_sphere(const geom::SpherePair& pair, double temperature,
                           const UnitSystem& units, const SphereNumerics& numerics = {});

/// Quadrature-exact entropy alone (used by the positivity scans).
double two_sphere_entropy_exact(const geom::SpherePair& pair, double temperature,
                                const UnitSystem& units, const SphereNumerics& numerics = {});

} // namespace casimir::scalar3d
