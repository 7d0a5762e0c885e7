#pragma once

#include "casimir/geometry.hpp"
#include "casimir/units.hpp"

namespace casimir::variants {

// Alternate closed-form variants that circulate for these systems.  They are
// NOT consistent with the defining free-energy series (the validation report
// compares them against the oracle and records the deviations); none of them
// is used by the production evaluators.

/// Ribbon entropy in the dilogarithm/logarithm form, self terms
/// +(chi^2 w) zeta(3)/(gamma T)^3.
double entropy_1d_log_form(const geom::RibbonPair& pair, double temperature,
                           const UnitSystem& units);

/// Ribbon force in the four-logarithm form, prefactor chi1 chi2/(2 gamma).
double force_1d_log_form(const geom::RibbonPair& pair, double temperature,
                         const UnitSystem& units);

/// Ribbon internal energy with the alternate sign pattern on the weighted
/// Li3 terms.
double internal_energy_1d_alt_signs(const geom::RibbonPair& pair, double temperature,
                                    const UnitSystem& units);

/// (3+1)D low-temperature entropy kernel series with the published
/// coefficients (1/(gamma T s), 1/2, (gamma T)^3 s/45, -4 (gamma T)^5 s^3/945)
/// and overall minus sign.
double entropy_3d_kernel_series_published(double s, double temperature, const UnitSystem& units);

/// (3+1)D two-sphere entropy series built from the same published
/// coefficients via the P_p factors.
double two_sphere_entropy_series_published(const geom::SpherePair& pair, double temperature,
                                           const UnitSystem& units);

} // namespace casimir::variants
