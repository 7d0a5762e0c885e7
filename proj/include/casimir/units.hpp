#pragma once

namespace casimir {

enum class UnitMode { Natural, SiNmKelvin };

/// Unit convention. Energies are always expressed in units of k_B times the
/// temperature unit, so k_B never appears explicitly.  The only dimensional
/// constant needed by the formulas is the thermal wavenumber factor
/// gamma = 2*pi*k_B/(hbar*c): in natural units (hbar = c = k_B = 1) gamma is
/// exactly 2*pi; in nm/K units it is computed from the CODATA constants.
struct UnitSystem {
    UnitMode mode;
    double gamma;

    static UnitSystem natural();
    static UnitSystem si_nm_kelvin();
};

} // namespace casimir
