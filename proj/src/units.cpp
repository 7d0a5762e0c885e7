#include "casimir/units.hpp"

#include <numbers>

namespace casimir {

UnitSystem UnitSystem::natural() {
    return {UnitMode::Natural, 2.0 * std::numbers::pi};
}

UnitSystem UnitSystem::si_nm_kelvin() {
    // CODATA 2018 exact values.
    constexpr double k_boltzmann = 1.380649e-23;     // J/K
    constexpr double hbar = 1.054571817e-34;         // J s
    constexpr double c_light = 2.99792458e8;         // m/s
    const double gamma_per_m = 2.0 * std::numbers::pi * k_boltzmann / (hbar * c_light);
    return {UnitMode::SiNmKelvin, gamma_per_m * 1e-9}; // 1/(nm K)
}

} // namespace casimir
