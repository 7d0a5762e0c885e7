#pragma once

#include <functional>

#include "casimir/units.hpp"

namespace casimir::thermo {

/// Matsubara index range and the frequency map alpha_l(T) = gamma * l * T.
struct MatsubaraGrid {
    int l_start = 1;        // 0 or 1
    long l_max = 100000;
    double temperature = 1.0;
    double gamma = 0.0;

    double alpha(long l) const { return gamma * static_cast<double>(l) * temperature; }
};

struct SumResult {
    double value = 0.0;
    double tail_bound = 0.0;
    long terms_used = 0;
    bool converged = false;
};

/// Compensated summation of summand(l, alpha_l) from l_start upward, in
/// index order.  Stops once a geometric tail estimate (built from the decay
/// ratio of the last two terms) drops below tol relative to the running sum,
/// or at l_max, in which case converged is false.  Never truncates silently:
/// the tail estimate is always reported.
SumResult matsubara_sum(const std::function<double(long, double)>& summand,
                        const MatsubaraGrid& grid, double tol);

struct Derivative {
    double value = 0.0;
    double error = 0.0;
};

/// Richardson-extrapolated central difference f'(x) from steps h and h/2.
Derivative central_derivative(const std::function<double(double)>& f, double x, double h);

/// S = -dE/dT.  h defaults to 1e-4 * T when passed as 0.
Derivative entropy_from_free_energy(const std::function<double(double)>& free_energy,
                                    double temperature, double h = 0.0);

/// U = -T^2 d/dT (E/T), same stencil contract as entropy_from_free_energy.
Derivative internal_energy_from_free_energy(const std::function<double(double)>& free_energy,
                                            double temperature, double h = 0.0);

/// One evaluated state point.  Energies are in units of k_B times the
/// temperature unit.  `force` is dE/d(separation) and is meaningful only
/// when has_force is set.
struct ThermoPoint {
    double temperature = 0.0;
    double energy_self = 0.0;
    double energy_interaction = 0.0;
    double entropy = 0.0;
    double internal_energy = 0.0;
    double force = 0.0;
    bool has_force = false;
    bool converged = true;

    double energy_total() const { return energy_self + energy_interaction; }
};

} // namespace casimir::thermo
