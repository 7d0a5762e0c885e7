#include "casimir/thermo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "casimir/quadrature.hpp"

namespace casimir::thermo {

SumResult matsubara_sum(const std::function<double(long, double)>& summand,
                        const MatsubaraGrid& grid, double tol) {
    if (grid.l_start != 0 && grid.l_start != 1)
        throw std::invalid_argument("matsubara_sum: l_start must be 0 or 1");
    if (grid.l_max < grid.l_start) throw std::invalid_argument("matsubara_sum: empty grid");

    quadrature::KahanAccumulator acc;
    SumResult res;
    double prev_mag = 0.0;
    int zero_run = 0;
    for (long l = grid.l_start; l <= grid.l_max; ++l) {
        const double term = summand(l, grid.alpha(l));
        if (!std::isfinite(term))
            throw std::runtime_error("matsubara_sum: non-finite summand at l = " + std::to_string(l));
        acc.add(term);
        ++res.terms_used;
        const double mag = std::abs(term);
        const double scale = std::max(std::abs(acc.value()), 1e-300);

        if (mag == 0.0) {
            ++zero_run;
            // an identically vanishing summand is converged immediately;
            // otherwise require a run of zeros before trusting it
            if ((acc.value() == 0.0 && l == grid.l_start) || zero_run >= 3) {
                res.tail_bound = 0.0;
                res.converged = true;
                break;
            }
        } else {
            zero_run = 0;
            if (l > grid.l_start && prev_mag > mag) {
                const double rho = mag / prev_mag;
                res.tail_bound = mag * rho / (1.0 - rho);
                if (res.tail_bound <= tol * scale) {
                    res.converged = true;
                    break;
                }
            }
            prev_mag = mag;
        }
    }
    res.value = acc.value();
    return res;
}

Derivative central_derivative(const std::function<double(double)>& f, double x, double h) {
    auto diff = [&](double step) {
        const double fp = f(x + step);
        const double fm = f(x - step);
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw std::runtime_error("central_derivative: non-finite function value in stencil");
        return (fp - fm) / (2.0 * step);
    };
    const double d1 = diff(h);
    const double d2 = diff(0.5 * h);
    Derivative d;
    d.value = (4.0 * d2 - d1) / 3.0;
    d.error = std::abs(d.value - d2);
    return d;
}

namespace {

double checked_step(double temperature, double h) {
    if (!(temperature > 0.0))
        throw std::domain_error("thermo derivative: temperature must be positive");
    if (h == 0.0) h = 1e-4 * temperature;
    if (h < 64.0 * std::numeric_limits<double>::epsilon() * temperature)
        throw std::invalid_argument("thermo derivative: step underflow");
    if (temperature - h <= 0.0)
        throw std::invalid_argument("thermo derivative: stencil leaves T > 0 domain");
    return h;
}

} // namespace

Derivative entropy_from_free_energy(const std::function<double(double)>& free_energy,
                                    double temperature, double h) {
    h = checked_step(temperature, h);
    Derivative d = central_derivative(free_energy, temperature, h);
    d.value = -d.value;
    return d;
}

Derivative internal_energy_from_free_energy(const std::function<double(double)>& free_energy,
                                            double temperature, double h) {
    h = checked_step(temperature, h);
    auto scaled = [&](double t) { return free_energy(t) / t; };
    Derivative d = central_derivative(scaled, temperature, h);
    d.value = -temperature * temperature * d.value;
    d.error = temperature * temperature * d.error;
    return d;
}

} // namespace casimir::thermo
