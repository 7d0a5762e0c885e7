#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace casimir::quadrature {

/// Gauss-Legendre rule on [-1, 1].
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes/weights for an n-point Gauss-Legendre rule (cached, thread-safe).
const Rule& gauss_legendre(int n);

/// Midpoints of n equal subdivisions of [0, 2*pi); the matching weight is
/// 2*pi/n.  Spectrally accurate for periodic integrands.
std::vector<double> periodic_angles(int n);

/// Kahan-compensated accumulator; addition order is the caller's contract.
struct KahanAccumulator {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// Runs fn(i) for i in [0, n) on `threads` workers (0 = hardware default).
/// Each index is independent; results must be written to per-index slots so
/// the outcome does not depend on the worker count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace casimir::quadrature
