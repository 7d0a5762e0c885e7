#include "casimir/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "casimir/quadrature.hpp"

namespace casimir::geom {

RibbonPair::RibbonPair(double a_, double b_, double c_, double d_, double chi1_, double chi2_)
    : a(a_), b(b_), c(c_), d(d_), chi1(chi1_), chi2(chi2_) {
    if (!(a <= b && b < c && c <= d))
        throw std::domain_error("RibbonPair: need a <= b < c <= d (disjoint ordered bodies)");
    if (!(chi1 >= 0.0 && chi2 >= 0.0))
        throw std::domain_error("RibbonPair: susceptibilities must be non-negative");
}

RibbonPair RibbonPair::with_center_distance(double r) const {
    const double shift = r - center_distance();
    return RibbonPair(a, b, c + shift, d + shift, chi1, chi2);
}

SpherePair::SpherePair(double a_, double b_, double big_r, double chi1_, double chi2_)
    : radius_a(a_), radius_b(b_), center_distance(big_r), chi1(chi1_), chi2(chi2_) {
    if (!(radius_a > 0.0 && radius_b > 0.0))
        throw std::domain_error("SpherePair: radii must be positive");
    if (!(center_distance > radius_a + radius_b))
        throw std::domain_error("SpherePair: centers closer than the radius sum");
    if (!(chi1 >= 0.0 && chi2 >= 0.0))
        throw std::domain_error("SpherePair: susceptibilities must be non-negative");
}

SpherePair SpherePair::with_center_distance(double big_r) const {
    return SpherePair(radius_a, radius_b, big_r, chi1, chi2);
}

double sphere_point_distance(const SpherePair& pair, double theta, double phi,
                             double theta_p, double phi_p) {
    const double a = pair.radius_a, b = pair.radius_b, R = pair.center_distance;
    const double cg = std::cos(theta) * std::cos(theta_p) +
                      std::sin(theta) * std::sin(theta_p) * std::cos(phi - phi_p);
    const double s2 = R * R + a * a + b * b - 2.0 * a * b * cg -
                      2.0 * R * (a * std::cos(theta) - b * std::cos(theta_p));
    return std::sqrt(s2);
}

namespace {

double ipow(double x, int n) {
    if (n < 0) return 1.0 / ipow(x, -n);
    double r = 1.0, b = x;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

void check_hats(double ah, double bh) {
    if (!(ah > 0.0 && bh > 0.0 && ah + bh < 1.0))
        throw std::domain_error("p_factor: need 0 < a_hat, b_hat and a_hat + b_hat < 1");
}

} // namespace

namespace detail {

double p_factor_any(int p, double a_hat, double b_hat) {
    check_hats(a_hat, b_hat);
    const double s = a_hat + b_hat;
    const double d = a_hat - b_hat;
    if (p == -1) return 1.0;
    if (p == -3) {
        // log arguments kept as a single ratio; both factors stay positive
        return -std::log((1.0 - s * s) / (1.0 - d * d)) / (4.0 * a_hat * b_hat);
    }
    if (p == -2) {
        const double v = (1.0 + s) * std::log(1.0 + s) + (1.0 - s) * std::log1p(-s) -
                         (1.0 + d) * std::log(1.0 + d) - (1.0 - d) * std::log1p(-d);
        return v / (4.0 * a_hat * b_hat);
    }
    const int q = p + 3;
    const double v = ipow(1.0 + s, q) + ipow(1.0 - s, q) - ipow(1.0 + d, q) - ipow(1.0 - d, q);
    return v / (4.0 * a_hat * b_hat * (p + 2) * (p + 3));
}

} // namespace detail

double p_factor(int p, double a_hat, double b_hat) {
    if (p < -6 || p > 3)
        throw std::domain_error("p_factor: p must lie in [-6, 3], got " + std::to_string(p));
    return detail::p_factor_any(p, a_hat, b_hat);
}

double p_factor(int p, const SpherePair& pair) {
    return p_factor(p, pair.a_hat(), pair.b_hat());
}

double p_factor_recursion_residual(int p, const SpherePair& pair, double h_rel) {
    if (p == -1) throw std::domain_error("p_factor recursion is singular at p = -1");
    const double R = pair.center_distance;
    const double a = pair.radius_a, b = pair.radius_b;
    auto g = [&](double r) {  // r^{p+1} P_p(a/r, b/r)
        return ipow(r, p + 1) * detail::p_factor_any(p, a / r, b / r);
    };
    // Richardson-extrapolated central difference of g at R
    const double h = h_rel * R;
    const double d1 = (g(R + h) - g(R - h)) / (2.0 * h);
    const double d2 = (g(R + 0.5 * h) - g(R - 0.5 * h)) / h;
    const double dg = (4.0 * d2 - d1) / 3.0;
    const double rhs = ipow(R, -p) / (1.0 + p) * dg;
    const double lhs = detail::p_factor_any(p - 1, a / R, b / R);
    return std::abs(lhs - rhs);
}

SurfaceGrid sphere_pair_nodes(const SpherePair& pair, int polar_order, int azimuth_order) {
    const auto& rule = quadrature::gauss_legendre(polar_order);
    const auto angles = quadrature::periodic_angles(azimuth_order);
    const double a = pair.radius_a, b = pair.radius_b, R = pair.center_distance;
    const double dpsi = 2.0 * std::numbers::pi / azimuth_order;
    const double jac = 2.0 * std::numbers::pi * a * a * b * b;

    SurfaceGrid grid;
    grid.distance.reserve(static_cast<std::size_t>(polar_order) * polar_order * azimuth_order);
    grid.weight.reserve(grid.distance.capacity());
    for (int i = 0; i < polar_order; ++i) {
        const double mu = rule.nodes[i];
        const double smu = std::sqrt(1.0 - mu * mu);
        for (int j = 0; j < polar_order; ++j) {
            const double mup = rule.nodes[j];
            const double smup = std::sqrt(1.0 - mup * mup);
            const double base = R * R + a * a + b * b - 2.0 * R * (a * mu - b * mup);
            const double w2 = jac * rule.weights[i] * rule.weights[j] * dpsi;
            for (double psi : angles) {
                const double cg = mu * mup + smu * smup * std::cos(psi);
                grid.distance.push_back(std::sqrt(base - 2.0 * a * b * cg));
                grid.weight.push_back(w2);
            }
        }
    }
    return grid;
}

} // namespace casimir::geom
