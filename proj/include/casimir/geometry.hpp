#pragma once

#include <vector>

namespace casimir::geom {

/// Two disjoint 1D bodies [a,b] and [c,d] with constant susceptibilities.
/// Zero widths (a == b or c == d) are allowed; the gap c - b must stay
/// positive.
struct RibbonPair {
    double a, b, c, d;
    double chi1, chi2;

    RibbonPair(double a_, double b_, double c_, double d_, double chi1_, double chi2_);

    double half_width1() const { return 0.5 * (b - a); }   // r''
    double half_width2() const { return 0.5 * (d - c); }   // r'
    double center_distance() const { return 0.5 * (c + d) - 0.5 * (a + b); } // r
    double gap() const { return c - b; }

    /// Same pair with body 2 translated so that the center distance is r.
    RibbonPair with_center_distance(double r) const;
};

/// Two spherical shells of radii a and b whose centers sit a distance R > a+b
/// apart on a common z axis; chi are the surface susceptibility amplitudes.
struct SpherePair {
    double radius_a, radius_b, center_distance;
    double chi1, chi2;

    SpherePair(double a_, double b_, double big_r, double chi1_, double chi2_);

    double a_hat() const { return radius_a / center_distance; }
    double b_hat() const { return radius_b / center_distance; }
    double gap() const { return center_distance - radius_a - radius_b; }

    SpherePair with_center_distance(double big_r) const;
};

/// Distance between the surface points (theta, phi) on sphere 1 and
/// (theta', phi') on sphere 2.
double sphere_point_distance(const SpherePair& pair, double theta, double phi,
                             double theta_p, double phi_p);

/// Dimensionless angular moment P_p defined by
///   integral dOmega dOmega' |x - x'|^p = (4 pi)^2 R^p P_p(a_hat, b_hat),
/// supported for p in [-6, 3].  P_{-1} == 1 exactly.
/// Throws std::domain_error when a_hat + b_hat >= 1.
double p_factor(int p, const SpherePair& pair);
double p_factor(int p, double a_hat, double b_hat);

/// |P_{p-1} - R^{-p}/(1+p) * d/dR [R^{p+1} P_p]| with the derivative taken by
/// Richardson central differences at fixed sphere radii.  p must not be -1.
double p_factor_recursion_residual(int p, const SpherePair& pair, double h_rel = 1e-5);

namespace detail {
/// Closed form for any p except the logarithmic cases p = -2, -3; valid in
/// particular for p = -7, which the truncated electromagnetic energy series
/// needs but the public surface does not expose.
double p_factor_any(int p, double a_hat, double b_hat);
}

/// Flattened quadrature grid over both sphere surfaces: for each node pair j,
/// distance[j] = |x - x'| and weight[j] absorbs the angular measure, the
/// azimuthal reduction, and the a^2 b^2 surface Jacobians, so that
///   integral d^3x d^3x' chi1 chi2 f(|x-x'|)  ~  chi1 chi2 * sum_j w_j f(s_j)
/// for surface-delta susceptibilities.
struct SurfaceGrid {
    std::vector<double> distance;
    std::vector<double> weight;
};

SurfaceGrid sphere_pair_nodes(const SpherePair& pair, int polar_order, int azimuth_order);

} // namespace casimir::geom
