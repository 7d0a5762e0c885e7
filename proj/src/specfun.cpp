#include "casimir/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace casimir::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008;

double int_pow(double base, int exp) {
    if (exp < 0) return 1.0 / int_pow(base, -exp);
    double r = 1.0, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// k^s for the small integer orders the series needs; cheaper than pow().
inline double kpow(double k, int s) {
    double k2 = k * k;
    switch (s) {
        case 1: return k;
        case 2: return k2;
        case 3: return k2 * k;
        case 4: return k2 * k2;
        case 5: return k2 * k2 * k;
        default: return k2 * k2 * k2;
    }
}

} // namespace

double zeta(int s) {
    if (s < 2) throw std::domain_error("zeta: order must be >= 2, got " + std::to_string(s));
    if (s > 60) {
        // tail below 1 ulp; three terms suffice
        return 1.0 + std::pow(2.0, -s) + std::pow(3.0, -s);
    }
    // direct sum to K-1 plus Euler-Maclaurin tail from K
    constexpr int K = 64;
    double sum = 0.0;
    for (int k = K - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
    const double ds = s;
    const double Kinv = 1.0 / K;
    const double Kms = std::pow(static_cast<double>(K), -s);
    double tail = Kms * K / (ds - 1.0)           // integral
                  + 0.5 * Kms                    // half endpoint
                  + ds * Kms * Kinv / 12.0       // B2 correction
                  - ds * (ds + 1) * (ds + 2) * Kms * Kinv * Kinv * Kinv / 720.0
                  + ds * (ds + 1) * (ds + 2) * (ds + 3) * (ds + 4) * Kms * int_pow(Kinv, 5) / 30240.0;
    return sum + tail;
}

double polylog(int s, double z) {
    if (s < kPolylogOrderMin || s > kPolylogOrderMax)
        throw std::domain_error("polylog: order must lie in [1,6], got " + std::to_string(s));
    if (z < 0.0 || z > 1.0 || !std::isfinite(z))
        throw std::domain_error("polylog: argument must lie in [0,1), got " + std::to_string(z));
    if (z == 1.0) {
        if (s < 2) throw std::domain_error("polylog: z = 1 diverges for s = 1");
        return zeta(s);
    }
    if (z == 0.0) return 0.0;
    if (s == 1) return -std::log1p(-z);
    if (s == 2 && z > 1.0 - 1e-6) {
        // dilogarithm reflection Li2(z) = pi^2/6 - ln z ln(1-z) - Li2(1-z);
        // the direct series would need upward of 1e8 terms this close to 1,
        // while the reflected argument needs a handful
        const double w = 1.0 - z;
        return zeta(2) - std::log1p(-w) * std::log(w) - polylog(2, w);
    }

    // Kahan-compensated direct series.  The remainder after term k is below
    // both the geometric bound term_k * z/(1-z) and, for s >= 2, the
    // power-law bound z^k * k^{1-s}/(s-1); the second one matters as z -> 1.
    const double tail_factor = z / (1.0 - z);
    double sum = 0.0, comp = 0.0;
    double zk = 1.0;
    for (long k = 1; k < 300000000L; ++k) {
        zk *= z;
        const double kd = static_cast<double>(k);
        const double term = zk / kpow(kd, s);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        double tail = term * tail_factor;
        if (s >= 2) tail = std::min(tail, zk / (kpow(kd, s - 1) * (s - 1)));
        if (tail < sum * 1e-17 + 1e-300) return sum;
    }
    throw std::runtime_error("polylog: series did not converge (argument too close to 1)");
}

namespace {

// Ascending series for K0, K1 (x <= 2).  Also yields I0, I1 as a byproduct.
void bessel_k01_series(double x, double& k0, double& k1) {
    const double t = 0.25 * x * x;
    const double lg = std::log(0.5 * x);

    double a0 = 1.0;   // t^k / (k!)^2
    double i0 = 1.0;
    double h0 = 0.0;   // sum a0_k * H_k
    double a1 = 1.0;   // t^k / (k! (k+1)!)
    double i1r = 1.0;  // I1 / (x/2)
    double h1 = 1.0;   // sum a1_k * (H_k + H_{k+1}); H_0 + H_1 = 1
    double hk = 0.0;
    for (int k = 1; k <= 60; ++k) {
        a0 *= t / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        i0 += a0;
        h0 += a0 * hk;
        a1 *= t / (static_cast<double>(k) * (k + 1));
        i1r += a1;
        h1 += a1 * (2.0 * hk + 1.0 / (k + 1));
        if (a0 < 1e-19 * i0) break;
    }
    const double i1 = 0.5 * x * i1r;
    k0 = -(lg + kEulerGamma) * i0 + h0;
    k1 = lg * i1 + 1.0 / x - 0.25 * x * (h1 - 2.0 * kEulerGamma * i1r);
}

// Steed's continued fraction for x >= 2 (Temme/Thompson-Barnett, mu = 0).
void bessel_k01_cf(double x, double& k0, double& k1) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 10000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) <= eps) break;
    }
    h = a1 * h;
    k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
    k1 = k0 * (x + 0.5 - h) / x;
}

} // namespace

void bessel_k01(double x, double& k0, double& k1) {
    if (!(x > 0.0))
        throw std::domain_error("bessel_k: argument must be positive, got " + std::to_string(x));
    if (x < 2.0)
        bessel_k01_series(x, k0, k1);
    else
        bessel_k01_cf(x, k0, k1);
}

double bessel_k0(double x) {
    double k0, k1;
    bessel_k01(x, k0, k1);
    return k0;
}

double bessel_k1(double x) {
    double k0, k1;
    bessel_k01(x, k0, k1);
    return k1;
}

double bessel_k(int order, double x) {
    if (order != 0 && order != 1)
        throw std::domain_error("bessel_k: only orders 0 and 1 are supported");
    return order == 0 ? bessel_k0(x) : bessel_k1(x);
}

} // namespace casimir::specfun
