#pragma once

namespace casimir::specfun {

inline constexpr int kPolylogOrderMin = 1;
inline constexpr int kPolylogOrderMax = 6;

/// Li_s(z) = sum_{k>=1} z^k / k^s for integer order 1 <= s <= 6 and
/// 0 <= z < 1.  z == 1 is accepted for s >= 2 and returns zeta(s).
/// Throws std::domain_error outside that domain.
/// Relative accuracy better than 1e-12 (direct compensated summation with a
/// geometric tail cutoff).
double polylog(int s, double z);

/// Riemann zeta at integer s >= 2, accurate to ~1e-15 (direct summation with
/// an Euler-Maclaurin tail estimate).  Throws std::domain_error for s < 2.
double zeta(int s);

/// Modified Bessel functions of the second kind, orders 0 and 1, for x > 0.
/// Ascending series below x = 2, continued-fraction evaluation of the
/// asymptotic representation above.  Relative accuracy ~1e-14 on
/// [1e-6, 700]; underflows smoothly to 0 once exp(-x) is subnormal.
double bessel_k0(double x);
double bessel_k1(double x);

/// Evaluates K0 and K1 at once (they share all the work).
void bessel_k01(double x, double& k0, double& k1);

/// order must be 0 or 1.
double bessel_k(int order, double x);

} // namespace casimir::specfun
