#include "casimir/scalar2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "casimir/quadrature.hpp"
#include "casimir/specfun.hpp"

namespace casimir::scalar2d {

namespace {

constexpr double kPi = std::numbers::pi;
// beyond this kernel argument K0^2 is below ~1e-35 and contributes nothing
constexpr double kArgCutoff = 40.0;

struct Nodes {
    std::vector<double> x, y, w;
};

Nodes body_nodes(const PlanarBody& body, int order) {
    Nodes nodes;
    const auto& rule = quadrature::gauss_legendre(order);
    if (std::holds_alternative<Disk>(body)) {
        const auto& d = std::get<Disk>(body);
        if (!(d.radius > 0.0)) throw std::domain_error("scalar2d: disk radius must be positive");
        const auto angles = quadrature::periodic_angles(order);
        const double dphi = 2.0 * kPi / order;
        for (int i = 0; i < order; ++i) {
            const double rho = 0.5 * d.radius * (rule.nodes[i] + 1.0);
            const double wr = 0.5 * d.radius * rule.weights[i] * rho * dphi;
            for (double phi : angles) {
                nodes.x.push_back(d.cx + rho * std::cos(phi));
                nodes.y.push_back(d.cy + rho * std::sin(phi));
                nodes.w.push_back(wr);
            }
        }
    } else {
        const auto& r = std::get<Rect>(body);
        if (!(r.hx > 0.0 && r.hy > 0.0))
            throw std::domain_error("scalar2d: rectangle half-widths must be positive");
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) {
                nodes.x.push_back(r.cx + r.hx * rule.nodes[i]);
                nodes.y.push_back(r.cy + r.hy * rule.nodes[j]);
                nodes.w.push_back(r.hx * r.hy * rule.weights[i] * rule.weights[j]);
            }
    }
    return nodes;
}

struct Point {
    double x, y;
};

Point center_of(const PlanarBody& body) {
    if (std::holds_alternative<Disk>(body)) {
        const auto& d = std::get<Disk>(body);
        return {d.cx, d.cy};
    }
    const auto& r = std::get<Rect>(body);
    return {r.cx, r.cy};
}

PlanarBody translated(const PlanarBody& body, double dx, double dy) {
    if (std::holds_alternative<Disk>(body)) {
        Disk d = std::get<Disk>(body);
        d.cx += dx;
        d.cy += dy;
        return d;
    }
    Rect r = std::get<Rect>(body);
    r.cx += dx;
    r.cy += dy;
    return r;
}

double point_body_distance(double px, double py, const PlanarBody& body) {
    if (std::holds_alternative<Disk>(body)) {
        const auto& d = std::get<Disk>(body);
        return std::hypot(px - d.cx, py - d.cy) - d.radius;
    }
    const auto& r = std::get<Rect>(body);
    const double dx = std::max(std::abs(px - r.cx) - r.hx, 0.0);
    const double dy = std::max(std::abs(py - r.cy) - r.hy, 0.0);
    return std::hypot(dx, dy);
}

} // namespace

double min_gap(const PlanarBodyPair& pair) {
    const PlanarBody &b1 = pair.body1, &b2 = pair.body2;
    if (std::holds_alternative<Disk>(b1) && std::holds_alternative<Disk>(b2)) {
        const auto &d1 = std::get<Disk>(b1), &d2 = std::get<Disk>(b2);
        return std::hypot(d1.cx - d2.cx, d1.cy - d2.cy) - d1.radius - d2.radius;
    }
    if (std::holds_alternative<Rect>(b1) && std::holds_alternative<Rect>(b2)) {
        const auto &r1 = std::get<Rect>(b1), &r2 = std::get<Rect>(b2);
        const double dx = std::max(std::abs(r1.cx - r2.cx) - r1.hx - r2.hx, 0.0);
        const double dy = std::max(std::abs(r1.cy - r2.cy) - r1.hy - r2.hy, 0.0);
        return std::hypot(dx, dy);
    }
    // disk vs rectangle in either order
    const bool disk_first = std::holds_alternative<Disk>(b1);
    const auto& d = std::get<Disk>(disk_first ? b1 : b2);
    const auto& r = disk_first ? b2 : b1;
    return point_body_distance(d.cx, d.cy, r) - d.radius;
}

PairGrid pair_grid(const PlanarBodyPair& pair, int order) {
    if (!(min_gap(pair) > 0.0))
        throw std::domain_error("scalar2d: bodies must be disjoint with a positive gap");
    const Nodes n1 = body_nodes(pair.body1, order);
    const Nodes n2 = body_nodes(pair.body2, order);
    PairGrid grid;
    grid.distance.reserve(n1.x.size() * n2.x.size());
    grid.weight.reserve(grid.distance.capacity());
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n1.x.size(); ++i)
        for (std::size_t j = 0; j < n2.x.size(); ++j) {
            const double s = std::hypot(n1.x[i] - n2.x[j], n1.y[i] - n2.y[j]);
            grid.distance.push_back(s);
            grid.weight.push_back(n1.w[i] * n2.w[j]);
            dmin = std::min(dmin, s);
        }
    grid.min_distance = dmin;
    return grid;
}

namespace {

enum class Quantity { Energy, Entropy, InternalEnergy, All };

struct SumOut {
    double e = 0.0, s = 0.0, u = 0.0;
    bool converged = false;
    long l_terms = 0;
    double tail = 0.0;
};

// Single pass over l and all node pairs; per-l spatial reductions are
// Kahan-compensated in a fixed order and the l-sum is cut off by a
// geometric tail bound on the per-l contribution to E (the slowest mode).
SumOut l_sum(const PairGrid& grid, double t, double gamma, Quantity what,
             const Numerics2D& num) {
    SumOut out;
    quadrature::KahanAccumulator acc_e, acc_s, acc_u;
    double prev = 0.0;
    const bool need_k1 = what != Quantity::Energy;
    for (long l = 1; l <= num.l_max; ++l) {
        const double a = gamma * static_cast<double>(l) * t;
        quadrature::KahanAccumulator te, ts, tu;
        for (std::size_t j = 0; j < grid.distance.size(); ++j) {
            const double x = a * grid.distance[j];
            if (x > kArgCutoff) continue;
            const double w = grid.weight[j];
            if (need_k1) {
                double k0, k1;
                specfun::bessel_k01(x, k0, k1);
                te.add(w * k0 * k0);
                ts.add(w * (k0 * k0 - 2.0 * x * k0 * k1));
                tu.add(w * x * k0 * k1);
            } else {
                const double k0 = specfun::bessel_k0(x);
                te.add(w * k0 * k0);
            }
        }
        acc_e.add(te.value());
        acc_s.add(ts.value());
        acc_u.add(tu.value());
        ++out.l_terms;
        const double mag = std::abs(te.value());
        const double scale = std::max({std::abs(acc_e.value()), std::abs(acc_s.value()), 1e-300});
        if (mag == 0.0) {
            out.tail = 0.0;
            out.converged = true;
            break;
        }
        if (l > 1 && prev > mag) {
            const double rho = mag / prev;
            out.tail = mag * rho / (1.0 - rho);
            if (out.tail <= num.tol * scale) {
                out.converged = true;
                break;
            }
        }
        prev = mag;
    }
    // kernel prefactors: E = -(T/4pi^2) Sum, S = +(1/4pi^2) Sum,
    // U = -(T^2 gamma l .../2pi^2) -> folded via x = gamma l T s:
    // sum of w * x k0 k1 equals gamma l T sum w s k0 k1, so U = -(T/2pi^2) * acc_u.
    out.e = -t / (4.0 * kPi * kPi) * acc_e.value();
    out.s = acc_s.value() / (4.0 * kPi * kPi);
    out.u = -t / (2.0 * kPi * kPi) * acc_u.value();
    return out;
}

void check_t(double t) {
    if (!(t > 0.0)) throw std::domain_error("scalar2d: temperature must be positive");
}

} // namespace

Value2D free_energy(const PlanarBodyPair& pair, double temperature, const UnitSystem& units,
                    const Numerics2D& numerics) {
    check_t(temperature);
    const PairGrid grid = pair_grid(pair, numerics.order);
    const SumOut out = l_sum(grid, temperature, units.gamma, Quantity::Energy, numerics);
    return {pair.chi1 * pair.chi2 * out.e, out.converged, out.l_terms, out.tail};
}

Value2D entropy(const PlanarBodyPair& pair, double temperature, const UnitSystem& units,
                const Numerics2D& numerics) {
    check_t(temperature);
    const PairGrid grid = pair_grid(pair, numerics.order);
    const SumOut out = l_sum(grid, temperature, units.gamma, Quantity::Entropy, numerics);
    return {pair.chi1 * pair.chi2 * out.s, out.converged, out.l_terms, out.tail};
}

Value2D internal_energy(const PlanarBodyPair& pair, double temperature, const UnitSystem& units,
                        const Numerics2D& numerics) {
    check_t(temperature);
    const PairGrid grid = pair_grid(pair, numerics.order);
    const SumOut out = l_sum(grid, temperature, units.gamma, Quantity::InternalEnergy, numerics);
    return {pair.chi1 * pair.chi2 * out.u, out.converged, out.l_terms, out.tail};
}

double entropy_asymptotic(const PlanarBodyPair& pair, double temperature, const UnitSystem& units,
                          const Numerics2D& numerics) {
    check_t(temperature);
    const PairGrid grid = pair_grid(pair, numerics.order);
    quadrature::KahanAccumulator acc;
    const double gt = units.gamma * temperature;
    for (std::size_t j = 0; j < grid.distance.size(); ++j) {
        const double w = 2.0 * gt * grid.distance[j];
        const double q = std::exp(-w);
        const double bracket = -q / (1.0 - q) - std::log1p(-q) / (4.0 * gt * grid.distance[j]) +
                               specfun::polylog(2, q) / (16.0 * w * w) -
                               specfun::polylog(3, q) / (8.0 * w * w * w);
        acc.add(grid.weight[j] * bracket);
    }
    return pair.chi1 * pair.chi2 / (4.0 * kPi * kPi) * acc.value();
}

thermo::ThermoPoint evaluate(const PlanarBodyPair& pair, double temperature,
                             const UnitSystem& units, const Numerics2D& numerics,
                             bool with_force) {
    check_t(temperature);
    const PairGrid grid = pair_grid(pair, numerics.order);
    const SumOut out = l_sum(grid, temperature, units.gamma, Quantity::All, numerics);
    const double chi = pair.chi1 * pair.chi2;
    thermo::ThermoPoint pt;
    pt.temperature = temperature;
    pt.energy_interaction = chi * out.e;
    pt.entropy = chi * out.s;
    pt.internal_energy = chi * out.u;
    pt.converged = out.converged;

    if (with_force) {
        // dE/d(separation): slide body 2 along the center-to-center axis
        const Point c1 = center_of(pair.body1), c2 = center_of(pair.body2);
        const double dist = std::hypot(c2.x - c1.x, c2.y - c1.y);
        const double ux = (c2.x - c1.x) / dist, uy = (c2.y - c1.y) / dist;
        const double h = numerics.fd_step_rel * dist;
        auto e_at = [&](double shift) {
            PlanarBodyPair moved = pair;
            moved.body2 = translated(pair.body2, ux * shift, uy * shift);
            const PairGrid g = pair_grid(moved, numerics.order);
            return chi * l_sum(g, temperature, units.gamma, Quantity::Energy, numerics).e;
        };
        const double d1 = (e_at(h) - e_at(-h)) / (2.0 * h);
        const double d2 = (e_at(0.5 * h) - e_at(-0.5 * h)) / h;
        pt.force = (4.0 * d2 - d1) / 3.0;
        pt.has_force = true;
    }
    return pt;
}

} // namespace casimir::scalar2d
