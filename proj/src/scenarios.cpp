#include "casimir/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

std::string to_string(FieldType f) {
    switch (f) {
        case FieldType::Scalar1D: return "scalar1d";
        case FieldType::Scalar2D: return "scalar2d";
        case FieldType::Scalar3D: return "scalar3d";
        case FieldType::EM: return "em";
    }
    return "?";
}

std::vector<double> SweepGrid::points() const {
    if (steps < 1) throw std::domain_error("SweepGrid: steps must be >= 1");
    if (!(min > 0.0 && max >= min)) throw std::domain_error("SweepGrid: need 0 < min <= max");
    std::vector<double> pts(steps);
    if (steps == 1) {
        pts[0] = min;
        return pts;
    }
    if (log_scale) {
        const double lmin = std::log(min), lmax = std::log(max);
        for (int i = 0; i < steps; ++i)
            pts[i] = std::exp(lmin + (lmax - lmin) * i / (steps - 1));
    } else {
        for (int i = 0; i < steps; ++i) pts[i] = min + (max - min) * i / (steps - 1);
    }
    return pts;
}

namespace {

Scenario ribbons(std::string name, double w1, double gap, double w2, double chi1, double chi2) {
    Scenario s;
    s.name = std::move(name);
    s.field = FieldType::Scalar1D;
    s.ribbons = geom::RibbonPair(0.0, w1, w1 + gap, w1 + gap + w2, chi1, chi2);
    s.grid = {0.001, 1.0, 200, true, false};
    return s;
}

Scenario spheres3d(std::string name, double a, double b, double big_r, double chi1, double chi2) {
    Scenario s;
    s.name = std::move(name);
    s.field = FieldType::Scalar3D;
    s.spheres = geom::SpherePair(a, b, big_r, chi1, chi2);
    s.grid = {0.001, 10.0, 200, true, false};
    return s;
}

Scenario spheres_em(std::string name, double chi_product) {
    Scenario s;
    s.name = std::move(name);
    s.field = FieldType::EM;
    s.spheres = geom::SpherePair(1.0, 2.0, 10.0, 1.0, chi_product);
    s.grid = {0.05, 5.0, 200, false, true};  // Z = 4 pi R T axis
    return s;
}

std::vector<Scenario> make_builtins() {
    std::vector<Scenario> all;
    all.push_back(ribbons("fig1-blue", 2.0, 8.0, 4.0, 1.0, 1.0));
    all.push_back(ribbons("fig1-red", 2.0, 8.0, 8.0, 1.0, 1.0));
    all.push_back(ribbons("fig1-green", 10.0, 8.0, 8.0, 1.0, 1.0));
    all.push_back(ribbons("fig2-blue", 1.0, 4.0, 1.0, 11.68, 2.6));
    all.push_back(ribbons("fig2-red", 1.0, 4.0, 1.0, 11.68, 1000.0));
    all.push_back(ribbons("fig2-green", 1.0, 4.0, 1.0, 11.68, 6000.0));
    all.push_back(ribbons("fig2-orange", 1.0, 4.0, 1.0, 2.0, 3.0));
    all.push_back(spheres3d("fig3-blue", 1.0, 2.0, 10.0, 11.68, 2.6));
    all.push_back(spheres3d("fig3-red", 1.0, 2.0, 20.0, 11.68, 2.6));
    all.push_back(spheres_em("fig4", 1.0));  // pair with --chi-product
    all.push_back(spheres_em("fig4-chi1", 1.0));
    all.push_back(spheres_em("fig4-chi6", 6.0));
    all.push_back(spheres_em("fig4-chi20", 20.0));
    all.push_back(spheres_em("fig4-chi50", 50.0));
    {
        Scenario s;
        s.name = "disks";
        s.field = FieldType::Scalar2D;
        s.bodies2d = scalar2d::PlanarBodyPair{scalar2d::Disk{0.0, 0.0, 1.0},
                                              scalar2d::Disk{3.0, 0.0, 1.0}, 1.0, 1.0};
        s.grid = {0.2, 5.0, 60, true, false};
        all.push_back(s);
    }
    return all;
}

} // namespace

const std::vector<Scenario>& builtin_scenarios() {
    static const std::vector<Scenario> all = make_builtins();
    return all;
}

const Scenario* find_scenario(std::string_view name) {
    for (const auto& s : builtin_scenarios())
        if (s.name == name) return &s;
    return nullptr;
}

} // namespace casimir
