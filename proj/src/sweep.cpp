#include "casimir/sweep.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <ostream>
#include <vector>

#include "casimir/em3d.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/scalar1d.hpp"
#include "casimir/scalar2d.hpp"
#include "casimir/scalar3d.hpp"

namespace casimir {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // fold -0 into 0
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

double axis_to_temperature(const RunConfig& cfg, double axis_value) {
    if (cfg.scenario.grid.z_axis)
        return em3d::temperature_from_z(*cfg.scenario.spheres, axis_value);
    return axis_value;
}

thermo::ThermoPoint evaluate_em_series(const RunConfig& cfg, double t) {
    const auto& pair = *cfg.scenario.spheres;
    thermo::ThermoPoint pt;
    pt.temperature = t;
    pt.energy_interaction = em3d::free_energy_series(pair, t, cfg.scenario.units);
    pt.entropy = em3d::entropy_series(pair, t, cfg.scenario.units);
    pt.internal_energy = em3d::internal_energy_series(pair, t, cfg.scenario.units);
    pt.has_force = false;
    return pt;
}

} // namespace

thermo::ThermoPoint sweep_point(const RunConfig& cfg, Method method, double axis_value) {
    const double t = axis_to_temperature(cfg, axis_value);
    const UnitSystem& units = cfg.scenario.units;
    switch (cfg.scenario.field) {
        case FieldType::Scalar1D:
            if (method == Method::Oracle)
                return oracle::thermo_1d(*cfg.scenario.ribbons, t, units, cfg.numerics);
            return scalar1d::evaluate(*cfg.scenario.ribbons, t, units);
        case FieldType::Scalar2D: {
            if (method == Method::Oracle)
                return oracle::thermo_2d_mc(*cfg.scenario.bodies2d, t, units, cfg.numerics);
            scalar2d::Numerics2D num;
            num.order = cfg.numerics.body2d_order;
            num.l_max = cfg.numerics.l_max;
            num.fd_step_rel = cfg.numerics.fd_step_rel;
            thermo::ThermoPoint pt = scalar2d::evaluate(*cfg.scenario.bodies2d, t, units, num);
            if (cfg.asymptotic_2d)
                pt.entropy = scalar2d::entropy_asymptotic(*cfg.scenario.bodies2d, t, units, num);
            return pt;
        }
        case FieldType::Scalar3D: {
            if (method == Method::Oracle)
                return oracle::thermo_sphere_3d(*cfg.scenario.spheres, t, units, cfg.numerics);
            scalar3d::SphereNumerics num;
            num.polar_order = cfg.numerics.sphere_polar_order;
            num.azimuth_order = cfg.numerics.sphere_azimuth_order;
            num.fd_step_rel = cfg.numerics.fd_step_rel;
            return scalar3d::two_sphere(*cfg.scenario.spheres, t, units, num).point;
        }
        case FieldType::EM: {
            if (method == Method::Oracle)
                return oracle::thermo_sphere_em(*cfg.scenario.spheres, t, units, cfg.numerics);
            if (method == Method::Series) return evaluate_em_series(cfg, t);
            em3d::SphereNumerics num;
            num.polar_order = cfg.numerics.sphere_polar_order;
            num.azimuth_order = cfg.numerics.sphere_azimuth_order;
            num.fd_step_rel = cfg.numerics.fd_step_rel;
            return em3d::two_sphere_closed(*cfg.scenario.spheres, t, units, num);
        }
    }
    throw std::logic_error("sweep_point: unreachable");
}

int run_sweep(const RunConfig& cfg, Method method, std::ostream& out) {
    if (method == Method::Both) throw std::invalid_argument("run_sweep: resolve 'both' upstream");
    if (method == Method::Series && cfg.scenario.field != FieldType::EM)
        throw std::invalid_argument("method 'series' applies only to the em field");

    const std::vector<double> axis = cfg.scenario.grid.points();
    std::vector<thermo::ThermoPoint> rows(axis.size());
    std::vector<std::string> errors(axis.size());
    quadrature::parallel_for(axis.size(), cfg.threads, [&](std::size_t i) {
        try {
            rows[i] = sweep_point(cfg, method, axis[i]);
        } catch (const std::exception& ex) {
            errors[i] = ex.what();
            rows[i].converged = false;
        }
    });

    out << (cfg.scenario.grid.z_axis ? "Z" : "T") << ",E_self,E_int,E_total,S,U,F,status\n";
    int unconverged = 0;
    for (std::size_t i = 0; i < axis.size(); ++i) {
        const auto& p = rows[i];
        const bool ok = p.converged && errors[i].empty();
        if (!ok) ++unconverged;
        out << format_double(axis[i]) << ',' << format_double(p.energy_self) << ','
            << format_double(p.energy_interaction) << ',' << format_double(p.energy_total()) << ','
            << format_double(p.entropy) << ',' << format_double(p.internal_energy) << ','
            << format_double(p.force) << ',' << (ok ? "ok" : "unconverged") << '\n';
    }
    return unconverged == 0 ? 0 : 2;
}

namespace {

std::string sibling_path(const std::string& path, const std::string& tag) {
    const auto dot = path.find_last_of('.');
    const auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + tag;
    return path.substr(0, dot) + tag + path.substr(dot);
}

} // namespace

int run_sweep_to_files(const RunConfig& cfg) {
    const bool both = cfg.method == Method::Both;
    const Method primary = both ? Method::Closed : cfg.method;
    int code = 0;
    if (cfg.output_path.empty()) {
        if (both) {
            std::cerr << "error: method 'both' needs --out (writes two files)\n";
            return 1;
        }
        return run_sweep(cfg, primary, std::cout);
    }
    {
        std::ofstream out(cfg.output_path);
        if (!out) {
            std::cerr << "error: cannot open output file '" << cfg.output_path << "'\n";
            return 1;
        }
        code = std::max(code, run_sweep(cfg, primary, out));
    }
    if (both) {
        const std::string path = sibling_path(cfg.output_path, "-oracle");
        std::ofstream out(path);
        if (!out) {
            std::cerr << "error: cannot open output file '" << path << "'\n";
            return 1;
        }
        code = std::max(code, run_sweep(cfg, Method::Oracle, out));
    }
    return code;
}

int run_validation(const std::string& out_path, const oracle::Numerics& numerics) {
    const bool to_stdout = out_path.empty() || out_path == "-";
    std::ofstream file;
    if (!to_stdout) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open report file '" << out_path << "'\n";
            return 1;
        }
    }
    const auto reports = oracle::validate_all(numerics);
    oracle::write_report(reports, to_stdout ? std::cout : file);
    const int failures = oracle::count_failures(reports);
    if (failures > 0)
        std::cerr << failures << " validation record(s) failed\n";
    return failures == 0 ? 0 : 2;
}

} // namespace casimir
