#include "casimir/config.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace casimir {

std::string to_string(Method m) {
    switch (m) {
        case Method::Closed: return "closed";
        case Method::Oracle: return "oracle";
        case Method::Series: return "series";
        case Method::Both: return "both";
    }
    return "?";
}

Method method_from_string(const std::string& s) {
    if (s == "closed") return Method::Closed;
    if (s == "oracle") return Method::Oracle;
    if (s == "series") return Method::Series;
    if (s == "both") return Method::Both;
    throw std::invalid_argument("unknown method '" + s + "' (closed|oracle|series|both)");
}

ConfigError::ConfigError(int line_, const std::string& message)
    : std::runtime_error("config line " + std::to_string(line_) + ": " + message), line(line_) {}

RunConfig config_from_scenario(const Scenario& scenario) {
    RunConfig cfg;
    cfg.scenario = scenario;
    return cfg;
}

namespace {

struct Entry {
    std::string value;
    int line;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double parse_real(const Entry& e, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(e.line, "key '" + key + "': expected a real number, got '" + e.value + "'");
    }
}

long parse_long(const Entry& e, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(e.line, "key '" + key + "': expected an integer, got '" + e.value + "'");
    }
}

bool parse_bool(const Entry& e, const std::string& key) {
    if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no") return false;
    throw ConfigError(e.line, "key '" + key + "': expected a boolean, got '" + e.value + "'");
}

scalar2d::PlanarBody parse_body(const Entry& e, const std::string& key) {
    std::istringstream ss(e.value);
    std::string kind;
    ss >> kind;
    if (kind == "disk") {
        double cx, cy, r;
        if (ss >> cx >> cy >> r) return scalar2d::Disk{cx, cy, r};
        throw ConfigError(e.line, "key '" + key + "': disk wants <cx> <cy> <radius>");
    }
    if (kind == "rect") {
        double cx, cy, hx, hy;
        if (ss >> cx >> cy >> hx >> hy) return scalar2d::Rect{cx, cy, hx, hy};
        throw ConfigError(e.line, "key '" + key + "': rect wants <cx> <cy> <hx> <hy>");
    }
    throw ConfigError(e.line, "key '" + key + "': body must start with 'disk' or 'rect'");
}

const std::vector<std::string> kSections = {"system",      "geometry", "material",
                                            "temperature", "numerics", "output"};

} // namespace

RunConfig parse_config(std::istream& in, const Scenario* base) {
    std::map<std::string, Entry> entries;  // "section.key" -> value
    std::string section;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (std::find(kSections.begin(), kSections.end(), section) == kSections.end())
                throw ConfigError(lineno, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(lineno, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw ConfigError(lineno, "expected 'key = value'");
        if (key.find('.') == std::string::npos) {
            if (section.empty())
                throw ConfigError(lineno, "key '" + key + "' appears before any [section]");
            key = section + "." + key;
        }
        entries[key] = {value, lineno};
    }

    RunConfig cfg;
    if (base) cfg.scenario = *base;
    cfg.scenario.name = base ? base->name : "custom";

    auto take = [&](const std::string& key) -> std::optional<Entry> {
        auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        Entry e = it->second;
        entries.erase(it);
        return e;
    };

    // [system]
    std::optional<FieldType> field;
    if (base) field = base->field;
    if (auto e = take("system.field")) {
        if (e->value == "scalar1d") field = FieldType::Scalar1D;
        else if (e->value == "scalar2d") field = FieldType::Scalar2D;
        else if (e->value == "scalar3d") field = FieldType::Scalar3D;
        else if (e->value == "em") field = FieldType::EM;
        else throw ConfigError(e->line, "unknown field '" + e->value + "'");
    }
    if (auto e = take("system.method")) {
        try {
            cfg.method = method_from_string(e->value);
        } catch (const std::invalid_argument& ex) {
            throw ConfigError(e->line, ex.what());
        }
    }
    if (auto e = take("system.units")) {
        if (e->value == "natural") cfg.scenario.units = UnitSystem::natural();
        else if (e->value == "si-nm-k") cfg.scenario.units = UnitSystem::si_nm_kelvin();
        else throw ConfigError(e->line, "unknown units '" + e->value + "' (natural|si-nm-k)");
    }
    if (auto e = take("system.threads")) cfg.threads = static_cast<int>(parse_long(*e, "threads"));
    if (auto e = take("system.asymptotic")) cfg.asymptotic_2d = parse_bool(*e, "asymptotic");

    if (!field) throw ConfigError(0, "no field selected (set [system] field = ...)");
    cfg.scenario.field = *field;

    // [material]
    std::optional<double> chi1, chi2;
    if (auto e = take("material.chi1")) chi1 = parse_real(*e, "chi1");
    if (auto e = take("material.chi2")) chi2 = parse_real(*e, "chi2");

    // [geometry] - keys must match the field
    auto geometry_key = [&](const std::string& k) { return take("geometry." + k); };
    switch (*field) {
        case FieldType::Scalar1D: {
            double a = 0, b = 0, c = 0, d = 0;
            bool have = false;
            if (base && base->ribbons) {
                a = base->ribbons->a;
                b = base->ribbons->b;
                c = base->ribbons->c;
                d = base->ribbons->d;
                if (!chi1) chi1 = base->ribbons->chi1;
                if (!chi2) chi2 = base->ribbons->chi2;
                have = true;
            }
            int provided = 0;
            if (auto e = geometry_key("a")) { a = parse_real(*e, "a"); ++provided; }
            if (auto e = geometry_key("b")) { b = parse_real(*e, "b"); ++provided; }
            if (auto e = geometry_key("c")) { c = parse_real(*e, "c"); ++provided; }
            if (auto e = geometry_key("d")) { d = parse_real(*e, "d"); ++provided; }
            if (!have && provided < 4)
                throw ConfigError(0, "field scalar1d needs geometry keys a, b, c, d");
            if (!chi1 || !chi2)
                throw ConfigError(0, "field scalar1d needs material chi1 and chi2");
            try {
                cfg.scenario.ribbons = geom::RibbonPair(a, b, c, d, *chi1, *chi2);
            } catch (const std::domain_error& ex) {
                throw ConfigError(0, std::string("invalid ribbon geometry: ") + ex.what());
            }
            cfg.scenario.spheres.reset();
            cfg.scenario.bodies2d.reset();
            break;
        }
        case FieldType::Scalar2D: {
            std::optional<scalar2d::PlanarBody> b1, b2;
            if (base && base->bodies2d) {
                b1 = base->bodies2d->body1;
                b2 = base->bodies2d->body2;
                if (!chi1) chi1 = base->bodies2d->chi1;
                if (!chi2) chi2 = base->bodies2d->chi2;
            }
            if (auto e = geometry_key("body1")) b1 = parse_body(*e, "body1");
            if (auto e = geometry_key("body2")) b2 = parse_body(*e, "body2");
            if (!b1 || !b2)
                throw ConfigError(0, "field scalar2d needs geometry keys body1 and body2");
            if (!chi1 || !chi2)
                throw ConfigError(0, "field scalar2d needs material chi1 and chi2");
            scalar2d::PlanarBodyPair pair{*b1, *b2, *chi1, *chi2};
            if (!(scalar2d::min_gap(pair) > 0.0))
                throw ConfigError(0, "invalid planar geometry: bodies must have a positive gap");
            cfg.scenario.bodies2d = pair;
            cfg.scenario.ribbons.reset();
            cfg.scenario.spheres.reset();
            break;
        }
        case FieldType::Scalar3D:
        case FieldType::EM: {
            double ra = 0, rb = 0, R = 0;
            bool have = false;
            if (base && base->spheres) {
                ra = base->spheres->radius_a;
                rb = base->spheres->radius_b;
                R = base->spheres->center_distance;
                if (!chi1) chi1 = base->spheres->chi1;
                if (!chi2) chi2 = base->spheres->chi2;
                have = true;
            }
            int provided = 0;
            if (auto e = geometry_key("radius_a")) { ra = parse_real(*e, "radius_a"); ++provided; }
            if (auto e = geometry_key("radius_b")) { rb = parse_real(*e, "radius_b"); ++provided; }
            if (auto e = geometry_key("center_distance")) {
                R = parse_real(*e, "center_distance");
                ++provided;
            }
            if (!have && provided < 3)
                throw ConfigError(0, "sphere fields need radius_a, radius_b, center_distance");
            if (!chi1 || !chi2)
                throw ConfigError(0, "sphere fields need material chi1 and chi2");
            try {
                cfg.scenario.spheres = geom::SpherePair(ra, rb, R, *chi1, *chi2);
            } catch (const std::domain_error& ex) {
                throw ConfigError(0, std::string("invalid sphere geometry: ") + ex.what());
            }
            cfg.scenario.ribbons.reset();
            cfg.scenario.bodies2d.reset();
            break;
        }
    }

    // [temperature]
    if (auto e = take("temperature.min")) cfg.scenario.grid.min = parse_real(*e, "min");
    if (auto e = take("temperature.max")) cfg.scenario.grid.max = parse_real(*e, "max");
    if (auto e = take("temperature.steps"))
        cfg.scenario.grid.steps = static_cast<int>(parse_long(*e, "steps"));
    if (auto e = take("temperature.scale")) {
        if (e->value == "log") cfg.scenario.grid.log_scale = true;
        else if (e->value == "linear") cfg.scenario.grid.log_scale = false;
        else throw ConfigError(e->line, "scale must be 'log' or 'linear'");
    }
    if (auto e = take("temperature.axis")) {
        if (e->value == "T") cfg.scenario.grid.z_axis = false;
        else if (e->value == "Z") cfg.scenario.grid.z_axis = true;
        else throw ConfigError(e->line, "axis must be 'T' or 'Z'");
    }
    if (cfg.scenario.grid.z_axis && cfg.scenario.field != FieldType::EM)
        throw ConfigError(0, "the Z axis applies only to the em field");
    if (!(cfg.scenario.grid.min > 0.0) || !(cfg.scenario.grid.max >= cfg.scenario.grid.min) ||
        cfg.scenario.grid.steps < 1)
        throw ConfigError(0, "temperature grid needs 0 < min <= max and steps >= 1");

    // [numerics]
    if (auto e = take("numerics.l_max")) cfg.numerics.l_max = parse_long(*e, "l_max");
    if (auto e = take("numerics.tol")) cfg.numerics.tol = parse_real(*e, "tol");
    if (auto e = take("numerics.sphere_order")) {
        cfg.numerics.sphere_polar_order = static_cast<int>(parse_long(*e, "sphere_order"));
        cfg.numerics.sphere_azimuth_order = cfg.numerics.sphere_polar_order;
    }
    if (auto e = take("numerics.body2d_order"))
        cfg.numerics.body2d_order = static_cast<int>(parse_long(*e, "body2d_order"));
    if (auto e = take("numerics.fd_step_rel")) cfg.numerics.fd_step_rel = parse_real(*e, "fd_step_rel");
    if (auto e = take("numerics.mc_samples"))
        cfg.numerics.mc_samples = static_cast<std::uint64_t>(parse_long(*e, "mc_samples"));

    // [output]
    if (auto e = take("output.path")) cfg.output_path = e->value;

    if (!entries.empty()) {
        const auto& [key, entry] = *entries.begin();
        throw ConfigError(entry.line, "unknown or inapplicable key '" + key + "'");
    }
    return cfg;
}

} // namespace casimir
