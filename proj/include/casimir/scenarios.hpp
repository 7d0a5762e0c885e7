#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/scalar2d.hpp"
#include "casimir/units.hpp"

namespace casimir {

enum class FieldType { Scalar1D, Scalar2D, Scalar3D, EM };

std::string to_string(FieldType f);

/// Sweep axis.  When z_axis is set (EM sphere pairs) the grid runs over
/// Z = 4 pi R T instead of T.
struct SweepGrid {
    double min = 0.0;
    double max = 0.0;
    int steps = 200;
    bool log_scale = true;
    bool z_axis = false;

    std::vector<double> points() const;
};

struct Scenario {
    std::string name;
    FieldType field = FieldType::Scalar1D;
    std::optional<geom::RibbonPair> ribbons;
    std::optional<scalar2d::PlanarBodyPair> bodies2d;
    std::optional<geom::SpherePair> spheres;
    SweepGrid grid;
    UnitSystem units = UnitSystem::natural();
};

/// The built-in parameter sets behind the named sweeps (ribbon pairs,
/// sphere pairs, and the disk benchmark).
const std::vector<Scenario>& builtin_scenarios();

/// Looks a scenario up by name; returns nullptr when absent.
const Scenario* find_scenario(std::string_view name);

} // namespace casimir
