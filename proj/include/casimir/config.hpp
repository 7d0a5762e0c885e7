#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "casimir/oracle.hpp"
#include "casimir/scenarios.hpp"

namespace casimir {

enum class Method { Closed, Oracle, Series, Both };

std::string to_string(Method m);
Method method_from_string(const std::string& s);  // throws std::invalid_argument

struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_, const std::string& message);
};

struct RunConfig {
    Scenario scenario;
    Method method = Method::Closed;
    oracle::Numerics numerics;
    std::string output_path;   // empty -> stdout
    int threads = 0;           // 0 -> hardware concurrency
    bool asymptotic_2d = false;
};

RunConfig config_from_scenario(const Scenario& scenario);

/// Parses the line-oriented config grammar:
///   sections [system] [geometry] [material] [temperature] [numerics] [output],
///   `key = value` entries, `#` comments; `section.key = value` is accepted
///   outside sections.  Geometry keys must match the selected field type.
/// When `base` is given its parameters pre-fill the config and the file
/// overrides individual keys.  Throws ConfigError with a line number.
RunConfig parse_config(std::istream& in, const Scenario* base = nullptr);

} // namespace casimir
