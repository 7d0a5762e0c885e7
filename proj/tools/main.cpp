#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "casimir/config.hpp"
#include "casimir/scenarios.hpp"
#include "casimir/sweep.hpp"

namespace {

int cmd_sweep(const std::string& config_path, const std::string& scenario_name,
              const std::string& method_str, const std::string& out_path,
              const std::string& units_str, int threads, int steps, double chi_product,
              bool asymptotic) {
    const casimir::Scenario* base = nullptr;
    if (!scenario_name.empty()) {
        base = casimir::find_scenario(scenario_name);
        if (!base) {
            std::cerr << "error: unknown scenario '" << scenario_name
                      << "' (run `casimir-thermo scenarios`)\n";
            return 1;
        }
    }
    casimir::RunConfig cfg;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "error: cannot read config file '" << config_path << "'\n";
                return 1;
            }
            cfg = casimir::parse_config(in, base);
        } else if (base) {
            cfg = casimir::config_from_scenario(*base);
        } else {
            std::cerr << "error: pass --scenario and/or --config\n";
            return 1;
        }
        if (!method_str.empty()) cfg.method = casimir::method_from_string(method_str);
        if (!units_str.empty()) {
            if (units_str == "natural") cfg.scenario.units = casimir::UnitSystem::natural();
            else if (units_str == "si-nm-k") cfg.scenario.units = casimir::UnitSystem::si_nm_kelvin();
            else {
                std::cerr << "error: unknown units '" << units_str << "' (natural|si-nm-k)\n";
                return 1;
            }
        }
        if (threads > 0) cfg.threads = threads;
        if (steps > 0) cfg.scenario.grid.steps = steps;
        if (asymptotic) cfg.asymptotic_2d = true;
        if (chi_product > 0.0) {
            if (!cfg.scenario.spheres) {
                std::cerr << "error: --chi-product applies to sphere-pair scenarios\n";
                return 1;
            }
            auto& s = *cfg.scenario.spheres;
            cfg.scenario.spheres = casimir::geom::SpherePair(
                s.radius_a, s.radius_b, s.center_distance, 1.0, chi_product);
        }
        if (!out_path.empty()) cfg.output_path = out_path;
    } catch (const casimir::ConfigError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    try {
        return casimir::run_sweep_to_files(cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir free energy, entropy, internal energy and force for weakly "
                 "coupled body pairs in scalar and electromagnetic fluctuating fields"};
    app.require_subcommand(1);

    std::string config_path, scenario_name, method_str, out_path, units_str;
    int threads = 0, steps = 0;
    double chi_product = 0.0;
    bool asymptotic = false;

    auto* sweep = app.add_subcommand("sweep", "temperature / Z sweep to CSV");
    sweep->add_option("--config", config_path, "config file (section.key = value grammar)");
    sweep->add_option("--scenario", scenario_name, "built-in scenario name");
    sweep->add_option("--method", method_str, "closed|oracle|series|both");
    sweep->add_option("--out", out_path, "output CSV path (stdout when omitted)");
    sweep->add_option("--units", units_str, "natural|si-nm-k (nm lengths, kelvin temperatures)");
    sweep->add_option("--threads", threads, "worker count (0 = hardware)");
    sweep->add_option("--steps", steps, "override the grid step count");
    sweep->add_option("--chi-product", chi_product, "set chi1*chi2 for sphere scenarios");
    sweep->add_flag("--asymptotic", asymptotic,
                    "scalar2d: report the resummed asymptotic entropy instead of the exact sum");

    std::string report_path = "validation-report.txt";
    auto* validate = app.add_subcommand("validate", "run the oracle validation suite");
    validate->add_option("--out", report_path, "report path ('-' for stdout)");

    auto* scen = app.add_subcommand("scenarios", "list built-in scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help/version exit with 0 through CLI11; anything else is usage error
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (sweep->parsed())
        return cmd_sweep(config_path, scenario_name, method_str, out_path, units_str, threads,
                         steps, chi_product, asymptotic);
    if (validate->parsed()) {
        try {
            return casimir::run_validation(report_path, casimir::oracle::Numerics{});
        } catch (const std::exception& ex) {
            std::cerr << "error: " << ex.what() << '\n';
            return 1;
        }
    }
    if (scen->parsed()) {
        for (const auto& s : casimir::builtin_scenarios()) {
            std::cout << s.name << "  field=" << casimir::to_string(s.field) << "  axis="
                      << (s.grid.z_axis ? "Z" : "T") << " [" << s.grid.min << ", " << s.grid.max
                      << "] steps=" << s.grid.steps << (s.grid.log_scale ? " log" : " linear")
                      << '\n';
        }
        return 0;
    }
    return 1;
}
