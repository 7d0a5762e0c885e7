#pragma once

#include <iosfwd>
#include <string>

#include "casimir/config.hpp"
#include "casimir/thermo.hpp"

namespace casimir {

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

/// State point for one grid value under the configured method.
thermo::ThermoPoint sweep_point(const RunConfig& cfg, Method method, double axis_value);

/// Renders the whole sweep as CSV: header `T,E_self,E_int,E_total,S,U,F,status`
/// (first column `Z` on the Z axis), one row per grid point, rows computed in
/// parallel but emitted in grid order.  Returns 0 on success, 2 if any row
/// failed to converge (rows are still written, flagged in `status`).
int run_sweep(const RunConfig& cfg, Method method, std::ostream& out);

/// Entry point used by the CLI: resolves the output file (stdout when the
/// path is empty) and, for method `both`, writes the oracle pass next to the
/// main file with an `-oracle` suffix.  Returns the process exit code
/// (0 ok, 1 usage/filesystem, 2 non-convergence).
int run_sweep_to_files(const RunConfig& cfg);

/// Runs the validation suite and writes the report; returns 0 iff no record
/// failed (documented deviations do not fail), 1 on filesystem errors.
int run_validation(const std::string& out_path, const oracle::Numerics& numerics);

} // namespace casimir
