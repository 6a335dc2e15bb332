// io.hpp — config parsing, CSV/JSON serialization, command pipelines
#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gainomech/cooling.hpp"
#include "gainomech/phonon.hpp"

namespace gainomech {

enum class OutputFormat { Csv, Json };

// Flat key = value configuration. Physical keys mirror LaserParams /
// MechanicsParams / DriveSpec; the rest steer individual commands.
struct RunConfig {
    LaserParams laser;
    MechanicsParams mech;
    DriveSpec drive;

    Model model = Model::Seeded;
    Method method = Method::Matrix;
    bool include_fpar = true;
    std::optional<int> root_index;

    int grid_points = 2048;
    std::optional<double> omega_min; // explicit linear grid overrides default
    std::optional<double> omega_max;

    std::string sweep_param;         // "D0", "G", "omega_m", "n_target"
    double sweep_min = 0.0;
    double sweep_max = 0.0;
    int sweep_points = 0;
    bool sweep_log = false;

    double d0_lo = 0.0;              // optimize-pump bounds (0 = auto)
    double d0_hi = 0.0;

    OutputFormat format = OutputFormat::Csv;
    std::string output;              // output path ("" = stdout)
};

// Parse `key = value` lines with `#` comments. Rejects unknown and duplicate
// keys (ParseError with line number) and enforces parameter invariants
// (ValidationError).
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// A table with `#` metadata lines, a header row, and rows of 17-significant-
// digit numeric cells. Serialization is deterministic.
struct Table {
    std::vector<std::string> metadata; // without the leading "# "
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string format_double(double v); // %.17g
void write_table(std::ostream& os, const Table& table, OutputFormat format);
void write_output(const RunConfig& cfg, const Table& table);

// Metadata block shared by every command: tool version, resolved parameters,
// derived working point.
std::vector<std::string> describe(const RunConfig& cfg, const WorkingPoint& wp);

// Command pipelines; each returns the table it wrote.
Table cmd_derive(const RunConfig& cfg);
Table cmd_steady_state(const RunConfig& cfg);
Table cmd_spectrum(const RunConfig& cfg);
Table cmd_cooling(const RunConfig& cfg);
Table cmd_phonon_spectrum(const RunConfig& cfg);
Table cmd_sweep(const RunConfig& cfg);
Table cmd_optimize_pump(const RunConfig& cfg);
Table cmd_figure(const RunConfig& cfg, const std::string& which); // 1,2,3a,3b,4,5

// Exit-code mapping: 0 success, 2 parse/validation, 3 physics, 4 convergence.
int exit_code_for(const Error& err);

} // namespace gainomech
