// sweep.hpp — Parameter grid sweeps with deterministic CSV output.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "switchqfi/config.hpp"

namespace switchqfi {

struct SweepAxisSpec {
    std::string name;  // p | T_p | gamma | xi | rho00 | p_c
    double start;
    double stop;
    std::size_t count;  // >= 2
};

// A sweep evaluates one or more targets on the cartesian grid of its axes;
// parameters that are neither axes nor fixed fall back to the run config.
struct SweepSpec {
    std::vector<std::string> targets;  // qfi_control | cfi_control | q_factor | qfi_standard
    std::vector<SweepAxisSpec> axes;
    std::map<std::string, double> fixed;
    std::string out_path;
};

// Figure presets:
//   fig3  qfi_control over T_p x gamma at rho00 = 1,   xi = pi/4   (51x51)
//   fig4  same at rho00 = 0
//   fig5  same at rho00 = 1/2
//   fig6  qfi_control plus the standard-channel reference over p x gamma,
//         p in {1, 0.9, ..., 0.5}, rho00 = 0, xi = pi/4             (101 gammas)
//   fig7  qfi_control over p x rho00, p in {1, 0.75, 0.5}, gamma = 1/2 (101 points)
const std::vector<std::string>& sweep_preset_names();
SweepSpec sweep_preset(const std::string& name, std::size_t points_override = 0);

// Grid value i of a linspace with the given endpoints (endpoints exact).
double linspace_value(double start, double stop, std::size_t count, std::size_t i);

// 12 significant digits, C locale, signed zeros normalized.
std::string format_value(double v);

// Column header used for a target's values in the CSV.
std::string target_column(const std::string& target);

// Evaluates the grid in lexicographic axis order and returns the CSV text:
// header row of axis names then target columns, ',' separators, '\n' endings.
// Throws std::invalid_argument for spec violations.
std::string render_sweep_csv(const SweepSpec& spec, const RunConfig& defaults, unsigned threads);

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes via a temp file in the target directory, then renames into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace switchqfi
