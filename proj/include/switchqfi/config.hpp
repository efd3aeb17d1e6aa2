// config.hpp — Flat key=value run configuration shared by the CLI subcommands.

#pragma once

#include <map>
#include <string>

#include "switchqfi/linalg.hpp"

namespace switchqfi {

// One parameter point plus execution settings. Defaults reproduce the central
// worked example: p = 1, gamma = 1/2, xi = pi/4, probe |1><1|, even control.
struct RunConfig {
    double p = 1.0;
    double gamma = 0.5;
    double xi = 0.0;  // set to pi/4 by make_default()
    double rho00 = 0.0;
    cdouble rho01{0.0, 0.0};
    double p_c = 0.5;
    Vec3 axis{0.0, 0.0, 1.0};
    double tol = kDefaultTol;
    unsigned threads = 0;  // 0 = all available cores

    static RunConfig make_default();
};

// Reads a config file of `key = value` lines; '#' starts a comment, blank
// lines are ignored. Throws std::invalid_argument if the file is unreadable
// or malformed.
std::map<std::string, std::string> read_kv_file(const std::string& path);

double parse_real(const std::string& text, const std::string& what);
long parse_integer(const std::string& text, const std::string& what);

// Angles accept plain reals plus pi literals: "pi", "pi/4", "3pi/2", "-pi",
// "0.5pi", "3*pi/4".
double parse_angle(const std::string& text);

// "x,y,z"; any nonzero vector is accepted and normalized.
Vec3 parse_axis(const std::string& text);

// "re" or "re,im".
cdouble parse_complex_pair(const std::string& text);

// Merges file and flag settings (flags win per key) into a validated config.
// Recognized keys: p, T_p, gamma, xi, rho00, rho01, p_c, axis, tol, threads.
// Specifying both p and T_p is an error.
RunConfig build_run_config(const std::map<std::string, std::string>& file_kv,
                           const std::map<std::string, std::string>& flag_kv);

}  // namespace switchqfi
