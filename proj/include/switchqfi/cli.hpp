// cli.hpp — Subcommand implementations behind the switchqfi executable.

#pragma once

#include <iosfwd>
#include <string>

#include "switchqfi/config.hpp"
#include "switchqfi/sweep.hpp"
#include "switchqfi/validate.hpp"

namespace switchqfi::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitIoError = 3;

// Evaluates the closed-form Fisher quantities at one parameter point and
// prints them as key=value lines; optionally also writes a single-row CSV.
int cmd_point(const RunConfig& cfg, const std::string& out_csv, std::ostream& out,
              std::ostream& err);

// Runs the sweep and writes its CSV (atomically) to spec.out_path.
int cmd_sweep(const SweepSpec& spec, const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Prints the 4x4 joint state (any unitary axis; generic path), its
// eigenvalues and both reductions; optionally writes the block to a file.
int cmd_joint_dump(const RunConfig& cfg, const std::string& out_text, std::ostream& out,
                   std::ostream& err);

// Runs the invariant suite; one line per check, exit 0 iff all pass.
int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace switchqfi::cli
