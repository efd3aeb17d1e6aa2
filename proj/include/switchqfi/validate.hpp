// validate.hpp — Cross-module invariant suite behind `switchqfi validate`.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace switchqfi {

struct CheckResult {
    std::string name;
    double worst;  // observed worst-case deviation
    double bound;  // tolerance the deviation is held to
    bool pass;
    std::string note;
};

struct ValidateOptions {
    bool inject_failure = false;  // self-test hook: appends a deliberately failing check
    std::uint64_t seed = 0x5eedULL;
};

// Runs every module's invariant checks; deterministic for a fixed seed.
std::vector<CheckResult> run_validation_suite(const ValidateOptions& opt = {});

}  // namespace switchqfi
