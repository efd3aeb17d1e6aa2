// main.cpp — switchqfi executable: point, sweep, joint-dump, validate.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "switchqfi/cli.hpp"

namespace {

using switchqfi::RunConfig;
using switchqfi::SweepAxisSpec;
using switchqfi::SweepSpec;

// Model/config flags whose raw strings feed build_run_config (flags win over file).
struct ConfigFlags {
    std::map<std::string, std::string> values;

    void attach(CLI::App* cmd) {
        static const char* keys[] = {"p",     "T_p", "gamma", "xi",  "rho00",
                                     "rho01", "p_c", "axis",  "tol", "threads"};
        for (const char* key : keys) {
            cmd->add_option_function<std::string>(
                std::string("--") + key,
                [this, key](const std::string& v) { values[key] = v; });
        }
    }
};

RunConfig make_config(const std::string& config_path, const ConfigFlags& flags) {
    std::map<std::string, std::string> file_kv;
    if (!config_path.empty()) file_kv = switchqfi::read_kv_file(config_path);
    return switchqfi::build_run_config(file_kv, flags.values);
}

SweepAxisSpec parse_range(const std::string& text) {
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("range: expected name=start:stop:count: '" + text + "'");
    const std::string name = text.substr(0, eq);
    const std::string rest = text.substr(eq + 1);
    const std::size_t c1 = rest.find(':');
    const std::size_t c2 = (c1 == std::string::npos) ? std::string::npos : rest.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("range: expected name=start:stop:count: '" + text + "'");
    SweepAxisSpec ax;
    ax.name = name;
    ax.start = switchqfi::parse_angle(rest.substr(0, c1));
    ax.stop = switchqfi::parse_angle(rest.substr(c1 + 1, c2 - c1 - 1));
    const long n = switchqfi::parse_integer(rest.substr(c2 + 1), "range count");
    if (n < 2) throw std::invalid_argument("range: count must be at least 2: '" + text + "'");
    ax.count = static_cast<std::size_t>(n);
    return ax;
}

std::pair<std::string, double> parse_fix(const std::string& text) {
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("fix: expected name=value: '" + text + "'");
    return {text.substr(0, eq), switchqfi::parse_angle(text.substr(eq + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"switchqfi — phase estimation through a quantum switch with thermal noise"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "flat key=value configuration file");
        cmd->add_option("--out", out_path, "output file path");
    };

    ConfigFlags point_flags;
    CLI::App* point = app.add_subcommand(
        "point", "evaluate q_c, its derivative, QFI/CFI and P± at one parameter point");
    add_common(point);
    point_flags.attach(point);

    ConfigFlags sweep_flags;
    std::string preset;
    std::vector<std::string> targets, ranges, fixes;
    std::size_t points_override = 0;
    CLI::App* sweep = app.add_subcommand("sweep", "evaluate a parameter grid into a CSV file");
    add_common(sweep);
    sweep_flags.attach(sweep);
    sweep->add_option("--preset", preset, "figure preset: fig3, fig4, fig5, fig6 or fig7");
    sweep->add_option("--target", targets,
                      "value column: qfi_control, cfi_control, q_factor or qfi_standard");
    sweep->add_option("--range", ranges, "grid axis, name=start:stop:count (xi accepts pi literals)");
    sweep->add_option("--fix", fixes, "pinned parameter, name=value");
    sweep->add_option("--points", points_override, "override preset grid resolution");

    ConfigFlags dump_flags;
    CLI::App* dump = app.add_subcommand(
        "joint-dump", "print the 4x4 joint output state, its spectrum and both reductions");
    add_common(dump);
    dump_flags.attach(dump);

    bool inject_failure = false;
    CLI::App* validate = app.add_subcommand("validate", "run the full invariant suite");
    validate->add_flag("--inject-failure", inject_failure,
                       "self-test: append a deliberately failing check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? switchqfi::cli::kExitOk : switchqfi::cli::kExitInvalidInput;
    }

    try {
        if (*point)
            return switchqfi::cli::cmd_point(make_config(config_path, point_flags), out_path,
                                             std::cout, std::cerr);
        if (*sweep) {
            SweepSpec spec;
            if (!preset.empty()) {
                spec = switchqfi::sweep_preset(preset, points_override);
            } else {
                if (points_override)
                    throw std::invalid_argument("--points applies to presets only");
                spec.targets = {"qfi_control"};
                spec.out_path = "sweep.csv";
            }
            if (!targets.empty() && preset.empty()) spec.targets = targets;
            if (!targets.empty() && !preset.empty())
                throw std::invalid_argument("--target cannot amend a preset");
            for (const std::string& r : ranges) {
                if (!preset.empty())
                    throw std::invalid_argument("--range cannot amend a preset; use --points");
                spec.axes.push_back(parse_range(r));
            }
            for (const std::string& f : fixes) {
                const auto [name, value] = parse_fix(f);
                spec.fixed[name] = value;  // user --fix overrides a preset's pin
            }
            if (!out_path.empty()) spec.out_path = out_path;
            return switchqfi::cli::cmd_sweep(spec, make_config(config_path, sweep_flags),
                                             std::cout, std::cerr);
        }
        if (*dump)
            return switchqfi::cli::cmd_joint_dump(make_config(config_path, dump_flags), out_path,
                                                  std::cout, std::cerr);
        switchqfi::ValidateOptions opt;
        opt.inject_failure = inject_failure;
        return switchqfi::cli::cmd_validate(opt, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return switchqfi::cli::kExitInvalidInput;
    }
}
