// cli.cpp — point / sweep / joint-dump / validate subcommand bodies.

#include "switchqfi/cli.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "switchqfi/metrology.hpp"

namespace switchqfi::cli {

namespace {

int run_guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}

void warn_subthermal(double p, std::ostream& err) {
    if (p < 0.5)
        err << "warning: p < 1/2 (T_p > 1) has no thermal interpretation; "
               "proceeding for exploratory use\n";
}

std::string complex_entry(const cdouble& v) {
    return format_value(v.real()) + (v.imag() < 0.0 ? "-" : "+") +
           format_value(std::abs(v.imag())) + "i";
}

void print_matrix(std::ostream& out, const CMatrix& m, const char* indent) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out << indent;
        for (std::size_t j = 0; j < m.dim(); ++j)
            out << complex_entry(m(i, j)) << (j + 1 < m.dim() ? "  " : "");
        out << "\n";
    }
}

}  // namespace

int cmd_point(const RunConfig& cfg, const std::string& out_csv, std::ostream& out,
              std::ostream& err) {
    return run_guarded(err, [&]() {
        warn_subthermal(cfg.p, err);
        const UnitaryParams u(cfg.axis, cfg.xi);
        if (!u.is_z_axis())
            throw std::invalid_argument(
                "point evaluates closed forms that require axis = e_z; "
                "use joint-dump for other axes");
        DensityOperator::qubit(cfg.rho00, cfg.rho01, cfg.tol);  // probe must be a valid state

        const ThermalNoiseParams noise(cfg.p, cfg.gamma);
        const FisherReport rep = fisher_report(noise, u.xi, cfg.rho00, cfg.p_c);

        const std::vector<std::pair<std::string, double>> fields = {
            {"p", cfg.p},
            {"T_p", noise.effective_temperature()},
            {"gamma", cfg.gamma},
            {"xi", u.xi},
            {"rho00", cfg.rho00},
            {"rho01_re", cfg.rho01.real()},
            {"rho01_im", cfg.rho01.imag()},
            {"p_c", cfg.p_c},
            {"q_c", rep.q_c},
            {"dq_c", rep.dq_c},
            {"fq_con", rep.fq_con},
            {"fc_con", rep.fc_con},
            {"p_plus", rep.p_plus},
            {"p_minus", rep.p_minus},
        };
        for (const auto& [key, value] : fields) out << key << "=" << format_value(value) << "\n";

        if (!out_csv.empty()) {
            std::string header, row;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                header += fields[i].first + (i + 1 < fields.size() ? "," : "");
                row += format_value(fields[i].second) + (i + 1 < fields.size() ? "," : "");
            }
            write_file_atomic(out_csv, header + "\n" + row + "\n");
        }
        return kExitOk;
    });
}

int cmd_sweep(const SweepSpec& spec, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        double min_p = cfg.p;
        for (const SweepAxisSpec& ax : spec.axes) {
            if (ax.name == "p") min_p = std::min({min_p, ax.start, ax.stop});
            if (ax.name == "T_p")
                min_p = std::min({min_p, 1.0 - 0.5 * ax.start, 1.0 - 0.5 * ax.stop});
        }
        for (const auto& [name, value] : spec.fixed) {
            if (name == "p") min_p = std::min(min_p, value);
            if (name == "T_p") min_p = std::min(min_p, 1.0 - 0.5 * value);
        }
        warn_subthermal(min_p, err);

        if (spec.out_path.empty()) throw std::invalid_argument("sweep: no output path");
        const std::string csv = render_sweep_csv(spec, cfg, cfg.threads);
        write_file_atomic(spec.out_path, csv);

        std::size_t rows = 1;
        for (const SweepAxisSpec& ax : spec.axes) rows *= ax.count;
        out << "wrote " << spec.out_path << " (" << rows << " rows)\n";
        return kExitOk;
    });
}

int cmd_joint_dump(const RunConfig& cfg, const std::string& out_text, std::ostream& out,
                   std::ostream& err) {
    return run_guarded(err, [&]() {
        warn_subthermal(cfg.p, err);
        const ThermalNoiseParams noise(cfg.p, cfg.gamma);
        const UnitaryParams u(cfg.axis, cfg.xi);
        const DensityOperator rho = DensityOperator::qubit(cfg.rho00, cfg.rho01, cfg.tol);
        const ControlState ctrl = ControlState::pure(cfg.p_c, cfg.tol);
        const SwitchOutput sw =
            apply_switch_generic(noisy_unitary_channel(noise, u), rho, ctrl);

        std::ostringstream block;
        block << "# joint probe-control output state S(rho (x) rho_c)\n"
              << "# basis: control-major, joint index = 2*control + probe\n"
              << "p=" << format_value(cfg.p) << " gamma=" << format_value(cfg.gamma)
              << " xi=" << format_value(u.xi) << " axis=" << format_value(u.axis.x) << ","
              << format_value(u.axis.y) << "," << format_value(u.axis.z)
              << " rho00=" << format_value(cfg.rho00) << " p_c=" << format_value(cfg.p_c) << "\n";
        block << "joint:\n";
        print_matrix(block, sw.joint.mat(), "  ");

        const EigenSystem es = hermitian_eig(sw.joint.mat(), cfg.tol);
        block << "eigenvalues:";
        for (const double v : es.values) block << " " << format_value(v);
        block << "\n";

        block << "reduced_probe:\n";
        print_matrix(block, partial_trace(sw.joint.mat(), Subsystem::probe), "  ");
        block << "reduced_control:\n";
        print_matrix(block, partial_trace(sw.joint.mat(), Subsystem::control), "  ");
        block << "q_c=" << format_value(sw.q_c) << "\n";

        out << block.str();
        if (!out_text.empty()) write_file_atomic(out_text, block.str());
        return kExitOk;
    });
}

int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        const std::vector<CheckResult> results = run_validation_suite(opt);
        std::size_t passed = 0;
        for (const CheckResult& r : results) {
            out << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(44) << r.name
                << " worst " << std::scientific << std::setprecision(2) << r.worst
                << "  bound " << r.bound << std::defaultfloat;
            if (!r.note.empty()) out << "  (" << r.note << ")";
            out << "\n";
            passed += r.pass ? 1 : 0;
        }
        out << passed << "/" << results.size() << " checks passed\n";
        return passed == results.size() ? kExitOk : kExitValidationFailure;
    });
}

}  // namespace switchqfi::cli
