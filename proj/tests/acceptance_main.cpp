// acceptance_main.cpp — End-to-end acceptance suite: one pass/fail line per criterion.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "switchqfi/cli.hpp"
#include "switchqfi/metrology.hpp"

using namespace switchqfi;

namespace {

constexpr double kPi = std::numbers::pi;
const Vec3 kEz{0.0, 0.0, 1.0};

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Rng {
    std::mt19937_64 gen{0xacce97ULL};
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    cdouble rho01_for(double rho00) {
        const double cap = std::sqrt(std::max(0.0, rho00 * (1.0 - rho00)));
        return std::polar(uniform(0.0, 1.0) * cap, uniform(0.0, 2.0 * kPi));
    }
};

// ---------------------------------------------------------------------------
// Criterion 1: closed forms against the generic Kraus-sum oracle on the full
// (p, gamma, xi, rho00) grid with random coherences, in under 30 s.
Outcome criterion_closed_vs_generic() {
    Rng rng;
    const auto start = std::chrono::steady_clock::now();
    const double fd_step = 1e-4;  // fourth-order stencil for the dq oracle
    double worst_q = 0.0, worst_dq = 0.0, worst_s00 = 0.0, worst_s01 = 0.0;

    for (int ip = 0; ip <= 20; ++ip)
        for (int ig = 0; ig <= 20; ++ig) {
            const ThermalNoiseParams noise(ip / 20.0, ig / 20.0);
            for (int ix = 0; ix < 16; ++ix) {
                const double xi = ix * (2.0 * kPi / 16.0);
                const KrausChannel ch = noisy_unitary_channel(noise, UnitaryParams(kEz, xi));
                const KrausChannel stencil[4] = {
                    noisy_unitary_channel(noise, UnitaryParams(kEz, xi - 2.0 * fd_step)),
                    noisy_unitary_channel(noise, UnitaryParams(kEz, xi - fd_step)),
                    noisy_unitary_channel(noise, UnitaryParams(kEz, xi + fd_step)),
                    noisy_unitary_channel(noise, UnitaryParams(kEz, xi + 2.0 * fd_step))};
                for (int ir = 0; ir <= 10; ++ir) {
                    const double rho00 = ir / 10.0;
                    const DensityOperator rho =
                        DensityOperator::qubit(rho00, rng.rho01_for(rho00));
                    const CMatrix s01g = s01_generic(ch, ch, rho.mat());
                    worst_q = std::max(
                        worst_q, std::abs(q_factor(noise, xi, rho00) - trace(s01g).real()));
                    worst_s00 = std::max(
                        worst_s00,
                        max_abs_diff(s00_closed(noise, xi, rho), s00_generic(ch, ch, rho.mat())));
                    worst_s01 =
                        std::max(worst_s01, max_abs_diff(s01_closed(noise, xi, rho), s01g));
                    double fs[4];
                    for (int k = 0; k < 4; ++k)
                        fs[k] = trace(s01_generic(stencil[k], stencil[k], rho.mat())).real();
                    const double fd =
                        (fs[0] - 8.0 * fs[1] + 8.0 * fs[2] - fs[3]) / (12.0 * fd_step);
                    worst_dq = std::max(worst_dq, std::abs(dq_factor(noise, xi, rho00) - fd));
                }
            }
        }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double worst = std::max({worst_q, worst_dq, worst_s00, worst_s01});
    return {worst <= 1e-10 && seconds < 30.0,
            "worst dev " + fmt(worst) + " (q " + fmt(worst_q) + ", dq " + fmt(worst_dq) +
                ", s00 " + fmt(worst_s00) + ", s01 " + fmt(worst_s01) + ") in " + fmt(seconds) +
                " s"};
}

// Criterion 2: qfi_control equals the spectral QFI of the generically built
// control family on a 9x9x8 grid for rho00 in {0, 1/2, 1}.
Outcome criterion_spectral_cross_check() {
    double worst = 0.0;
    for (int ip = 0; ip < 9; ++ip)
        for (int ig = 0; ig < 9; ++ig)
            for (int ix = 0; ix < 8; ++ix)
                for (const double rho00 : {0.0, 0.5, 1.0}) {
                    const ThermalNoiseParams noise(ip / 8.0, ig / 8.0);
                    const double xi = ix * (2.0 * kPi / 8.0);
                    const StateFamily family = [&](double x) {
                        const KrausChannel ch =
                            noisy_unitary_channel(noise, UnitaryParams(kEz, x));
                        const SwitchOutput sw = apply_switch_generic(
                            ch, DensityOperator::qubit(rho00, 0.0), ControlState::pure(0.5));
                        return DensityOperator(
                            partial_trace(sw.joint.mat(), Subsystem::control));
                    };
                    worst = std::max(worst, std::abs(qfi_spectral(family, xi) -
                                                     qfi_control(noise, xi, rho00, 0.5)));
                }
    return {worst <= 1e-6, "worst |spectral - closed| " + fmt(worst)};
}

// Criterion 3: the worked point p=1, gamma=1/2, rho00=0, xi=pi/4, p_c=1/2.
Outcome criterion_worked_point() {
    const ThermalNoiseParams noise(1.0, 0.5);
    const double xi = kPi / 4.0;
    const FisherReport rep = fisher_report(noise, xi, 0.0, 0.5);
    const StateFamily family = [&](double x) {
        const KrausChannel ch = noisy_unitary_channel(noise, UnitaryParams(kEz, x));
        const SwitchOutput sw = apply_switch_generic(ch, DensityOperator::qubit(0.0, 0.0),
                                                     ControlState::pure(0.5));
        return DensityOperator(partial_trace(sw.joint.mat(), Subsystem::control));
    };
    const double spectral = qfi_spectral(family, xi);

    const bool pass = std::abs(rep.q_c - 0.75) <= 1e-12 && std::abs(rep.dq_c + 0.5) <= 1e-12 &&
                      std::abs(rep.fq_con - 4.0 / 7.0) <= 1e-12 &&
                      std::abs(spectral - 4.0 / 7.0) <= 1e-6 &&
                      std::abs(rep.p_plus - 0.875) <= 1e-12 &&
                      std::abs(rep.p_minus - 0.125) <= 1e-12;
    return {pass, "q_c " + fmt(rep.q_c) + ", dq " + fmt(rep.dq_c) + ", F " + fmt(rep.fq_con) +
                      " (spectral " + fmt(spectral) + "), P+ " + fmt(rep.p_plus)};
}

// Criterion 4: F/(2(1-gamma)) -> 1 as p, gamma -> 1.
Outcome criterion_asymptote() {
    const double gamma = 0.999;
    const double ratio =
        qfi_control(ThermalNoiseParams(1.0, gamma), kPi / 4.0, 0.0, 0.5) / (2.0 * (1.0 - gamma));
    return {ratio >= 0.98 && ratio <= 1.02, "F / 2(1-gamma) = " + fmt(ratio) + " at gamma 0.999"};
}

// Criterion 5: the standard channel at its optimum scores exactly 1 - gamma.
Outcome criterion_standard_benchmark() {
    double worst = 0.0;
    for (int ig = 0; ig <= 10; ++ig)
        for (int ix = 0; ix < 8; ++ix)
            for (const double p : {0.5, 0.75, 1.0}) {
                const double g = ig / 10.0;
                const double f =
                    qfi_standard({{1.0, 0.0, 0.0}, UnitaryParams(kEz, ix * (2.0 * kPi / 8.0)),
                                  ThermalNoiseParams(p, g)});
                worst = std::max(worst, std::abs(f - (1.0 - g)));
            }
    return {worst <= 1e-9, "worst |F - (1-gamma)| " + fmt(worst)};
}

// Criterion 6: aligned or depolarized probes blind the standard channel while
// the control qubit keeps a strictly positive Fisher information.
Outcome criterion_inoperative_contrast() {
    double worst_std = 0.0;
    for (const Vec3 r : {Vec3{0.0, 0.0, 1.0}, Vec3{0.0, 0.0, -1.0}, Vec3{0.0, 0.0, 0.0}})
        for (const double g : {0.0, 0.25, 0.5, 0.9})
            worst_std = std::max(worst_std, qfi_standard({r, UnitaryParams(kEz, kPi / 4.0),
                                                          ThermalNoiseParams(0.75, g)}));
    double min_con = 1.0;
    for (const double rho00 : {0.0, 0.5, 1.0})
        min_con =
            std::min(min_con, qfi_control(ThermalNoiseParams(0.75, 0.5), kPi / 4.0, rho00, 0.5));
    return {worst_std == 0.0 && min_con > 1e-4,
            "standard " + fmt(worst_std) + " exactly, control >= " + fmt(min_con)};
}

// Criterion 7: at p=1, gamma=0.9 the control beats the standard optimum.
Outcome criterion_crossover() {
    const ThermalNoiseParams noise(1.0, 0.9);
    const double f = qfi_control(noise, kPi / 4.0, 0.0, 0.5);
    const StateFamily family = [&](double x) {
        const KrausChannel ch = noisy_unitary_channel(noise, UnitaryParams(kEz, x));
        const SwitchOutput sw = apply_switch_generic(ch, DensityOperator::qubit(0.0, 0.0),
                                                     ControlState::pure(0.5));
        return DensityOperator(partial_trace(sw.joint.mat(), Subsystem::control));
    };
    const double spectral = qfi_spectral(family, kPi / 4.0);
    const bool pass =
        std::abs(f - 0.195) <= 5e-3 && f > 0.1 && std::abs(f - spectral) <= 1e-6;
    return {pass, "F " + fmt(f) + " vs 1-gamma = 0.1 (spectral " + fmt(spectral) + ")"};
}

// Criterion 8: monotonicity in rho00 at gamma = 1/2, and the opposite T_p
// trends of the rho00 = 1 and rho00 = 0 surfaces.
Outcome criterion_monotonicity() {
    double worst_up = 0.0;  // any increase along rho00 is a violation
    for (const double p : {1.0, 0.75, 0.5}) {
        double prev = qfi_control(ThermalNoiseParams(p, 0.5), kPi / 4.0, 0.0, 0.5);
        for (int i = 1; i <= 100; ++i) {
            const double f = qfi_control(ThermalNoiseParams(p, 0.5), kPi / 4.0, i / 100.0, 0.5);
            worst_up = std::max(worst_up, f - prev);
            prev = f;
        }
    }

    double worst_tp = 0.0;
    for (const double rho00 : {1.0, 0.0}) {
        double prev = qfi_control(ThermalNoiseParams::from_effective_temperature(0.0, 0.5),
                                  kPi / 4.0, rho00, 0.5);
        for (int i = 1; i <= 100; ++i) {
            const double f = qfi_control(
                ThermalNoiseParams::from_effective_temperature(i / 100.0, 0.5), kPi / 4.0,
                rho00, 0.5);
            // rising with T_p at rho00 = 1, falling at rho00 = 0
            worst_tp = std::max(worst_tp, rho00 == 1.0 ? prev - f : f - prev);
            prev = f;
        }
    }
    return {worst_up <= 1e-12 && worst_tp <= 1e-12,
            "rho00 trend dev " + fmt(worst_up) + ", T_p trend dev " + fmt(worst_tp)};
}

// Criterion 9: exact boundary zeros plus an interior gamma maximum per curve.
Outcome criterion_boundary_zeros() {
    double worst = 0.0;
    for (const double rho00 : {0.0, 0.5, 1.0}) {
        worst = std::max(worst, qfi_control(ThermalNoiseParams(0.8, 0.0), kPi / 4.0, rho00, 0.5));
        worst = std::max(worst, qfi_control(ThermalNoiseParams(0.8, 1.0), kPi / 4.0, rho00, 0.5));
        worst = std::max(worst, qfi_control(ThermalNoiseParams(0.8, 0.5), 0.0, rho00, 0.5));
        worst = std::max(worst, qfi_control(ThermalNoiseParams(0.8, 0.5), kPi, rho00, 0.5));
        worst = std::max(worst, qfi_control(ThermalNoiseParams(0.8, 0.5), kPi / 4.0, rho00, 0.0));
        worst = std::max(worst, qfi_control(ThermalNoiseParams(0.8, 0.5), kPi / 4.0, rho00, 1.0));
    }

    bool interior = true;
    for (int k = 0; k < 6; ++k) {
        const double p = 1.0 - 0.1 * k;
        std::size_t argmax = 0;
        double best = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double f = qfi_control(ThermalNoiseParams(p, i / 100.0), kPi / 4.0, 0.0, 0.5);
            if (f > best) {
                best = f;
                argmax = static_cast<std::size_t>(i);
            }
        }
        interior = interior && argmax > 0 && argmax < 100;
    }
    return {worst == 0.0 && interior,
            "boundary zeros exact (worst " + fmt(worst) + "), gamma argmax interior"};
}

// Criterion 10: Hadamard measurement optimality and conditional states.
Outcome criterion_measurement_optimality() {
    Rng rng;
    double worst_eq = 0.0, worst_tr = 0.0, worst_sum = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const ThermalNoiseParams noise(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
        const double xi = rng.uniform(0.0, 2.0 * kPi);
        const double rho00 = rng.uniform(0.0, 1.0);
        const double q = q_factor(noise, xi, rho00);
        const double dq = dq_factor(noise, xi, rho00);
        worst_eq = std::max(worst_eq, std::abs(cfi_control(0.5, q, dq) -
                                               qfi_control(noise, xi, rho00, 0.5)));
    }
    for (int it = 0; it < 100; ++it) {
        const ThermalNoiseParams noise(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
        const double xi = rng.uniform(0.0, 2.0 * kPi);
        const double rho00 = rng.uniform(0.0, 1.0);
        const double p_c = rng.uniform(0.05, 0.95);
        const KrausChannel ch = noisy_unitary_channel(noise, UnitaryParams(kEz, xi));
        const SwitchOutput sw = apply_switch_generic(
            ch, DensityOperator::qubit(rho00, rng.rho01_for(rho00)), ControlState::pure(p_c));
        const PostMeasurement pm = post_measurement_states(sw, p_c);  // validates rho_±^post
        const auto [p_plus, p_minus] = hadamard_probs(p_c, sw.q_c);
        worst_tr = std::max({worst_tr, std::abs(pm.p_plus - p_plus),
                             std::abs(pm.p_minus - p_minus)});
        worst_sum = std::max(worst_sum, std::abs(pm.p_plus + pm.p_minus - 1.0));
    }
    return {worst_eq <= 1e-12 && worst_tr <= 1e-12 && worst_sum <= 1e-12,
            "cfi=qfi dev " + fmt(worst_eq) + ", trace dev " + fmt(worst_tr)};
}

// Criterion 11: structural invariants of the switched channel and joint state.
Outcome criterion_structural() {
    Rng rng;
    double worst_comp = 0.0, worst_joint = 0.0, worst_red = 0.0, worst_mixed = 0.0;
    for (int it = 0; it < 60; ++it) {
        const ThermalNoiseParams noise(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
        const double xi = rng.uniform(0.0, 2.0 * kPi);
        const KrausChannel ch = noisy_unitary_channel(noise, UnitaryParams(kEz, xi));

        const KrausChannel sw = switch_kraus(ch, ch);
        CMatrix sum(4);
        for (const CMatrix& k : sw.ops()) sum += adjoint(k) * k;
        worst_comp = std::max(worst_comp, max_abs_diff(sum, CMatrix::identity(4)));

        const double rho00 = rng.uniform(0.0, 1.0);
        const DensityOperator rho = DensityOperator::qubit(rho00, rng.rho01_for(rho00));
        const SwitchOutput out =
            apply_switch_generic(ch, rho, ControlState::pure(rng.uniform(0.0, 1.0)));

        const CMatrix& joint = out.joint.mat();
        double dev = max_abs_diff(joint, adjoint(joint));
        dev = std::max(dev, std::abs(trace(joint).real() - 1.0));
        dev = std::max(dev, -hermitian_eig(joint, 1e-9).values.front());
        worst_joint = std::max(worst_joint, dev);

        worst_red = std::max(worst_red,
                             max_abs_diff(partial_trace(joint, Subsystem::probe), out.s00));

        // Mixed control: the off-diagonal of the reduced control is <0|rho_c|1> q_c.
        CMatrix g(2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                g(i, j) = cdouble(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        CMatrix rc = g * adjoint(g);
        rc = (1.0 / trace(rc).real()) * rc;
        const DensityOperator mixed_joint =
            joint_state_general(ch, rho, DensityOperator(rc));
        const CMatrix reduced = partial_trace(mixed_joint.mat(), Subsystem::control);
        worst_mixed =
            std::max(worst_mixed, std::abs(reduced(0, 1) - rc(0, 1) * cdouble(out.q_c)));
    }
    const bool pass = worst_comp <= 1e-12 && worst_joint <= 1e-10 && worst_red <= 1e-12 &&
                      worst_mixed <= 1e-12;
    return {pass, "completeness " + fmt(worst_comp) + ", joint " + fmt(worst_joint) +
                      ", reduction " + fmt(worst_red) + ", mixed-control " + fmt(worst_mixed)};
}

// ---------------------------------------------------------------------------
// Criterion 12: the shipped executable, end to end.

int run_cli(const std::string& cli, const std::string& args, const std::string& log) {
    const std::string cmd = "\"" + cli + "\" " + args + " > \"" + log + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string find_line_value(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
    return {};
}

// CSV field at `column` of the first row starting with `prefix`.
std::string find_csv_field(const std::string& csv, const std::string& prefix,
                           std::size_t column) {
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) != 0) continue;
        std::size_t begin = 0;
        for (std::size_t c = 0; c < column; ++c) begin = line.find(',', begin) + 1;
        const std::size_t end = line.find(',', begin);
        return line.substr(begin, end == std::string::npos ? end : end - begin);
    }
    return {};
}

Outcome criterion_cli_end_to_end(const std::string& cli) {
    if (cli.empty()) return {false, "no --cli path provided"};
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "switchqfi_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto at = [&](const std::string& name) { return (dir / name).string(); };

    const auto start = std::chrono::steady_clock::now();
    if (run_cli(cli, "validate", at("validate.log")) != 0)
        return {false, "validate did not exit 0; see " + at("validate.log")};
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 60.0) return {false, "validate took " + fmt(seconds) + " s (budget 60 s)"};

    // Every figure preset, written twice, must be byte-identical.
    for (const std::string name : {"fig3", "fig4", "fig5", "fig6", "fig7"}) {
        for (const char* tag : {"a", "b"}) {
            const int code = run_cli(
                cli, "sweep --preset " + name + " --out " + at(name + "_" + tag + ".csv"),
                at(name + std::string("_") + tag + ".log"));
            if (code != 0) return {false, name + " sweep exited " + std::to_string(code)};
        }
        if (slurp(at(name + "_a.csv")) != slurp(at(name + "_b.csv")))
            return {false, name + " CSV is not deterministic"};
    }

    // Spot rows against the point command, compared as printed (12 digits).
    struct Spot {
        const char* preset;
        const char* prefix;   // axis values opening the row
        std::size_t column;   // fq_con column index
        const char* point_args;
    };
    const Spot spots[] = {
        {"fig3", "1,0.5,", 2, "--T_p 1 --gamma 0.5 --rho00 1 --xi pi/4 --p_c 0.5"},
        {"fig4", "1,0.5,", 2, "--T_p 1 --gamma 0.5 --rho00 0 --xi pi/4 --p_c 0.5"},
        {"fig5", "1,0.5,", 2, "--T_p 1 --gamma 0.5 --rho00 0.5 --xi pi/4 --p_c 0.5"},
        {"fig6", "1,0.9,", 2, "--p 1 --gamma 0.9 --rho00 0 --xi pi/4 --p_c 0.5"},
        {"fig7", "0.75,0.5,", 2, "--p 0.75 --gamma 0.5 --rho00 0.5 --xi pi/4 --p_c 0.5"},
    };
    for (const Spot& spot : spots) {
        const std::string csv = slurp(at(std::string(spot.preset) + "_a.csv"));
        const std::string from_csv = find_csv_field(csv, spot.prefix, spot.column);
        if (run_cli(cli, std::string("point ") + spot.point_args, at("point.log")) != 0)
            return {false, std::string("point failed for ") + spot.preset};
        const std::string from_point = find_line_value(slurp(at("point.log")), "fq_con");
        if (from_csv.empty() || from_csv != from_point)
            return {false, std::string(spot.preset) + " spot mismatch: csv '" + from_csv +
                               "' vs point '" + from_point + "'"};
    }

    // The fig6 reference column shows the crossover: fq_con > fq_std at (1, 0.9).
    const std::string fig6 = slurp(at("fig6_a.csv"));
    const double fq_con = std::strtod(find_csv_field(fig6, "1,0.9,", 2).c_str(), nullptr);
    const double fq_std = std::strtod(find_csv_field(fig6, "1,0.9,", 3).c_str(), nullptr);
    if (!(fq_con > fq_std))
        return {false, "crossover missing in fig6: " + fmt(fq_con) + " <= " + fmt(fq_std)};

    // The self-test hook must flip the exit code.
    if (run_cli(cli, "validate --inject-failure", at("inject.log")) != 1)
        return {false, "--inject-failure did not exit 1"};

    return {true, "validate " + fmt(seconds) + " s; presets deterministic; spots match at 12 "
                  "significant digits"};
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"closed forms match the generic Kraus oracle (1e-10, < 30 s)",
         criterion_closed_vs_generic},
        {"spectral QFI cross-check on the control family (1e-6)",
         criterion_spectral_cross_check},
        {"worked point: q_c=3/4, dq=-1/2, F=4/7, P=(7/8, 1/8)", criterion_worked_point},
        {"F approaches 2(1-gamma) as p, gamma approach 1", criterion_asymptote},
        {"standard-channel optimum equals 1-gamma (1e-9)", criterion_standard_benchmark},
        {"standard channel blind, control operative", criterion_inoperative_contrast},
        {"crossover: control beats 1-gamma at p=1, gamma=0.9", criterion_crossover},
        {"monotonicity in rho00 and opposite T_p trends", criterion_monotonicity},
        {"boundary zeros exact; interior gamma maximum", criterion_boundary_zeros},
        {"Hadamard measurement optimality and conditional states",
         criterion_measurement_optimality},
        {"switched-channel structural invariants", criterion_structural},
        {"CLI end to end: validate, presets, spot agreement",
         [&cli]() { return criterion_cli_end_to_end(cli); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome{false, ""};
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("[%s] C%02zu %s — %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
