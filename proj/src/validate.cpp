// validate.cpp — Invariant checks spanning linalg, channels, switch, metrology, CLI.

#include "switchqfi/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "switchqfi/metrology.hpp"
#include "switchqfi/sweep.hpp"

namespace switchqfi {

namespace {

constexpr double kPi = std::numbers::pi;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    CMatrix hermitian(std::size_t dim) {
        CMatrix h(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            h(i, i) = uniform(-1.0, 1.0);
            for (std::size_t j = i + 1; j < dim; ++j) {
                h(i, j) = cdouble(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
                h(j, i) = std::conj(h(i, j));
            }
        }
        return h;
    }

    // G G^dagger / tr: Hermitian, PSD, unit trace.
    CMatrix density_matrix(std::size_t dim) {
        CMatrix g(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                g(i, j) = cdouble(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
        CMatrix rho = g * adjoint(g);
        return (1.0 / trace(rho).real()) * rho;
    }

    Vec3 bloch_in_ball() {
        for (;;) {
            Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            if (dot(v, v) <= 1.0) return v;
        }
    }

    Vec3 unit_axis() {
        for (;;) {
            Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            const double n = norm(v);
            if (n > 0.1 && n <= 1.0) return (1.0 / n) * v;
        }
    }

    // Off-diagonal entry keeping [[rho00, rho01], [conj, 1-rho00]] positive.
    cdouble rho01_for(double rho00) {
        const double cap = std::sqrt(std::max(0.0, rho00 * (1.0 - rho00)));
        return std::polar(uniform(0.0, 1.0) * cap, uniform(0.0, 2.0 * kPi));
    }
};

void add_check(std::vector<CheckResult>& out, const std::string& name, double worst, double bound,
               const std::string& note = {}) {
    out.push_back({name, worst, bound, worst <= bound, note});
}

double density_deviation(const CMatrix& m) {
    double worst = max_abs_diff(m, adjoint(m));
    worst = std::max(worst, std::abs(trace(m).real() - 1.0));
    worst = std::max(worst, std::abs(trace(m).imag()));
    const EigenSystem es = hermitian_eig(0.5 * (m + adjoint(m)), 1.0);
    worst = std::max(worst, std::max(0.0, -es.values.front()));
    return worst;
}

// ----------------------------- linalg checks --------------------------------

void check_linalg(std::vector<CheckResult>& out, Rng& rng) {
    for (std::size_t dim : {std::size_t{2}, std::size_t{4}}) {
        double worst_rec = 0.0, worst_orth = 0.0;
        for (int it = 0; it < 10000; ++it) {
            const CMatrix h = rng.hermitian(dim);
            const EigenSystem es = hermitian_eig(h);
            CMatrix lam(dim);
            for (std::size_t i = 0; i < dim; ++i) lam(i, i) = es.values[i];
            worst_rec =
                std::max(worst_rec, max_abs_diff(h, es.vectors * lam * adjoint(es.vectors)));
            worst_orth = std::max(
                worst_orth,
                max_abs_diff(adjoint(es.vectors) * es.vectors, CMatrix::identity(dim)));
        }
        const std::string d = std::to_string(dim) + "x" + std::to_string(dim);
        add_check(out, "linalg/eig-reconstruction-" + d, worst_rec, 1e-12, "10^4 random Hermitian");
        add_check(out, "linalg/eig-orthonormality-" + d, worst_orth, 1e-12);
    }

    double worst_pt = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const CMatrix joint = rng.density_matrix(4);
        worst_pt = std::max(worst_pt, density_deviation(partial_trace(joint, Subsystem::probe)));
        worst_pt = std::max(worst_pt, density_deviation(partial_trace(joint, Subsystem::control)));
    }
    add_check(out, "linalg/partial-trace-density", worst_pt, 1e-10,
              "both reductions of random joint states");

    double worst_bloch = 0.0;
    for (int it = 0; it < 10000; ++it) {
        const Vec3 r = rng.bloch_in_ball();
        const Vec3 back = bloch_from_density(density_from_bloch(r));
        worst_bloch = std::max(worst_bloch, norm(back - r));
    }
    add_check(out, "linalg/bloch-round-trip", worst_bloch, 1e-14, "10^4 random Bloch vectors");
}

// ---------------------------- channels checks -------------------------------

void check_channels(std::vector<CheckResult>& out, Rng& rng) {
    double worst_comp = 0.0;
    for (int ip = 0; ip <= 20; ++ip)
        for (int ig = 0; ig <= 20; ++ig) {
            const ThermalNoiseParams noise(ip / 20.0, ig / 20.0);
            for (const KrausChannel& ch :
                 {thermal_kraus(noise),
                  noisy_unitary_channel(noise, UnitaryParams({0.0, 0.0, 1.0}, kPi / 4.0))}) {
                CMatrix sum(2);
                for (const CMatrix& k : ch.ops()) sum += adjoint(k) * k;
                worst_comp = std::max(worst_comp, max_abs_diff(sum, CMatrix::identity(2)));
            }
        }
    add_check(out, "channels/kraus-completeness", worst_comp, 1e-10, "21x21 grid of (p, gamma)");

    double worst_valid = 0.0;
    for (int it = 0; it < 10000; ++it) {
        const ThermalNoiseParams noise(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
        const UnitaryParams u(rng.unit_axis(), rng.uniform(0.0, 2.0 * kPi));
        const DensityOperator rho = density_from_bloch(rng.bloch_in_ball());
        const DensityOperator outr = apply_channel(noisy_unitary_channel(noise, u), rho);
        worst_valid = std::max(worst_valid, density_deviation(outr.mat()));
    }
    add_check(out, "channels/apply-channel-validity", worst_valid, 1e-10,
              "10^4 random channels and states");

    double worst_comm = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const ThermalNoiseParams noise(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
        const Vec3 r = rng.bloch_in_ball();
        const DensityOperator via_ops = apply_channel(thermal_kraus(noise), density_from_bloch(r));
        const DensityOperator via_bloch =
            density_from_bloch(bloch_affine_of_thermal(noise).apply(r));
        worst_comm = std::max(worst_comm, max_abs_diff(via_ops.mat(), via_bloch.mat()));
    }
    add_check(out, "channels/bloch-operator-commutation", worst_comm, 1e-12,
              "Kraus sum vs affine Bloch map");

    double worst_ball = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const AffineBlochMap map = bloch_affine_of_thermal(
            ThermalNoiseParams(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)));
        Vec3 r = rng.bloch_in_ball();
        const double n = norm(r);
        if (n > 1e-6) r = (1.0 / n) * r;  // sample the sphere: pure inputs
        worst_ball = std::max(worst_ball, norm(map.apply(r)) - 1.0);
    }
    add_check(out, "channels/bloch-ball-preservation", std::max(0.0, worst_ball), 1e-12,
              "pure-state inputs stay inside the Bloch ball");

    double worst_mono = 0.0;
    double prev_p = 1.0;
    for (int i = 0; i < 100; ++i) {
        const double k_t = 0.01 * std::pow(1e4, i / 99.0);  // geometric sweep of kT
        const double p = p_from_temperature(1.0, k_t);
        if (i > 0) worst_mono = std::max(worst_mono, p - prev_p);  // p must decrease
        prev_p = p;
    }
    double prev_tp = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double tp = ThermalNoiseParams(1.0 - i / 100.0, 0.0).effective_temperature();
        if (i > 0) worst_mono = std::max(worst_mono, prev_tp - tp);  // T_p must increase
        prev_tp = tp;
    }
    add_check(out, "channels/temperature-monotonicity", worst_mono, 0.0,
              "p decreasing in kT; T_p increasing as p falls");
}

// ----------------------------- switch checks --------------------------------

// One pass over the 21x21x16x11 grid of (p, gamma, xi, rho00) with random
// rho01, comparing every closed form against the generic Kraus-sum oracle and
// validating the assembled joint states.
void check_switch(std::vector<CheckResult>& out, Rng& rng) {
    const Vec3 ez{0.0, 0.0, 1.0};
    const double fd_step = 1e-4;  // fourth-order stencil

    double worst_q = 0.0, worst_imag = 0.0, worst_s00 = 0.0, worst_s01 = 0.0;
    double worst_dq_gen = 0.0, worst_dq_closed = 0.0;
    double worst_joint = 0.0, worst_probe_red = 0.0, worst_qbound = 0.0;

    const double pcs[] = {0.0, 0.25, 0.5, 0.75, 1.0};

    for (int ip = 0; ip <= 20; ++ip) {
        for (int ig = 0; ig <= 20; ++ig) {
            const ThermalNoiseParams noise(ip / 20.0, ig / 20.0);
            for (int ix = 0; ix < 16; ++ix) {
                const double xi = ix * (2.0 * kPi / 16.0);
                const KrausChannel ch = noisy_unitary_channel(noise, UnitaryParams(ez, xi));
                const KrausChannel stencil[4] = {
                    noisy_unitary_channel(noise, UnitaryParams(ez, xi - 2.0 * fd_step)),
                    noisy_unitary_channel(noise, UnitaryParams(ez, xi - fd_step)),
                    noisy_unitary_channel(noise, UnitaryParams(ez, xi + fd_step)),
                    noisy_unitary_channel(noise, UnitaryParams(ez, xi + 2.0 * fd_step))};
                for (int ir = 0; ir <= 10; ++ir) {
                    const double rho00 = ir / 10.0;
                    const DensityOperator rho =
                        DensityOperator::qubit(rho00, rng.rho01_for(rho00));

                    const CMatrix s00g = s00_generic(ch, ch, rho.mat());
                    const CMatrix s01g = s01_generic(ch, ch, rho.mat());
                    const cdouble tr01 = trace(s01g);

                    worst_q = std::max(worst_q,
                                       std::abs(q_factor(noise, xi, rho00) - tr01.real()));
                    worst_imag = std::max(worst_imag, std::abs(tr01.imag()));
                    worst_qbound = std::max(worst_qbound, std::abs(tr01.real()) - 1.0);
                    worst_s00 =
                        std::max(worst_s00, max_abs_diff(s00_closed(noise, xi, rho), s00g));
                    worst_s01 =
                        std::max(worst_s01, max_abs_diff(s01_closed(noise, xi, rho), s01g));

                    const double dq = dq_factor(noise, xi, rho00);
                    double fs[4];
                    for (int k = 0; k < 4; ++k)
                        fs[k] = trace(s01_generic(stencil[k], stencil[k], rho.mat())).real();
                    const double fd_gen =
                        (fs[0] - 8.0 * fs[1] + 8.0 * fs[2] - fs[3]) / (12.0 * fd_step);
                    worst_dq_gen = std::max(worst_dq_gen, std::abs(dq - fd_gen));
                    const double fd_closed = (q_factor(noise, xi + 1e-6, rho00) -
                                              q_factor(noise, xi - 1e-6, rho00)) /
                                             2e-6;
                    worst_dq_closed = std::max(worst_dq_closed, std::abs(dq - fd_closed));

                    for (const double p_c : pcs) {
                        const DensityOperator joint = joint_state_general(
                            ch, rho, ControlState::pure(p_c).density());
                        worst_joint = std::max(worst_joint, density_deviation(joint.mat()));
                        if (p_c == 0.5)
                            worst_probe_red = std::max(
                                worst_probe_red,
                                max_abs_diff(partial_trace(joint.mat(), Subsystem::probe), s00g));
                    }
                }
            }
        }
    }

    const std::string grid = "21x21x16x11 grid of (p, gamma, xi, rho00)";
    add_check(out, "switch/qfactor-vs-generic", worst_q, 1e-10, grid);
    add_check(out, "switch/qfactor-imag-residue", worst_imag, 1e-12);
    add_check(out, "switch/s00-closed-vs-generic", worst_s00, 1e-10, grid);
    add_check(out, "switch/s01-closed-vs-generic", worst_s01, 1e-10, grid);
    add_check(out, "switch/dq-vs-generic-fd", worst_dq_gen, 1e-10, "fourth order, h = 1e-4");
    add_check(out, "switch/dq-vs-closed-fd", worst_dq_closed, 1e-7, "h = 1e-6");
    add_check(out, "switch/joint-validity", worst_joint, 1e-10,
              "p_c in {0, 1/4, 1/2, 3/4, 1} at every grid point");
    add_check(out, "switch/probe-reduction-is-s00", worst_probe_red, 1e-12);
    add_check(out, "switch/qc-bound", std::max(0.0, worst_qbound), 1e-12, "|q_c| <= 1");
}

// ---------------------------- metrology checks ------------------------------

void check_metrology(std::vector<CheckResult>& out, Rng& rng) {
    const Vec3 ez{0.0, 0.0, 1.0};

    double worst_argmax = 0.0;
    for (const double p : {0.5, 0.75, 1.0})
        for (const double g : {0.2, 0.5, 0.8})
            for (const double xi : {0.4, kPi / 4.0, 2.0})
                for (const double rho00 : {0.0, 0.5, 1.0}) {
                    const ThermalNoiseParams noise(p, g);
                    const double center = qfi_control(noise, xi, rho00, 0.5);
                    for (int i = 1; i <= 19; ++i)
                        worst_argmax = std::max(
                            worst_argmax, qfi_control(noise, xi, rho00, i / 20.0) - center);
                }
    add_check(out, "metrology/pc-argmax-even-superposition", worst_argmax, 1e-12,
              "p_c = 1/2 maximizes qfi_control");

    double worst_opt = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const ThermalNoiseParams noise(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
        const double xi = rng.uniform(0.0, 2.0 * kPi);
        const double rho00 = rng.uniform(0.0, 1.0);
        const double q = q_factor(noise, xi, rho00);
        const double dq = dq_factor(noise, xi, rho00);
        worst_opt = std::max(
            worst_opt, std::abs(cfi_control(0.5, q, dq) - qfi_control(noise, xi, rho00, 0.5)));
    }
    add_check(out, "metrology/hadamard-optimality", worst_opt, 1e-12,
              "cfi = qfi at p_c = 1/2, 10^3 random points");

    double worst_spec = 0.0;
    for (int ip = 0; ip < 9; ++ip)
        for (int ig = 0; ig < 9; ++ig)
            for (int ix = 0; ix < 8; ++ix)
                for (const double rho00 : {0.0, 0.5, 1.0}) {
                    const ThermalNoiseParams noise(ip / 8.0, ig / 8.0);
                    const double xi = ix * (2.0 * kPi / 8.0);
                    const DensityOperator rho = DensityOperator::qubit(rho00, 0.0);
                    const ControlState ctrl = ControlState::pure(0.5);
                    const StateFamily family = [&](double x) {
                        const KrausChannel ch = noisy_unitary_channel(noise, UnitaryParams(ez, x));
                        return DensityOperator(
                            partial_trace(apply_switch_generic(ch, rho, ctrl).joint.mat(),
                                          Subsystem::control));
                    };
                    worst_spec = std::max(worst_spec,
                                          std::abs(qfi_spectral(family, xi) -
                                                   qfi_control(noise, xi, rho00, 0.5)));
                }
    add_check(out, "metrology/spectral-equivalence", worst_spec, 1e-6,
              "9x9x8 grid, rho00 in {0, 1/2, 1}");

    double worst_std = 0.0;
    for (int ig = 0; ig <= 10; ++ig)
        for (int ix = 0; ix < 8; ++ix)
            for (const double p : {0.5, 0.75, 1.0}) {
                const double g = ig / 10.0;
                const double f = qfi_standard(
                    {{1.0, 0.0, 0.0}, UnitaryParams(ez, ix * (2.0 * kPi / 8.0)),
                     ThermalNoiseParams(p, g)});
                worst_std = std::max(worst_std, std::abs(f - (1.0 - g)));
            }
    add_check(out, "metrology/standard-optimum", worst_std, 1e-9,
              "qfi_standard(r = e_x, n = e_z) = 1 - gamma");

    double worst_zero = 0.0;
    for (const double rho00 : {0.0, 0.5, 1.0}) {
        worst_zero = std::max(worst_zero,
                              qfi_control(ThermalNoiseParams(0.8, 0.0), kPi / 4.0, rho00, 0.5));
        worst_zero = std::max(worst_zero,
                              qfi_control(ThermalNoiseParams(0.8, 1.0), kPi / 4.0, rho00, 0.5));
        worst_zero =
            std::max(worst_zero, qfi_control(ThermalNoiseParams(0.8, 0.5), 0.0, rho00, 0.5));
        worst_zero =
            std::max(worst_zero, qfi_control(ThermalNoiseParams(0.8, 0.5), kPi, rho00, 0.5));
        worst_zero =
            std::max(worst_zero, qfi_control(ThermalNoiseParams(0.8, 0.5), kPi / 4.0, rho00, 0.0));
        worst_zero =
            std::max(worst_zero, qfi_control(ThermalNoiseParams(0.8, 0.5), kPi / 4.0, rho00, 1.0));
    }
    add_check(out, "metrology/degenerate-zeros", worst_zero, 0.0,
              "gamma in {0,1}, xi in {0,pi}, p_c in {0,1}");

    double worst_monot = 0.0;
    for (const double p : {1.0, 0.75, 0.5}) {
        double prev = qfi_control(ThermalNoiseParams(p, 0.5), kPi / 4.0, 0.0, 0.5);
        for (int i = 1; i <= 100; ++i) {
            const double f = qfi_control(ThermalNoiseParams(p, 0.5), kPi / 4.0, i / 100.0, 0.5);
            worst_monot = std::max(worst_monot, f - prev);  // must not increase
            prev = f;
        }
    }
    add_check(out, "metrology/rho00-monotonicity", worst_monot, 1e-12,
              "qfi_control non-increasing in rho00");

    double min_dep = 1.0;
    double std_dep = 0.0;
    for (int ig = 1; ig <= 9; ++ig)
        for (int ix = 1; ix <= 7; ++ix) {
            const double g = ig / 10.0;
            const double xi = ix * kPi / 8.0;
            min_dep = std::min(min_dep, qfi_control(ThermalNoiseParams(0.75, g), xi, 0.5, 0.5));
            std_dep = std::max(std_dep,
                               qfi_standard({{0.0, 0.0, 0.0}, UnitaryParams(ez, xi),
                                             ThermalNoiseParams(0.75, g)}));
        }
    add_check(out, "metrology/depolarized-operability", min_dep > 0.0 ? std_dep : 1.0, 0.0,
              "control stays informative where the standard probe is blind");
}

// ------------------------------- CLI checks ---------------------------------

void check_cli(std::vector<CheckResult>& out) {
    const RunConfig defaults = RunConfig::make_default();

    const SweepSpec small = sweep_preset("fig6", 21);
    const std::string once = render_sweep_csv(small, defaults, 1);
    const std::string twice = render_sweep_csv(small, defaults, 2);
    const SweepSpec surf = sweep_preset("fig3", 11);
    const bool deterministic = once == twice && render_sweep_csv(surf, defaults, 1) ==
                                                    render_sweep_csv(surf, defaults, 3);
    add_check(out, "cli/csv-determinism", deterministic ? 0.0 : 1.0, 0.0,
              "byte-identical across repeats and thread counts");

    bool domains_ok = true;
    for (const std::string& name : sweep_preset_names()) {
        const SweepSpec spec = sweep_preset(name);
        for (const SweepAxisSpec& ax : spec.axes) {
            const double lo = std::min(ax.start, ax.stop);
            const double hi = std::max(ax.start, ax.stop);
            if (ax.name == "T_p" && !(lo == 0.0 && hi == 1.0)) domains_ok = false;
            if (ax.name == "gamma" && !(lo == 0.0 && hi == 1.0)) domains_ok = false;
            if (ax.name == "rho00" && !(lo == 0.0 && hi == 1.0)) domains_ok = false;
            if (ax.name == "p" && !(lo == 0.5 && hi == 1.0)) domains_ok = false;
        }
    }
    add_check(out, "cli/preset-domains", domains_ok ? 0.0 : 1.0, 0.0,
              "figure grids span the declared parameter ranges");

    double worst_fmt = 0.0;
    const double samples[] = {4.0 / 7.0, 0.75, 1e-12, 0.1952163, 1.0 - 1e-9, 123.456789,
                              2.0 * kPi};
    for (const double v : samples) {
        const double back = std::strtod(format_value(v).c_str(), nullptr);
        worst_fmt = std::max(worst_fmt, std::abs(back - v) / std::max(1e-300, std::abs(v)));
    }
    add_check(out, "cli/report-precision", worst_fmt, 5e-12,
              "12-significant-digit round trip");
}

}  // namespace

std::vector<CheckResult> run_validation_suite(const ValidateOptions& opt) {
    std::vector<CheckResult> out;
    Rng rng(opt.seed);
    check_linalg(out, rng);
    check_channels(out, rng);
    check_switch(out, rng);
    check_metrology(out, rng);
    check_cli(out);
    if (opt.inject_failure)
        add_check(out, "self-test/injected-failure", 1.0, 1e-12,
                  "deliberate failure exercising the reporting path");
    return out;
}

}  // namespace switchqfi
