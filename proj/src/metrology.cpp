// metrology.cpp — Fisher-information figures of merit and measurement statistics.

#include "switchqfi/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace switchqfi {

namespace {

// Below kNumFloor the squared-derivative mass is pure round-off of an exact
// zero (|dq| <= 1 with absolute error ~1e-16), so the ratio is the 0/0 limit.
constexpr double kNumFloor = 1e-30;
constexpr double kDenFloor = 1e-15;

// Shared limit rule for the Fisher ratios: whenever numerator and denominator
// vanish together the analytic limit is 0, and |q| = 1 only occurs with dq = 0.
double fisher_ratio(double num, double den) {
    if (num <= kNumFloor || den <= kDenFloor) return 0.0;
    return num / den;
}

void check_probability(double p_c, const char* what) {
    if (!(p_c >= 0.0 && p_c <= 1.0))
        throw std::invalid_argument(std::string(what) + ": p_c must lie in [0, 1]");
}

void check_coherence(double q_c, const char* what) {
    if (std::abs(q_c) > 1.0 + 1e-12)
        throw std::invalid_argument(std::string(what) + ": |q_c| must not exceed 1");
}

}  // namespace

double qfi_control(const ThermalNoiseParams& noise, double xi, double rho00, double p_c) {
    check_probability(p_c, "qfi_control");
    const double q = q_factor(noise, xi, rho00);
    const double dq = dq_factor(noise, xi, rho00);
    return fisher_ratio(4.0 * (1.0 - p_c) * p_c * dq * dq, 1.0 - q * q);
}

double qfi_standard(const BlochVector& r, const UnitaryParams& u, const AffineBlochMap& map) {
    if (norm(r) > 1.0 + 1e-12)
        throw std::invalid_argument("qfi_standard: Bloch vector leaves the unit ball");

    const Vec3 rotated = rotation_matrix(u) * r;          // U_xi r
    const Vec3 out = map.apply(rotated);                  // A U_xi r + c
    const Vec3 tangent = map.a * cross(u.axis, rotated);  // A (n x U_xi r)

    const double radial = dot(out, tangent) * dot(out, tangent);
    const double den = 1.0 - dot(out, out);
    const double angular = dot(tangent, tangent);
    if (den <= kDenFloor) return angular;  // pure output: the radial term is a vanishing 0/0
    return radial / den + angular;
}

double qfi_standard(const StandardProbeConfig& cfg) {
    return qfi_standard(cfg.r, cfg.u, bloch_affine_of_thermal(cfg.noise));
}

double qfi_spectral(const StateFamily& family, double xi, const SpectralOptions& opt) {
    const DensityOperator rho = family(xi);
    const std::size_t n = rho.dim();

    CMatrix drho(n);
    if (opt.analytic_derivative) {
        if (opt.analytic_derivative->dim() != n)
            throw std::invalid_argument("qfi_spectral: derivative dimension mismatch");
        drho = *opt.analytic_derivative;
    } else {
        const double h = opt.fd_step;
        drho = (1.0 / (2.0 * h)) * (family(xi + h).mat() - family(xi - h).mat());
    }

    const EigenSystem es = hermitian_eig(rho.mat(), rho.tol());
    double f = 0.0;
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
            const double lam = es.values[l] + es.values[m];
            if (lam < opt.eigenvalue_cutoff) continue;
            cdouble amp = 0.0;  // <l| drho |m>
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    amp += std::conj(es.vectors(i, l)) * drho(i, j) * es.vectors(j, m);
            f += std::norm(amp) / lam;
        }
    return 2.0 * f;
}

std::pair<double, double> hadamard_probs(double p_c, double q_c) {
    check_probability(p_c, "hadamard_probs");
    check_coherence(q_c, "hadamard_probs");
    const double shift = std::sqrt((1.0 - p_c) * p_c) * q_c;
    double plus = 0.5 + shift;
    double minus = 0.5 - shift;
    if (plus < -1e-12 || plus > 1.0 + 1e-12 || minus < -1e-12 || minus > 1.0 + 1e-12)
        throw std::runtime_error("hadamard_probs: probabilities left [0, 1]; q_c is inconsistent");
    plus = std::min(1.0, std::max(0.0, plus));
    minus = std::min(1.0, std::max(0.0, minus));
    return {plus, minus};
}

double cfi_control(double p_c, double q_c, double dq_c) {
    check_probability(p_c, "cfi_control");
    check_coherence(q_c, "cfi_control");
    const double w = 4.0 * (1.0 - p_c) * p_c;
    return fisher_ratio(w * dq_c * dq_c, 1.0 - w * q_c * q_c);
}

PostMeasurement post_measurement_states(const SwitchOutput& out, double p_c) {
    check_probability(p_c, "post_measurement_states");
    const double coh = std::sqrt((1.0 - p_c) * p_c);
    const CMatrix plus_raw = 0.5 * out.s00 + coh * out.s01;
    const CMatrix minus_raw = 0.5 * out.s00 - coh * out.s01;

    PostMeasurement pm{};
    pm.p_plus = trace(plus_raw).real();
    pm.p_minus = trace(minus_raw).real();

    const auto [p_plus_ref, p_minus_ref] = hadamard_probs(p_c, out.q_c);
    if (std::abs(pm.p_plus - p_plus_ref) > 1e-12 || std::abs(pm.p_minus - p_minus_ref) > 1e-12)
        throw std::runtime_error("post_measurement_states: tr(rho_±) disagrees with P_±");
    pm.p_plus = std::min(1.0, std::max(0.0, pm.p_plus));
    pm.p_minus = std::min(1.0, std::max(0.0, pm.p_minus));

    constexpr double kZeroProb = 1e-14;
    if (pm.p_plus >= kZeroProb)
        pm.plus_state = DensityOperator((1.0 / pm.p_plus) * plus_raw, out.joint.tol());
    if (pm.p_minus >= kZeroProb)
        pm.minus_state = DensityOperator((1.0 / pm.p_minus) * minus_raw, out.joint.tol());
    return pm;
}

double finite_difference(const std::function<double(double)>& f, double x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("finite_difference: step must be positive");
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

FisherReport fisher_report(const ThermalNoiseParams& noise, double xi, double rho00, double p_c) {
    FisherReport rep{};
    rep.q_c = q_factor(noise, xi, rho00);
    rep.dq_c = dq_factor(noise, xi, rho00);
    rep.fq_con = qfi_control(noise, xi, rho00, p_c);
    rep.fc_con = cfi_control(p_c, rep.q_c, rep.dq_c);
    const auto [plus, minus] = hadamard_probs(p_c, rep.q_c);
    rep.p_plus = plus;
    rep.p_minus = minus;
    return rep;
}

}  // namespace switchqfi
