// switch.cpp — Switched-channel construction and its closed-form superoperators.

#include "switchqfi/switch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace switchqfi {

namespace {

constexpr double kImagTraceTol = 1e-12;

void ensure_probe_qubit(const DensityOperator& rho, const char* what) {
    if (rho.dim() != 2) throw std::invalid_argument(std::string(what) + ": probe must be a qubit");
}

void ensure_qubit_channel(const KrausChannel& ch, const char* what) {
    if (ch.dim() != 2)
        throw std::invalid_argument(std::string(what) + ": channel must act on a qubit");
}

double checked_rho00(double rho00, const char* what) {
    if (rho00 < -1e-12 || rho00 > 1.0 + 1e-12)
        throw std::invalid_argument(std::string(what) + ": rho00 must lie in [0, 1]");
    return std::min(1.0, std::max(0.0, rho00));
}

}  // namespace

ControlState::ControlState(DensityOperator rho_c, std::optional<double> p_c)
    : rho_c_(std::move(rho_c)), p_c_(p_c) {}

ControlState ControlState::pure(double p_c, double tol) {
    if (!(p_c >= 0.0 && p_c <= 1.0))
        throw std::invalid_argument("ControlState: p_c must lie in [0, 1]");
    const double coh = std::sqrt(p_c * (1.0 - p_c));
    return ControlState(
        DensityOperator(CMatrix::from({{p_c, coh}, {coh, 1.0 - p_c}}), tol), p_c);
}

ControlState ControlState::from_density(const DensityOperator& rho_c) {
    if (rho_c.dim() != 2)
        throw std::invalid_argument("ControlState: control must be a qubit");
    return ControlState(rho_c, std::nullopt);
}

KrausChannel switch_kraus(const KrausChannel& ch1, const KrausChannel& ch2) {
    ensure_qubit_channel(ch1, "switch_kraus");
    ensure_qubit_channel(ch2, "switch_kraus");
    const CMatrix p00 = basis_op(2, 0, 0);
    const CMatrix p11 = basis_op(2, 1, 1);
    std::vector<CMatrix> ops;
    ops.reserve(ch1.size() * ch2.size());
    for (const CMatrix& kj : ch2.ops())
        for (const CMatrix& kk : ch1.ops())
            ops.push_back(kron(kj * kk, p00) + kron(kk * kj, p11));
    return KrausChannel(std::move(ops));
}

CMatrix s00_generic(const KrausChannel& ch1, const KrausChannel& ch2, const CMatrix& rho) {
    CMatrix out(2);
    for (const CMatrix& kj : ch2.ops())
        for (const CMatrix& kk : ch1.ops()) {
            const CMatrix m = kj * kk;
            out += m * rho * adjoint(m);
        }
    return out;
}

CMatrix s01_generic(const KrausChannel& ch1, const KrausChannel& ch2, const CMatrix& rho) {
    CMatrix out(2);
    for (const CMatrix& kj : ch2.ops())
        for (const CMatrix& kk : ch1.ops())
            out += kj * kk * rho * adjoint(kj) * adjoint(kk);
    return out;
}

SwitchOutput apply_switch_generic(const KrausChannel& ch, const DensityOperator& rho,
                                  const ControlState& ctrl) {
    ensure_qubit_channel(ch, "apply_switch_generic");
    ensure_probe_qubit(rho, "apply_switch_generic");

    const KrausChannel sw = switch_kraus(ch, ch);
    const CMatrix joint = sw.apply_raw(kron(rho.mat(), ctrl.density().mat()));

    const CMatrix s00 = s00_generic(ch, ch, rho.mat());
    const CMatrix s01_raw = s01_generic(ch, ch, rho.mat());

    const cdouble tq = trace(s01_raw);
    if (std::abs(tq.imag()) > kImagTraceTol)
        throw std::runtime_error("apply_switch_generic: tr S01 acquired an imaginary part");
    if (std::abs(trace(s00).real() - 1.0) > kImagTraceTol)
        throw std::runtime_error("apply_switch_generic: tr S00 drifted from 1");

    // For identical channels S01 is Hermitian; symmetrize away float asymmetry.
    const CMatrix s01 = 0.5 * (s01_raw + adjoint(s01_raw));
    return SwitchOutput{DensityOperator(joint, rho.tol()), s00, s01, tq.real()};
}

void ensure_z_axis(const UnitaryParams& u) {
    if (!u.is_z_axis())
        throw std::invalid_argument(
            "closed-form switch expressions require axis n = e_z; use the generic path");
}

CMatrix s00_closed(const ThermalNoiseParams& noise, double xi, const DensityOperator& rho) {
    ensure_probe_qubit(rho, "s00_closed");
    const double p = noise.p;
    const double g = noise.gamma;
    const double r00 = rho.mat()(0, 0).real();
    const cdouble r01 = rho.mat()(0, 1);
    const cdouble phase = std::polar(1.0, -2.0 * xi);  // e^{-i 2 xi}

    const double d0 = (1.0 - g) * (1.0 - g) * r00 + p * (1.0 - g) * g + p * g;
    const double d1 =
        (1.0 - g) * (1.0 - g) * (1.0 - r00) + (1.0 - p) * (1.0 - g) * g + (1.0 - p) * g;
    const cdouble off = (1.0 - g) * r01 * phase;
    return CMatrix::from({{d0, off}, {std::conj(off), d1}});
}

CMatrix s01_closed(const ThermalNoiseParams& noise, double xi, const DensityOperator& rho) {
    ensure_probe_qubit(rho, "s01_closed");
    const double p = noise.p;
    const double g = noise.gamma;
    const double r00 = rho.mat()(0, 0).real();
    const cdouble r01 = rho.mat()(0, 1);
    const double cg = 2.0 * g * std::sqrt(1.0 - g) * std::cos(xi);

    const double b00 = cg * p * (1.0 - r00) + (1.0 - g * (1.0 - p)) * (1.0 - g * (1.0 - p)) * r00;
    const double b11 = cg * (1.0 - p) * r00 + (1.0 - g * p) * (1.0 - g * p) * (1.0 - r00);
    const cdouble b01 = (cdouble(1.0 - g) * std::polar(1.0, -2.0 * xi) + g * g * (1.0 - p) * p) * r01;
    return CMatrix::from({{b00, b01}, {std::conj(b01), b11}});
}

CMatrix s00_closed(const ThermalNoiseParams& noise, const UnitaryParams& u,
                   const DensityOperator& rho) {
    ensure_z_axis(u);
    return s00_closed(noise, u.xi, rho);
}

CMatrix s01_closed(const ThermalNoiseParams& noise, const UnitaryParams& u,
                   const DensityOperator& rho) {
    ensure_z_axis(u);
    return s01_closed(noise, u.xi, rho);
}

double q_factor(const ThermalNoiseParams& noise, double xi, double rho00) {
    const double r00 = checked_rho00(rho00, "q_factor");
    const double p = noise.p;
    const double g = noise.gamma;
    return 2.0 * g * std::sqrt(1.0 - g) * ((1.0 - 2.0 * p) * r00 + p) * std::cos(xi) +
           (2.0 - g) * g * (2.0 * p - 1.0) * r00 + (1.0 - g * p) * (1.0 - g * p);
}

double dq_factor(const ThermalNoiseParams& noise, double xi, double rho00) {
    const double r00 = checked_rho00(rho00, "dq_factor");
    const double p = noise.p;
    const double g = noise.gamma;
    return -2.0 * g * std::sqrt(1.0 - g) * ((1.0 - 2.0 * p) * r00 + p) * std::sin(xi);
}

DensityOperator joint_state_general(const KrausChannel& ch, const DensityOperator& rho,
                                    const DensityOperator& rho_c) {
    ensure_qubit_channel(ch, "joint_state_general");
    ensure_probe_qubit(rho, "joint_state_general");
    if (rho_c.dim() != 2)
        throw std::invalid_argument("joint_state_general: control must be a qubit");

    const CMatrix s00 = s00_generic(ch, ch, rho.mat());
    const CMatrix s01_raw = s01_generic(ch, ch, rho.mat());
    const CMatrix s01 = 0.5 * (s01_raw + adjoint(s01_raw));

    const CMatrix& rc = rho_c.mat();
    CMatrix ctrl_diag(2);
    ctrl_diag(0, 0) = rc(0, 0);
    ctrl_diag(1, 1) = rc(1, 1);

    const CMatrix joint = kron(s00, ctrl_diag) + kron(s01, rc(0, 1) * basis_op(2, 0, 1)) +
                          kron(adjoint(s01), rc(1, 0) * basis_op(2, 1, 0));
    return DensityOperator(joint, rho.tol());
}

DensityOperator reduced_control(const SwitchOutput& out, const ControlState& ctrl) {
    const std::optional<double> p_c = ctrl.pure_p();
    if (!p_c)
        throw std::invalid_argument("reduced_control: requires a pure control preparation");
    const double coh = out.q_c * std::sqrt(*p_c * (1.0 - *p_c));
    return DensityOperator(CMatrix::from({{*p_c, coh}, {coh, 1.0 - *p_c}}),
                           out.joint.tol());
}

}  // namespace switchqfi
