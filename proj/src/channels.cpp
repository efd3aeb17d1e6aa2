// channels.cpp — Thermal Kraus channel, qubit unitary and parameter conversions.

#include "switchqfi/channels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace switchqfi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double xi) {
    double w = std::fmod(xi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

}  // namespace

ThermalNoiseParams::ThermalNoiseParams(double p_, double gamma_) : p(p_), gamma(gamma_) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("ThermalNoiseParams: p must lie in [0, 1]");
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("ThermalNoiseParams: gamma must lie in [0, 1]");
}

ThermalNoiseParams ThermalNoiseParams::from_effective_temperature(double t_p, double gamma) {
    if (!(t_p >= 0.0 && t_p <= 2.0))
        throw std::invalid_argument("ThermalNoiseParams: T_p must lie in [0, 2]");
    return ThermalNoiseParams(1.0 - 0.5 * t_p, gamma);
}

UnitaryParams::UnitaryParams(const Vec3& axis_, double xi_) : axis(axis_), xi(wrap_phase(xi_)) {
    if (std::abs(norm(axis) - 1.0) > 1e-12)
        throw std::invalid_argument("UnitaryParams: axis must be a unit vector");
}

bool UnitaryParams::is_z_axis(double tol) const {
    return std::abs(axis.x) <= tol && std::abs(axis.y) <= tol && std::abs(axis.z - 1.0) <= tol;
}

KrausChannel::KrausChannel(std::vector<CMatrix> ops, double tol) : ops_(std::move(ops)) {
    if (ops_.empty()) throw std::invalid_argument("KrausChannel: empty operator list");
    dim_ = ops_.front().dim();
    CMatrix sum(dim_);
    for (const CMatrix& k : ops_) {
        if (k.dim() != dim_)
            throw std::invalid_argument("KrausChannel: operators of mixed dimension");
        ensure_finite(k, "KrausChannel");
        sum += adjoint(k) * k;
    }
    if (max_abs_diff(sum, CMatrix::identity(dim_)) > tol)
        throw std::invalid_argument("KrausChannel: completeness relation violated");
}

CMatrix KrausChannel::apply_raw(const CMatrix& rho) const {
    if (rho.dim() != dim_) throw std::invalid_argument("KrausChannel: state dimension mismatch");
    CMatrix out(dim_);
    for (const CMatrix& k : ops_) out += k * rho * adjoint(k);
    return out;
}

KrausChannel thermal_kraus(const ThermalNoiseParams& params) {
    const double sp = std::sqrt(params.p);
    const double sq = std::sqrt(1.0 - params.p);
    const double sg = std::sqrt(params.gamma);
    const double sr = std::sqrt(1.0 - params.gamma);
    std::vector<CMatrix> ops;
    ops.push_back(CMatrix::from({{sp, 0.0}, {0.0, sp * sr}}));
    ops.push_back(CMatrix::from({{0.0, sp * sg}, {0.0, 0.0}}));
    ops.push_back(CMatrix::from({{sq * sr, 0.0}, {0.0, sq}}));
    ops.push_back(CMatrix::from({{0.0, 0.0}, {sq * sg, 0.0}}));
    return KrausChannel(std::move(ops));
}

DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho) {
    return DensityOperator(ch.apply_raw(rho.mat()), rho.tol());
}

AffineBlochMap bloch_affine_of_thermal(const ThermalNoiseParams& params) {
    const double sr = std::sqrt(1.0 - params.gamma);
    AffineBlochMap map;
    map.a(0, 0) = sr;
    map.a(1, 1) = sr;
    map.a(2, 2) = 1.0 - params.gamma;
    map.c = {0.0, 0.0, (2.0 * params.p - 1.0) * params.gamma};
    return map;
}

CMatrix unitary(const UnitaryParams& params) {
    const double h = 0.5 * params.xi;
    const cdouble co = std::cos(h);
    const cdouble si(0.0, -std::sin(h));  // -i sin(xi/2)
    const Vec3& n = params.axis;
    // n.sigma = [[n_z, n_x - i n_y], [n_x + i n_y, -n_z]]
    return CMatrix::from({{co + si * n.z, si * cdouble(n.x, -n.y)},
                          {si * cdouble(n.x, n.y), co - si * n.z}});
}

Mat3 rotation_matrix(const UnitaryParams& params) {
    const Vec3& n = params.axis;
    const double c = std::cos(params.xi);
    const double s = std::sin(params.xi);
    Mat3 r;
    r(0, 0) = c + (1.0 - c) * n.x * n.x;
    r(0, 1) = (1.0 - c) * n.x * n.y - s * n.z;
    r(0, 2) = (1.0 - c) * n.x * n.z + s * n.y;
    r(1, 0) = (1.0 - c) * n.y * n.x + s * n.z;
    r(1, 1) = c + (1.0 - c) * n.y * n.y;
    r(1, 2) = (1.0 - c) * n.y * n.z - s * n.x;
    r(2, 0) = (1.0 - c) * n.z * n.x - s * n.y;
    r(2, 1) = (1.0 - c) * n.z * n.y + s * n.x;
    r(2, 2) = c + (1.0 - c) * n.z * n.z;
    return r;
}

KrausChannel noisy_unitary_channel(const ThermalNoiseParams& noise, const UnitaryParams& u) {
    const CMatrix u_xi = unitary(u);
    const KrausChannel thermal = thermal_kraus(noise);
    std::vector<CMatrix> ops;
    ops.reserve(thermal.size());
    for (const CMatrix& lam : thermal.ops()) ops.push_back(lam * u_xi);
    return KrausChannel(std::move(ops));
}

double p_from_temperature(double energy_gap, double k_t) {
    if (!(energy_gap > 0.0)) throw std::invalid_argument("p_from_temperature: energy gap must be positive");
    if (k_t < 0.0) throw std::invalid_argument("p_from_temperature: kT must be nonnegative");
    if (k_t == 0.0) return 1.0;  // zero-temperature limit
    return 1.0 / (1.0 + std::exp(-energy_gap / k_t));
}

double gamma_from_time(double t, double tau1) {
    if (t < 0.0) throw std::invalid_argument("gamma_from_time: time must be nonnegative");
    if (!(tau1 > 0.0)) throw std::invalid_argument("gamma_from_time: tau1 must be positive");
    return 1.0 - std::exp(-t / tau1);
}

}  // namespace switchqfi
