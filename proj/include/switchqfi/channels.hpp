// channels.hpp — Thermal-noise qubit channel, phase unitary, their composition,
// Bloch-picture affine maps, and temperature/time parameter conversions.

#pragma once

#include <vector>

#include "switchqfi/linalg.hpp"

namespace switchqfi {

// Generalized amplitude damping parameters: p is the equilibrium ground-state
// probability, gamma the damping factor. The thermal interpretation restricts
// p to [1/2, 1], but the Kraus algebra is well defined on all of [0, 1] and the
// full interval is accepted; callers surface a diagnostic for p < 1/2.
struct ThermalNoiseParams {
    ThermalNoiseParams(double p, double gamma);

    double p;
    double gamma;

    // Reduced noise temperature T_p = 2(1-p); maps T in [0, inf) onto [0, 1].
    double effective_temperature() const { return 2.0 * (1.0 - p); }
    bool subthermal() const { return p < 0.5; }

    static ThermalNoiseParams from_effective_temperature(double t_p, double gamma);
};

// Rotation by angle xi around a unit axis n: U = exp(-i xi/2 n.sigma).
// xi is silently wrapped into [0, 2pi); the axis must be unit within 1e-12.
struct UnitaryParams {
    UnitaryParams(const Vec3& axis, double xi);

    Vec3 axis;
    double xi;

    bool is_z_axis(double tol = 1e-12) const;
};

// Ordered Kraus operator list; construction enforces the completeness relation
// sum_k K_k^dagger K_k = I.
class KrausChannel {
  public:
    explicit KrausChannel(std::vector<CMatrix> ops, double tol = kDefaultTol);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return ops_.size(); }
    const std::vector<CMatrix>& ops() const { return ops_; }
    const CMatrix& op(std::size_t k) const { return ops_[k]; }

    // sum_k K_k rho K_k^dagger on a raw matrix.
    CMatrix apply_raw(const CMatrix& rho) const;

  private:
    std::vector<CMatrix> ops_;
    std::size_t dim_;
};

// Bloch-picture action r -> A r + c of a qubit channel.
struct AffineBlochMap {
    Mat3 a;
    Vec3 c;

    Vec3 apply(const Vec3& r) const { return a * r + c; }
};

// The four thermal Kraus operators, in fixed order:
//   L1 = sqrt(p)   [[1, 0], [0, sqrt(1-g)]]      L2 = sqrt(p)   [[0, sqrt(g)], [0, 0]]
//   L3 = sqrt(1-p) [[sqrt(1-g), 0], [0, 1]]      L4 = sqrt(1-p) [[0, 0], [sqrt(g), 0]]
KrausChannel thermal_kraus(const ThermalNoiseParams& params);

DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho);

// A = diag(sqrt(1-g), sqrt(1-g), 1-g), c = (0, 0, (2p-1) g).
AffineBlochMap bloch_affine_of_thermal(const ThermalNoiseParams& params);

// U = cos(xi/2) I - i sin(xi/2) n.sigma.
CMatrix unitary(const UnitaryParams& params);

// The SO(3) rotation matching conjugation by unitary(params) on Bloch vectors.
Mat3 rotation_matrix(const UnitaryParams& params);

// The elementary channel that gets switched: Kraus operators L_j U, equivalent
// to the Bloch-vector map r -> A R_xi r + c.
KrausChannel noisy_unitary_channel(const ThermalNoiseParams& noise, const UnitaryParams& u);

// Boltzmann ground-state probability p = 1 / (1 + exp(-energy_gap / kT)); only
// the ratio energy_gap/kT matters. kT = 0 is handled as the limit p = 1.
double p_from_temperature(double energy_gap, double k_t);

// gamma = 1 - exp(-t / tau1) for interaction time t and relaxation time tau1.
double gamma_from_time(double t, double tau1);

}  // namespace switchqfi
