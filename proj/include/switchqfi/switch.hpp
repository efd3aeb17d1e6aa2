// switch.hpp — Two-channel quantum switch: generic Kraus construction of the
// switched channel, and closed forms of its superoperators for a z-axis unitary.

#pragma once

#include <optional>

#include "switchqfi/channels.hpp"

namespace switchqfi {

// Control qubit preparation. The pure constructor builds the state
// sqrt(p_c)|0_c> + sqrt(1-p_c)|1_c>; mixed preparations enter via from_density.
class ControlState {
  public:
    static ControlState pure(double p_c, double tol = kDefaultTol);
    static ControlState from_density(const DensityOperator& rho_c);

    const DensityOperator& density() const { return rho_c_; }
    std::optional<double> pure_p() const { return p_c_; }

  private:
    ControlState(DensityOperator rho_c, std::optional<double> p_c);

    DensityOperator rho_c_;
    std::optional<double> p_c_;
};

// One switch application with identical channels: the joint probe-control
// state (control-major basis), the cascade superoperator S00(rho), the
// cross-order superoperator S01(rho) (Hermitian for identical channels, stored
// symmetrized) and the coherence factor q_c = tr S01(rho).
struct SwitchOutput {
    DensityOperator joint;
    CMatrix s00;
    CMatrix s01;
    double q_c;
};

// Switched channel with Kraus operators
//   K_jk = K_j(2) K_k(1) (x) |0_c><0_c| + K_k(1) K_j(2) (x) |1_c><1_c|,
// j running over channel 2 (outer), k over channel 1 (inner).
KrausChannel switch_kraus(const KrausChannel& ch1, const KrausChannel& ch2);

// Cascade superoperator S00(rho) = sum_jk (K_j(2) K_k(1)) rho (K_j(2) K_k(1))^dagger.
CMatrix s00_generic(const KrausChannel& ch1, const KrausChannel& ch2, const CMatrix& rho);

// Cross-order superoperator
//   S01(rho) = sum_jk K_j(2) K_k(1) rho K_j(2)^dagger K_k(1)^dagger,
// returned as the raw (unsymmetrized) double sum.
CMatrix s01_generic(const KrausChannel& ch1, const KrausChannel& ch2, const CMatrix& rho);

SwitchOutput apply_switch_generic(const KrausChannel& ch, const DensityOperator& rho,
                                  const ControlState& ctrl);

// Throws unless u.axis = e_z within 1e-12; the closed forms below hold only there.
void ensure_z_axis(const UnitaryParams& u);

// Closed forms of S00 and S01 for the thermal noisy unitary with axis n = e_z.
// The xi overloads trust the caller on the axis; the UnitaryParams overloads
// reject any other axis (use the generic path instead).
CMatrix s00_closed(const ThermalNoiseParams& noise, double xi, const DensityOperator& rho);
CMatrix s01_closed(const ThermalNoiseParams& noise, double xi, const DensityOperator& rho);
CMatrix s00_closed(const ThermalNoiseParams& noise, const UnitaryParams& u,
                   const DensityOperator& rho);
CMatrix s01_closed(const ThermalNoiseParams& noise, const UnitaryParams& u,
                   const DensityOperator& rho);

// q_c(xi) = 2 g sqrt(1-g) [(1-2p) rho00 + p] cos(xi)
//           + (2-g) g (2p-1) rho00 + (1-g p)^2          (independent of rho01)
double q_factor(const ThermalNoiseParams& noise, double xi, double rho00);

// d q_c / d xi = -2 g sqrt(1-g) [(1-2p) rho00 + p] sin(xi)
double dq_factor(const ThermalNoiseParams& noise, double xi, double rho00);

// Joint output state for an arbitrary (possibly mixed) control preparation,
// assembled from the generic S00/S01 blocks weighted by the control matrix
// elements. Assumes identical channels, so S00 = S11.
DensityOperator joint_state_general(const KrausChannel& ch, const DensityOperator& rho,
                                    const DensityOperator& rho_c);

// Reduced control state diag(p_c, 1-p_c) + q_c sqrt(p_c(1-p_c)) off-diagonals;
// requires a pure control preparation.
DensityOperator reduced_control(const SwitchOutput& out, const ControlState& ctrl);

}  // namespace switchqfi
