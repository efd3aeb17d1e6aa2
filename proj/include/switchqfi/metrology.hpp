// metrology.hpp — Fisher-information figures of merit for phase estimation:
// control-qubit QFI/CFI closed forms, the standard-channel benchmark, the
// spectral QFI, Hadamard measurement statistics and post-measurement states.

#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "switchqfi/switch.hpp"

namespace switchqfi {

// Closed-form quantities at one parameter point (z-axis unitary).
struct FisherReport {
    double q_c;
    double dq_c;
    double fq_con;
    double fc_con;
    double p_plus;
    double p_minus;
};

// Probe configuration for the standard (unswitched) noisy unitary channel.
struct StandardProbeConfig {
    BlochVector r;
    UnitaryParams u;
    ThermalNoiseParams noise;
};

// QFI of the control qubit, F = 4 p_c (1-p_c) (dq)^2 / (1 - q^2). Indeterminate
// 0/0 points (gamma in {0,1}, sin xi = 0 with |q| = 1) resolve to the limit 0.
double qfi_control(const ThermalNoiseParams& noise, double xi, double rho00, double p_c);

// QFI of the standard channel output for Bloch-vector input r,
//   F = [(A U r + c) . A(n x U r)]^2 / (1 - |A U r + c|^2) + |A(n x U r)|^2;
// for a pure output state the first term is dropped (its numerator vanishes
// there). The map overload works for any affine qubit channel (A, c); the
// config overload derives the map from its thermal parameters.
double qfi_standard(const BlochVector& r, const UnitaryParams& u, const AffineBlochMap& map);
double qfi_standard(const StandardProbeConfig& cfg);

using StateFamily = std::function<DensityOperator(double)>;

struct SpectralOptions {
    double fd_step = 1e-5;                       // central-difference step for d rho / d xi
    std::optional<CMatrix> analytic_derivative;  // bypasses finite differences when set
    double eigenvalue_cutoff = 1e-12;            // skip terms with lambda_l + lambda_m below
};

// Spectral QFI  F = 2 sum_lm |<l| drho |m>|^2 / (lambda_l + lambda_m).
double qfi_spectral(const StateFamily& family, double xi, const SpectralOptions& opt = {});

// Hadamard-basis outcome probabilities P± = 1/2 ± sqrt(p_c(1-p_c)) q_c.
std::pair<double, double> hadamard_probs(double p_c, double q_c);

// Classical Fisher information of the Hadamard measurement on the control,
//   F_c = 4 p_c (1-p_c) (dq)^2 / (1 - 4 p_c (1-p_c) q^2);
// equals qfi_control exactly at p_c = 1/2.
double cfi_control(double p_c, double q_c, double dq_c);

struct PostMeasurement {
    std::optional<DensityOperator> plus_state;  // absent when the outcome probability vanishes
    std::optional<DensityOperator> minus_state;
    double p_plus;
    double p_minus;
};

// Probe states conditioned on the control outcome:
// rho_± = S00(rho)/2 ± sqrt(p_c(1-p_c)) S01(rho), normalized by P± = tr(rho_±).
PostMeasurement post_measurement_states(const SwitchOutput& out, double p_c);

// Central difference (f(x+h) - f(x-h)) / (2h).
double finite_difference(const std::function<double(double)>& f, double x, double h = 1e-6);

// Bundles q_c, its derivative, both Fisher informations and the Hadamard
// probabilities at one parameter point.
FisherReport fisher_report(const ThermalNoiseParams& noise, double xi, double rho00, double p_c);

}  // namespace switchqfi
