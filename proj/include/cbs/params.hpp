#pragma once

#include <complex>
#include <string>
#include <vector>

namespace cbs {

/// Raw constants of the four-wave-mixing scheme. All frequencies are angular
/// frequencies in rad/s; photon numbers are dimensionless.
struct PhysicalParams {
    double g1 = 0.0;                 // cavity coupling, mode 1 <-> |g>-|a>
    double g2 = 0.0;                 // cavity coupling, mode 2 <-> |g>-|b>
    double omega_rabi1 = 0.0;        // classical pump Rabi frequency on |c>-|a>
    double omega_rabi2 = 0.0;        // classical pump Rabi frequency on |c>-|b>
    double delta1 = 0.0;             // one-photon detuning of mode 1
    double delta2 = 0.0;             // one-photon detuning of mode 2
    double delta_two_photon = 0.0;   // two-photon detuning
    double delta_four_photon = 0.0;  // four-photon detuning
    double gamma_a = 0.0;            // radiative decay rate of |a>
    double gamma_b = 0.0;            // radiative decay rate of |b>
    double gamma_c = 0.0;            // radiative decay rate of |c>
    double kappa = 0.0;              // cavity damping rate
    double n1 = 0.0;                 // mean photon number, input mode 1
    double n2 = 0.0;                 // mean photon number, input mode 2
    double bs_phase = 0.0;           // beam-splitter phase (radians)
};

/// Coefficients of the effective two-mode Hamiltonian
///   H_eff(t) = eta1 n1 + eta2 n2 + chi0 (a1^dag a2 e^{i dF t} + h.c.)
/// together with the effective and shifted detunings they were derived from.
struct EffectiveParams {
    double eta1 = 0.0;       // self-phase coefficient, mode 1
    double eta2 = 0.0;       // self-phase coefficient, mode 2
    double chi0 = 0.0;       // beam-splitter coupling
    double delta_eff = 0.0;  // effective two-level detuning
    double delta_f = 0.0;    // shifted four-photon detuning dF + eta1 - eta2

    // Four-photon detuning of the underlying physical system.
    double delta_four_photon() const { return delta_f - eta1 + eta2; }
};

struct ValidityCheck {
    std::string name;
    double ratio = 0.0;  // left side / right side of the "<<" inequality
    bool pass = false;   // ratio <= strictness
};

/// One row per inequality the adiabatic elimination assumes. Failures are
/// flags, not errors.
struct ValidityReport {
    std::vector<ValidityCheck> checks;
    double strictness = 0.1;

    bool all_pass() const;
    std::vector<std::string> failing_names() const;
    /// Recompute pass flags at a different strictness.
    ValidityReport at_strictness(double s) const;
};

struct ExcitationProbabilities {
    double p_a = 0.0;
    double p_b = 0.0;
    double p_c = 0.0;
    double total() const { return p_a + p_b + p_c; }
};

/// Derive eta_i, chi0, Delta_eff, delta_F from the raw couplings.
/// Throws ZeroDetuning when delta1, delta2 or the effective detuning vanish.
EffectiveParams derive_effective(const PhysicalParams& p);

/// Audit every smallness condition of the dispersive derivation at the given
/// strictness (ratio <= strictness passes).
ValidityReport check_validity(const PhysicalParams& p, double strictness = 0.1);

/// One- and two-photon excitation probabilities P_a, P_b, P_c(t).
ExcitationProbabilities excitation_probabilities(const PhysicalParams& p, double t);

/// Worst-case (constructive-interference) value of P_c over t.
ExcitationProbabilities excitation_probabilities_max(const PhysicalParams& p);

}  // namespace cbs
