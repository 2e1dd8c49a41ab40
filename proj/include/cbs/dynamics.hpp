#pragma once

#include <vector>

#include "cbs/coherent.hpp"
#include "cbs/hilbert.hpp"
#include "cbs/integrator.hpp"
#include "cbs/params.hpp"

namespace cbs {

/// Full five-level coupling Hamiltonian over the truncated photonic space.
/// With `conditional` set the |m> branch carries no coupling and is preserved
/// exactly (in the model Hamiltonian |m> never couples either way; the flag
/// documents the conditional-swap reading).
struct FullHamiltonianSpec {
    PhysicalParams params;
    FockCutoff cutoff;
    bool conditional = true;
};

struct TraceSample {
    double t = 0.0;
    double pop_m = 0.0, pop_g = 0.0, pop_a = 0.0, pop_b = 0.0, pop_c = 0.0;
    double n1 = 0.0, n2 = 0.0;
    double norm = 0.0;
};

struct FullEvolutionResult {
    JointState final_state;
    std::vector<TraceSample> trace;
    double norm_drift = 0.0;
};

/// Integrate i d/dt |Psi> = H(t)|Psi> from 0 to t with the explicit
/// e^{i dF t} phase on the second pump. `trace_samples` > 0 records the
/// observable trace on a uniform grid including both endpoints.
FullEvolutionResult evolve_full(const FullHamiltonianSpec& spec, const JointState& initial,
                                double t, double tol, int trace_samples = 0);

enum class EffectiveVariant {
    Exact,   // exact 2x2 propagation of the time-dependent mode problem
    Magnus,  // leading-order Magnus (time ordering dropped in the BS factor)
};

/// Mode matrix M(t) with alpha(t) = M(t) alpha(0) for coherent amplitudes
/// (equivalently the single-photon-sector propagator).
Mat2 effective_mode_matrix(const EffectiveParams& eff, double t,
                           EffectiveVariant variant = EffectiveVariant::Exact);

/// Evolve a photonic state under H_eff(t) = eta1 n1 + eta2 n2 +
/// chi0 (a1^dag a2 e^{i dF t} + h.c.).
CoherentSuperposition evolve_effective(const EffectiveParams& eff,
                                       const CoherentSuperposition& state, double t,
                                       EffectiveVariant variant = EffectiveVariant::Exact);
TwoModeState evolve_effective(const EffectiveParams& eff, const TwoModeState& state, double t,
                              EffectiveVariant variant = EffectiveVariant::Exact);

/// Pieces of the phase x beam-splitter decomposition of the effective
/// propagator: single-mode phases (eta_i t), the leading-order accumulated BS
/// angle |chi0 sin(dF t/2) * 2/dF|, and the residual phase of the BS factor.
struct Decomposition {
    double phase1 = 0.0;
    double phase2 = 0.0;
    double bs_angle = 0.0;
    double residual_phase = 0.0;
};

Decomposition decompose(const EffectiveParams& eff, double t);

/// Smallest positive solution of 2 chi0 sin(dF t/2)/dF = pi/2 (magnitudes);
/// pi/(2|chi0|) at dF = 0. Throws SwapUnreachable when |chi0/dF| < pi/4.
double swap_time(const EffectiveParams& eff);

/// Output phases phi_i = eta_i t_s - pi/2 + dF t_s / 2, reduced to (-pi, pi].
std::pair<double, double> output_phases(const EffectiveParams& eff, double t_s);

struct CompareSample {
    double t = 0.0;
    double fidelity = 0.0;       // |g>-branch (normalized) vs effective state
    double pop_nonground = 0.0;  // population outside |g>
};

struct CompareReport {
    std::vector<CompareSample> samples;
    double min_fidelity = 1.0;
    double max_nonground = 0.0;
    std::vector<TraceSample> trace;
};

/// Run the full engine against the effective one from the same parameters.
/// Refuses (RegimeViolation) when check_validity fails at `strictness`.
CompareReport compare_full_vs_effective(const PhysicalParams& p, const TwoModeState& photonic,
                                        double t, FockCutoff cutoff, int samples = 100,
                                        double tol = 1e-10, double strictness = 0.1);

}  // namespace cbs
