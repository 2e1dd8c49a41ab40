#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace cbs {

using cxd = std::complex<double>;

/// Per-mode photon-number truncation (inclusive).
struct FockCutoff {
    int nmax1 = 0;
    int nmax2 = 0;

    int dim1() const { return nmax1 + 1; }
    int dim2() const { return nmax2 + 1; }
    std::size_t dim() const { return static_cast<std::size_t>(dim1()) * dim2(); }
    std::size_t index(int n1, int n2) const {
        return static_cast<std::size_t>(n1) * dim2() + n2;
    }
    bool operator==(const FockCutoff&) const = default;
};

/// Dense two-mode photonic amplitude vector over a truncated Fock basis.
/// Values are immutable in spirit: operations return new states.
class TwoModeState {
  public:
    TwoModeState() = default;
    explicit TwoModeState(FockCutoff cutoff)
        : cutoff_(cutoff), amps_(cutoff.dim(), cxd{0.0, 0.0}) {}
    TwoModeState(FockCutoff cutoff, std::vector<cxd> amps);

    static TwoModeState basis(int n1, int n2, FockCutoff cutoff);

    const FockCutoff& cutoff() const { return cutoff_; }
    const std::vector<cxd>& amplitudes() const { return amps_; }
    std::vector<cxd>& amplitudes() { return amps_; }

    cxd amp(int n1, int n2) const { return amps_[cutoff_.index(n1, n2)]; }
    void set_amp(int n1, int n2, cxd value) { amps_[cutoff_.index(n1, n2)] = value; }

    double norm() const;
    double norm_sq() const;
    TwoModeState normalized() const;

    /// Phase convention: first nonzero amplitude (lexicographic n1,n2) made
    /// real and positive.
    TwoModeState canonical_phase() const;

    double mean_photons(int mode) const;

    TwoModeState& operator+=(const TwoModeState& other);
    TwoModeState& operator*=(cxd scale);

  private:
    FockCutoff cutoff_;
    std::vector<cxd> amps_;
};

TwoModeState operator+(TwoModeState a, const TwoModeState& b);
TwoModeState operator*(cxd scale, TwoModeState s);

/// <a|b>; both states must share a cutoff.
cxd inner(const TwoModeState& a, const TwoModeState& b);

enum class AncillaLevel { m = 0, g = 1, a = 2, b = 3, c = 4 };
inline constexpr std::array<AncillaLevel, 5> kAncillaLevels = {
    AncillaLevel::m, AncillaLevel::g, AncillaLevel::a, AncillaLevel::b, AncillaLevel::c};
const char* to_string(AncillaLevel level);

/// Ancilla-level-indexed family of two-mode photonic branch amplitudes
/// (unnormalized); a physical state has total norm 1 across branches.
struct JointState {
    FockCutoff cutoff;
    std::array<TwoModeState, 5> branches;

    explicit JointState(FockCutoff c) : cutoff(c) {
        for (auto& b : branches) b = TwoModeState(c);
    }

    TwoModeState& branch(AncillaLevel level) { return branches[static_cast<int>(level)]; }
    const TwoModeState& branch(AncillaLevel level) const {
        return branches[static_cast<int>(level)];
    }

    double norm_sq() const;
    double branch_population(AncillaLevel level) const { return branch(level).norm_sq(); }
};

/// Ladder action a|n> = sqrt(n)|n-1> on the selected mode. Amplitudes pushed
/// past the cutoff are dropped.
TwoModeState annihilate(const TwoModeState& state, int mode);
TwoModeState create(const TwoModeState& state, int mode);

/// Truncated, renormalized product coherent state |alpha1>|alpha2>.
/// Throws CutoffTooSmall if 1 - sum|amp|^2 exceeds leak_tol and the caller
/// did not accept renormalization.
TwoModeState coherent_fock(cxd alpha1, cxd alpha2, FockCutoff cutoff,
                           double leak_tol = 1e-8, bool accept_renormalization = false);

/// Single-mode truncated coherent amplitude vector (unnormalized series) and
/// its norm leakage; building block for coherent_fock and backend bridging.
std::vector<cxd> coherent_series(cxd alpha, int nmax, double* leakage = nullptr);

/// Beam-splitter unitary with mode matrix
///   [[cos th, -i e^{i phi} sin th], [-i e^{-i phi} sin th, cos th]],
/// applied blockwise per total-photon-number sector. On sectors clipped by the
/// cutoff, the generator is truncated first, so the map stays unitary on the
/// truncated space.
TwoModeState apply_bs(const TwoModeState& state, double theta, double phi);

/// exp(-i t dGamma(h)) for a 2x2 Hermitian h (h12 given; h21 = conj(h12)).
TwoModeState apply_quadratic_evolution(const TwoModeState& state, double h11, double h22,
                                       cxd h12, double t);

/// amplitudes(n1,n2) *= exp(-i (theta1 n1 + theta2 n2))
TwoModeState apply_phase_rotation(const TwoModeState& state, double theta1, double theta2);

/// Exact mode exchange |n1,n2> -> |n2,n1>. Requires nmax1 == nmax2.
TwoModeState swap_modes(const TwoModeState& state);

/// |<a|b>|^2 after normalizing both. Throws ZeroState on zero input.
double fidelity_fock(const TwoModeState& a, const TwoModeState& b);

/// JSON round-trip: array of (n1, n2, re, im) records plus cutoff header.
std::string to_json(const TwoModeState& state);
TwoModeState two_mode_state_from_json(const std::string& text);

}  // namespace cbs
