#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cbs/hilbert.hpp"

namespace cbs {

/// 2x2 complex matrix acting on the mode (coherent-amplitude) space.
struct Mat2 {
    cxd m11{1.0, 0.0}, m12{0.0, 0.0}, m21{0.0, 0.0}, m22{1.0, 0.0};

    static Mat2 identity() { return {}; }
    /// The beam-splitter matrix [[cos, -i e^{i phi} sin], [-i e^{-i phi} sin, cos]].
    static Mat2 beam_splitter(double theta, double phi);
    /// Plain exchange [[0,1],[1,0]].
    static Mat2 exchange() { return {cxd{0, 0}, cxd{1, 0}, cxd{1, 0}, cxd{0, 0}}; }
    static Mat2 diagonal_phases(double theta1, double theta2);

    Mat2 operator*(const Mat2& o) const;
    std::pair<cxd, cxd> apply(cxd a1, cxd a2) const;
    double unitarity_defect() const;  // max-norm of M M^dag - I
};

/// One weighted two-mode coherent product term: w |alpha1>|alpha2>.
struct CoherentTerm {
    cxd weight{0.0, 0.0};
    cxd alpha1{0.0, 0.0};
    cxd alpha2{0.0, 0.0};
};

/// Finite superposition of two-mode coherent product states, stored
/// unnormalized. Exact backend: overlaps and linear-optics transforms in
/// closed form, no truncation.
class CoherentSuperposition {
  public:
    static constexpr std::size_t kMaxTerms = 64;

    CoherentSuperposition() = default;
    explicit CoherentSuperposition(std::vector<CoherentTerm> terms);

    static CoherentSuperposition product(cxd alpha1, cxd alpha2, cxd weight = {1.0, 0.0});
    /// |alpha,beta> + sign |beta,alpha>
    static CoherentSuperposition secs(cxd alpha, cxd beta, int sign);

    const std::vector<CoherentTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    CoherentSuperposition& operator+=(const CoherentSuperposition& other);
    CoherentSuperposition& operator*=(cxd scale);

    double norm_sq() const;
    CoherentSuperposition normalized() const;
    /// First term's weight made real-positive.
    CoherentSuperposition canonical_phase() const;
    /// Merge terms with coinciding amplitudes (|d alpha| < 1e-12) and drop
    /// exact-zero weights.
    CoherentSuperposition simplified() const;

  private:
    std::vector<CoherentTerm> terms_;
};

CoherentSuperposition operator+(CoherentSuperposition a, const CoherentSuperposition& b);
CoherentSuperposition operator*(cxd scale, CoherentSuperposition s);

/// <x|y> via pairwise coherent overlaps.
cxd overlap(const CoherentSuperposition& x, const CoherentSuperposition& y);

/// Single-mode coherent overlap <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b).
cxd coherent_overlap(cxd a, cxd b);

/// Map every term's amplitude pair by u (weights unchanged). Throws
/// NonUnitary if u deviates from unitarity by more than 1e-10.
CoherentSuperposition mode_transform(const CoherentSuperposition& s, const Mat2& u);

/// |overlap|^2 / (|a|^2 |b|^2). Throws ZeroState on zero norm.
double fidelity_coherent(const CoherentSuperposition& a, const CoherentSuperposition& b);

/// Truncated Fock image; used for cross-backend checks.
TwoModeState to_fock(const CoherentSuperposition& s, FockCutoff cutoff,
                     double leak_tol = 1e-8, bool accept_renormalization = false);

/// Rows of (re w, im w, re a1, im a1, re a2, im a2) with a JSON header.
std::string to_json(const CoherentSuperposition& s);
CoherentSuperposition coherent_superposition_from_json(const std::string& text);

}  // namespace cbs
