#include "cbs/hilbert.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cbs/errors.hpp"
#include "json.hpp"

namespace cbs {

namespace {

double norm_sq_of(const std::vector<cxd>& amps) {
    double s = 0.0;
    for (const cxd& a : amps) s += std::norm(a);
    return s;
}

}  // namespace

TwoModeState::TwoModeState(FockCutoff cutoff, std::vector<cxd> amps)
    : cutoff_(cutoff), amps_(std::move(amps)) {
    if (amps_.size() != cutoff_.dim())
        throw std::invalid_argument("amplitude vector does not match cutoff dimension");
}

TwoModeState TwoModeState::basis(int n1, int n2, FockCutoff cutoff) {
    TwoModeState s(cutoff);
    s.set_amp(n1, n2, cxd{1.0, 0.0});
    return s;
}

double TwoModeState::norm_sq() const { return norm_sq_of(amps_); }
double TwoModeState::norm() const { return std::sqrt(norm_sq()); }

TwoModeState TwoModeState::normalized() const {
    const double n = norm();
    if (n == 0.0) throw ZeroState("cannot normalize the zero state");
    TwoModeState out = *this;
    for (cxd& a : out.amps_) a /= n;
    return out;
}

TwoModeState TwoModeState::canonical_phase() const {
    for (const cxd& a : amps_) {
        if (std::abs(a) > 0.0) {
            const cxd phase = std::conj(a) / std::abs(a);
            TwoModeState out = *this;
            for (cxd& x : out.amps_) x *= phase;
            return out;
        }
    }
    return *this;
}

double TwoModeState::mean_photons(int mode) const {
    double num = 0.0;
    for (int n1 = 0; n1 <= cutoff_.nmax1; ++n1)
        for (int n2 = 0; n2 <= cutoff_.nmax2; ++n2)
            num += (mode == 1 ? n1 : n2) * std::norm(amps_[cutoff_.index(n1, n2)]);
    return num;
}

TwoModeState& TwoModeState::operator+=(const TwoModeState& other) {
    if (!(cutoff_ == other.cutoff_)) throw std::invalid_argument("cutoff mismatch");
    for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
    return *this;
}

TwoModeState& TwoModeState::operator*=(cxd scale) {
    for (cxd& a : amps_) a *= scale;
    return *this;
}

TwoModeState operator+(TwoModeState a, const TwoModeState& b) { return a += b; }
TwoModeState operator*(cxd scale, TwoModeState s) { return s *= scale; }

cxd inner(const TwoModeState& a, const TwoModeState& b) {
    if (!(a.cutoff() == b.cutoff())) throw std::invalid_argument("cutoff mismatch");
    cxd s{0.0, 0.0};
    const auto& av = a.amplitudes();
    const auto& bv = b.amplitudes();
    for (std::size_t i = 0; i < av.size(); ++i) s += std::conj(av[i]) * bv[i];
    return s;
}

const char* to_string(AncillaLevel level) {
    switch (level) {
        case AncillaLevel::m: return "m";
        case AncillaLevel::g: return "g";
        case AncillaLevel::a: return "a";
        case AncillaLevel::b: return "b";
        case AncillaLevel::c: return "c";
    }
    return "?";
}

double JointState::norm_sq() const {
    double s = 0.0;
    for (const auto& b : branches) s += b.norm_sq();
    return s;
}

TwoModeState annihilate(const TwoModeState& state, int mode) {
    const FockCutoff& c = state.cutoff();
    TwoModeState out(c);
    if (mode == 1) {
        for (int n1 = 1; n1 <= c.nmax1; ++n1)
            for (int n2 = 0; n2 <= c.nmax2; ++n2)
                out.set_amp(n1 - 1, n2, std::sqrt(double(n1)) * state.amp(n1, n2));
    } else if (mode == 2) {
        for (int n1 = 0; n1 <= c.nmax1; ++n1)
            for (int n2 = 1; n2 <= c.nmax2; ++n2)
                out.set_amp(n1, n2 - 1, std::sqrt(double(n2)) * state.amp(n1, n2));
    } else {
        throw std::invalid_argument("mode must be 1 or 2");
    }
    return out;
}

TwoModeState create(const TwoModeState& state, int mode) {
    const FockCutoff& c = state.cutoff();
    TwoModeState out(c);
    if (mode == 1) {
        for (int n1 = 0; n1 < c.nmax1; ++n1)
            for (int n2 = 0; n2 <= c.nmax2; ++n2)
                out.set_amp(n1 + 1, n2, std::sqrt(double(n1 + 1)) * state.amp(n1, n2));
    } else if (mode == 2) {
        for (int n1 = 0; n1 <= c.nmax1; ++n1)
            for (int n2 = 0; n2 < c.nmax2; ++n2)
                out.set_amp(n1, n2 + 1, std::sqrt(double(n2 + 1)) * state.amp(n1, n2));
    } else {
        throw std::invalid_argument("mode must be 1 or 2");
    }
    return out;
}

std::vector<cxd> coherent_series(cxd alpha, int nmax, double* leakage) {
    std::vector<cxd> amps(static_cast<std::size_t>(nmax) + 1);
    cxd term = std::exp(cxd{-0.5 * std::norm(alpha), 0.0});
    double sum = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        amps[n] = term;
        sum += std::norm(term);
        term *= alpha / std::sqrt(double(n + 1));
    }
    if (leakage) *leakage = std::max(0.0, 1.0 - sum);
    return amps;
}

TwoModeState coherent_fock(cxd alpha1, cxd alpha2, FockCutoff cutoff,
                           double leak_tol, bool accept_renormalization) {
    double leak1 = 0.0, leak2 = 0.0;
    const std::vector<cxd> c1 = coherent_series(alpha1, cutoff.nmax1, &leak1);
    const std::vector<cxd> c2 = coherent_series(alpha2, cutoff.nmax2, &leak2);
    const double leakage = 1.0 - (1.0 - leak1) * (1.0 - leak2);
    if (leakage > leak_tol && !accept_renormalization)
        throw CutoffTooSmall(leakage, leak_tol);

    TwoModeState out(cutoff);
    for (int n1 = 0; n1 <= cutoff.nmax1; ++n1)
        for (int n2 = 0; n2 <= cutoff.nmax2; ++n2)
            out.set_amp(n1, n2, c1[n1] * c2[n2]);
    return out.normalized();
}

TwoModeState apply_quadratic_evolution(const TwoModeState& state, double h11, double h22,
                                       cxd h12, double t) {
    const FockCutoff& c = state.cutoff();
    TwoModeState out(c);
    const int nmax_total = c.nmax1 + c.nmax2;

    for (int total = 0; total <= nmax_total; ++total) {
        const int k_lo = std::max(0, total - c.nmax2);
        const int k_hi = std::min(total, c.nmax1);
        const int size = k_hi - k_lo + 1;
        if (size <= 0) continue;

        if (size == 1) {
            const int k = k_lo;
            const double phase = -(h11 * k + h22 * (total - k)) * t;
            out.set_amp(k, total - k, state.amp(k, total - k) * std::polar(1.0, phase));
            continue;
        }

        // Sector block of dGamma(h): tridiagonal Hermitian in k.
        Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(size, size);
        for (int i = 0; i < size; ++i) {
            const int k = k_lo + i;
            block(i, i) = h11 * k + h22 * (total - k);
            if (k + 1 <= k_hi) {
                const cxd coupling = h12 * std::sqrt(double(k + 1) * double(total - k));
                block(i + 1, i) = coupling;
                block(i, i + 1) = std::conj(coupling);
            }
        }

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
        Eigen::VectorXcd in(size);
        for (int i = 0; i < size; ++i) in(i) = state.amp(k_lo + i, total - (k_lo + i));
        Eigen::VectorXcd rotated = solver.eigenvectors().adjoint() * in;
        for (int i = 0; i < size; ++i)
            rotated(i) *= std::polar(1.0, -solver.eigenvalues()(i) * t);
        Eigen::VectorXcd result = solver.eigenvectors() * rotated;
        for (int i = 0; i < size; ++i)
            out.set_amp(k_lo + i, total - (k_lo + i), result(i));
    }
    return out;
}

TwoModeState apply_bs(const TwoModeState& state, double theta, double phi) {
    return apply_quadratic_evolution(state, 0.0, 0.0, std::polar(1.0, phi), theta);
}

TwoModeState apply_phase_rotation(const TwoModeState& state, double theta1, double theta2) {
    const FockCutoff& c = state.cutoff();
    TwoModeState out(c);
    for (int n1 = 0; n1 <= c.nmax1; ++n1)
        for (int n2 = 0; n2 <= c.nmax2; ++n2)
            out.set_amp(n1, n2,
                        state.amp(n1, n2) * std::polar(1.0, -(theta1 * n1 + theta2 * n2)));
    return out;
}

TwoModeState swap_modes(const TwoModeState& state) {
    const FockCutoff& c = state.cutoff();
    if (c.nmax1 != c.nmax2)
        throw std::invalid_argument("mode swap requires equal per-mode cutoffs");
    TwoModeState out(c);
    for (int n1 = 0; n1 <= c.nmax1; ++n1)
        for (int n2 = 0; n2 <= c.nmax2; ++n2)
            out.set_amp(n2, n1, state.amp(n1, n2));
    return out;
}

double fidelity_fock(const TwoModeState& a, const TwoModeState& b) {
    const double na = a.norm_sq(), nb = b.norm_sq();
    if (na == 0.0 || nb == 0.0) throw ZeroState("fidelity of a zero state");
    return std::norm(inner(a, b)) / (na * nb);
}

std::string to_json(const TwoModeState& state) {
    nlohmann::json records = nlohmann::json::array();
    const FockCutoff& c = state.cutoff();
    for (int n1 = 0; n1 <= c.nmax1; ++n1)
        for (int n2 = 0; n2 <= c.nmax2; ++n2) {
            const cxd a = state.amp(n1, n2);
            if (a != cxd{0.0, 0.0})
                records.push_back({n1, n2, a.real(), a.imag()});
        }
    nlohmann::json j;
    j["format"] = "two_mode_state";
    j["cutoff"] = {{"nmax1", c.nmax1}, {"nmax2", c.nmax2}};
    j["amplitudes"] = std::move(records);
    return j.dump();
}

TwoModeState two_mode_state_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    FockCutoff cutoff{j.at("cutoff").at("nmax1").get<int>(),
                      j.at("cutoff").at("nmax2").get<int>()};
    TwoModeState out(cutoff);
    for (const auto& rec : j.at("amplitudes")) {
        const int n1 = rec.at(0).get<int>();
        const int n2 = rec.at(1).get<int>();
        if (n1 < 0 || n1 > cutoff.nmax1 || n2 < 0 || n2 > cutoff.nmax2)
            throw std::out_of_range("amplitude record outside cutoff");
        out.set_amp(n1, n2, cxd{rec.at(2).get<double>(), rec.at(3).get<double>()});
    }
    return out;
}

}  // namespace cbs
