#include "cbs/params.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "cbs/errors.hpp"

namespace cbs {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_nonzero(double value, const char* what) {
    if (value == 0.0) throw ZeroDetuning(std::string(what) + " must be nonzero");
}

}  // namespace

bool ValidityReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidityCheck& c) { return c.pass; });
}

std::vector<std::string> ValidityReport::failing_names() const {
    std::vector<std::string> names;
    for (const auto& c : checks)
        if (!c.pass) names.push_back(c.name);
    return names;
}

ValidityReport ValidityReport::at_strictness(double s) const {
    ValidityReport out = *this;
    out.strictness = s;
    for (auto& c : out.checks) c.pass = (c.ratio <= s);
    return out;
}

EffectiveParams derive_effective(const PhysicalParams& p) {
    require_nonzero(p.delta1, "delta1");
    require_nonzero(p.delta2, "delta2");

    const double delta_eff = p.delta_two_photon -
                             p.omega_rabi1 * p.omega_rabi1 / p.delta1 -
                             p.omega_rabi2 * p.omega_rabi2 / p.delta2;
    require_nonzero(delta_eff, "effective detuning");

    EffectiveParams eff;
    eff.delta_eff = delta_eff;
    eff.eta1 = p.g1 * p.g1 / p.delta1 +
               p.g1 * p.g1 * p.omega_rabi1 * p.omega_rabi1 / (p.delta1 * p.delta1 * delta_eff);
    eff.eta2 = p.g2 * p.g2 / p.delta2 +
               p.g2 * p.g2 * p.omega_rabi2 * p.omega_rabi2 / (p.delta2 * p.delta2 * delta_eff);
    eff.chi0 = p.omega_rabi1 * p.omega_rabi2 * p.g1 * p.g2 / (p.delta1 * p.delta2 * delta_eff);
    eff.delta_f = p.delta_four_photon + eff.eta1 - eff.eta2;
    return eff;
}

ValidityReport check_validity(const PhysicalParams& p, double strictness) {
    const EffectiveParams eff = derive_effective(p);
    const double abs_deff = std::abs(eff.delta_eff);

    ValidityReport report;
    report.strictness = strictness;
    auto add = [&](std::string name, double ratio) {
        report.checks.push_back({std::move(name), ratio, ratio <= strictness});
    };

    const double sqn1 = std::sqrt(p.n1);
    const double sqn2 = std::sqrt(p.n2);

    // |g_i sqrt(n_i)/Delta_i| << 1
    add("one_photon_mode1", std::abs(p.g1 * sqn1 / p.delta1));
    add("one_photon_mode2", std::abs(p.g2 * sqn2 / p.delta2));

    // |g_i sqrt(n_i) Omega_i / (Delta_i Delta_eff)| << 1
    add("two_photon_mode1", std::abs(p.g1 * sqn1 * p.omega_rabi1 / (p.delta1 * eff.delta_eff)));
    add("two_photon_mode2", std::abs(p.g2 * sqn2 * p.omega_rabi2 / (p.delta2 * eff.delta_eff)));

    // |g_i^2 n_i / Delta_i| << |Delta_eff|  (the dropped photon-number shift)
    add("number_shift_mode1", std::abs(p.g1 * p.g1 * p.n1 / p.delta1) / abs_deff);
    add("number_shift_mode2", std::abs(p.g2 * p.g2 * p.n2 / p.delta2) / abs_deff);

    // transition bandwidths: |Delta_i| >> Gamma_{ga,gb}, |Delta_eff| >> Gamma_gc
    add("linewidth_a", p.gamma_a / std::abs(p.delta1));
    add("linewidth_b", p.gamma_b / std::abs(p.delta2));
    add("linewidth_c", p.gamma_c / abs_deff);

    // decay of the intermediate states at the matched-detuning swap time:
    // gamma_{a,b} << (2/pi)|Omega1 Omega2/Delta_eff * Delta_{1,2}/Delta_{2,1} * g_{2,1}/g_{1,2}|
    const double rhs_a = (2.0 / kPi) * std::abs(p.omega_rabi1 * p.omega_rabi2 / eff.delta_eff *
                                                (p.delta1 / p.delta2) * (p.g2 / p.g1));
    const double rhs_b = (2.0 / kPi) * std::abs(p.omega_rabi1 * p.omega_rabi2 / eff.delta_eff *
                                                (p.delta2 / p.delta1) * (p.g1 / p.g2));
    add("decay_intermediate_a", rhs_a > 0.0 ? p.gamma_a / rhs_a : (p.gamma_a == 0.0 ? 0.0 : HUGE_VAL));
    add("decay_intermediate_b", rhs_b > 0.0 ? p.gamma_b / rhs_b : (p.gamma_b == 0.0 ? 0.0 : HUGE_VAL));

    // gamma_c << (2/pi) |sqrt(n1 m) + sqrt(n2/m)|^{-2} |Delta_eff|, worst phase,
    // with m = Omega1 g1 Delta2 / (Omega2 g2 Delta1)
    const double m = std::abs(p.omega_rabi1 * p.g1 * p.delta2 / (p.omega_rabi2 * p.g2 * p.delta1));
    const double amp = std::sqrt(p.n1 * m) + std::sqrt(p.n2 / m);
    add("decay_two_photon_c", p.gamma_c * amp * amp * (kPi / 2.0) / abs_deff);

    return report;
}

ExcitationProbabilities excitation_probabilities(const PhysicalParams& p, double t) {
    const EffectiveParams eff = derive_effective(p);
    ExcitationProbabilities out;
    out.p_a = p.g1 * p.g1 * p.n1 / (p.delta1 * p.delta1);
    out.p_b = p.g2 * p.g2 * p.n2 / (p.delta2 * p.delta2);
    const std::complex<double> phase(std::cos(p.delta_four_photon * t), std::sin(p.delta_four_photon * t));
    const std::complex<double> amp =
        p.omega_rabi1 * p.g1 * std::sqrt(p.n1) / (p.delta1 * eff.delta_eff) +
        p.omega_rabi2 * p.g2 * std::sqrt(p.n2) / (p.delta2 * eff.delta_eff) * phase;
    out.p_c = std::norm(amp);
    return out;
}

ExcitationProbabilities excitation_probabilities_max(const PhysicalParams& p) {
    const EffectiveParams eff = derive_effective(p);
    ExcitationProbabilities out;
    out.p_a = p.g1 * p.g1 * p.n1 / (p.delta1 * p.delta1);
    out.p_b = p.g2 * p.g2 * p.n2 / (p.delta2 * p.delta2);
    const double amp = std::abs(p.omega_rabi1 * p.g1 * std::sqrt(p.n1) / (p.delta1 * eff.delta_eff)) +
                       std::abs(p.omega_rabi2 * p.g2 * std::sqrt(p.n2) / (p.delta2 * eff.delta_eff));
    out.p_c = amp * amp;
    return out;
}

}  // namespace cbs
