#include "cbs/coherent.hpp"

#include <cmath>
#include <stdexcept>

#include "cbs/errors.hpp"
#include "json.hpp"

namespace cbs {

Mat2 Mat2::beam_splitter(double theta, double phi) {
    const double c = std::cos(theta), s = std::sin(theta);
    const cxd mi{0.0, -1.0};
    return {cxd{c, 0.0}, mi * std::polar(s, phi), mi * std::polar(s, -phi), cxd{c, 0.0}};
}

Mat2 Mat2::diagonal_phases(double theta1, double theta2) {
    return {std::polar(1.0, -theta1), cxd{0, 0}, cxd{0, 0}, std::polar(1.0, -theta2)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
}

std::pair<cxd, cxd> Mat2::apply(cxd a1, cxd a2) const {
    return {m11 * a1 + m12 * a2, m21 * a1 + m22 * a2};
}

double Mat2::unitarity_defect() const {
    // M M^dag entries
    const cxd d11 = m11 * std::conj(m11) + m12 * std::conj(m12) - 1.0;
    const cxd d12 = m11 * std::conj(m21) + m12 * std::conj(m22);
    const cxd d21 = m21 * std::conj(m11) + m22 * std::conj(m12);
    const cxd d22 = m21 * std::conj(m21) + m22 * std::conj(m22) - 1.0;
    return std::max(std::max(std::abs(d11), std::abs(d12)),
                    std::max(std::abs(d21), std::abs(d22)));
}

CoherentSuperposition::CoherentSuperposition(std::vector<CoherentTerm> terms)
    : terms_(std::move(terms)) {
    if (terms_.size() > kMaxTerms)
        throw std::length_error("coherent superposition exceeds the term limit");
}

CoherentSuperposition CoherentSuperposition::product(cxd alpha1, cxd alpha2, cxd weight) {
    return CoherentSuperposition({{weight, alpha1, alpha2}});
}

CoherentSuperposition CoherentSuperposition::secs(cxd alpha, cxd beta, int sign) {
    return CoherentSuperposition(
        {{cxd{1.0, 0.0}, alpha, beta}, {cxd{sign >= 0 ? 1.0 : -1.0, 0.0}, beta, alpha}});
}

CoherentSuperposition& CoherentSuperposition::operator+=(const CoherentSuperposition& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    if (terms_.size() > kMaxTerms) {
        *this = simplified();
        if (terms_.size() > kMaxTerms)
            throw std::length_error("coherent superposition exceeds the term limit");
    }
    return *this;
}

CoherentSuperposition& CoherentSuperposition::operator*=(cxd scale) {
    for (auto& t : terms_) t.weight *= scale;
    return *this;
}

CoherentSuperposition operator+(CoherentSuperposition a, const CoherentSuperposition& b) {
    return a += b;
}
CoherentSuperposition operator*(cxd scale, CoherentSuperposition s) { return s *= scale; }

cxd coherent_overlap(cxd a, cxd b) {
    return std::exp(cxd{-0.5 * std::norm(a) - 0.5 * std::norm(b), 0.0} + std::conj(a) * b);
}

cxd overlap(const CoherentSuperposition& x, const CoherentSuperposition& y) {
    cxd s{0.0, 0.0};
    for (const auto& tx : x.terms())
        for (const auto& ty : y.terms())
            s += std::conj(tx.weight) * ty.weight *
                 coherent_overlap(tx.alpha1, ty.alpha1) * coherent_overlap(tx.alpha2, ty.alpha2);
    return s;
}

double CoherentSuperposition::norm_sq() const {
    return overlap(*this, *this).real();
}

CoherentSuperposition CoherentSuperposition::normalized() const {
    const double n2 = norm_sq();
    if (n2 <= 0.0) throw ZeroState("cannot normalize a zero coherent superposition");
    CoherentSuperposition out = *this;
    out *= cxd{1.0 / std::sqrt(n2), 0.0};
    return out;
}

CoherentSuperposition CoherentSuperposition::canonical_phase() const {
    for (const auto& t : terms_) {
        if (std::abs(t.weight) > 0.0) {
            CoherentSuperposition out = *this;
            out *= std::conj(t.weight) / std::abs(t.weight);
            return out;
        }
    }
    return *this;
}

CoherentSuperposition CoherentSuperposition::simplified() const {
    constexpr double kMergeTol = 1e-12;
    std::vector<CoherentTerm> merged;
    for (const auto& t : terms_) {
        bool absorbed = false;
        for (auto& m : merged) {
            if (std::abs(m.alpha1 - t.alpha1) < kMergeTol &&
                std::abs(m.alpha2 - t.alpha2) < kMergeTol) {
                m.weight += t.weight;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(t);
    }
    std::erase_if(merged, [](const CoherentTerm& t) { return t.weight == cxd{0.0, 0.0}; });
    CoherentSuperposition out;
    out.terms_ = std::move(merged);
    return out;
}

CoherentSuperposition mode_transform(const CoherentSuperposition& s, const Mat2& u) {
    const double defect = u.unitarity_defect();
    if (defect > 1e-10)
        throw NonUnitary("mode matrix deviates from unitarity by " + std::to_string(defect));
    std::vector<CoherentTerm> terms = s.terms();
    for (auto& t : terms) {
        auto [a1, a2] = u.apply(t.alpha1, t.alpha2);
        t.alpha1 = a1;
        t.alpha2 = a2;
    }
    return CoherentSuperposition(std::move(terms));
}

double fidelity_coherent(const CoherentSuperposition& a, const CoherentSuperposition& b) {
    const double na = a.norm_sq(), nb = b.norm_sq();
    if (na <= 0.0 || nb <= 0.0) throw ZeroState("fidelity of a zero coherent superposition");
    return std::norm(overlap(a, b)) / (na * nb);
}

TwoModeState to_fock(const CoherentSuperposition& s, FockCutoff cutoff,
                     double leak_tol, bool accept_renormalization) {
    TwoModeState out(cutoff);
    for (const auto& t : s.terms()) {
        double leak1 = 0.0, leak2 = 0.0;
        const std::vector<cxd> c1 = coherent_series(t.alpha1, cutoff.nmax1, &leak1);
        const std::vector<cxd> c2 = coherent_series(t.alpha2, cutoff.nmax2, &leak2);
        const double leakage = 1.0 - (1.0 - leak1) * (1.0 - leak2);
        if (leakage > leak_tol && !accept_renormalization)
            throw CutoffTooSmall(leakage, leak_tol);
        for (int n1 = 0; n1 <= cutoff.nmax1; ++n1)
            for (int n2 = 0; n2 <= cutoff.nmax2; ++n2)
                out.set_amp(n1, n2, out.amp(n1, n2) + t.weight * c1[n1] * c2[n2]);
    }
    return out;
}

std::string to_json(const CoherentSuperposition& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& t : s.terms())
        rows.push_back({t.weight.real(), t.weight.imag(), t.alpha1.real(), t.alpha1.imag(),
                        t.alpha2.real(), t.alpha2.imag()});
    nlohmann::json j;
    j["format"] = "coherent_superposition";
    j["terms"] = std::move(rows);
    return j.dump();
}

CoherentSuperposition coherent_superposition_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    std::vector<CoherentTerm> terms;
    for (const auto& row : j.at("terms")) {
        terms.push_back({cxd{row.at(0).get<double>(), row.at(1).get<double>()},
                         cxd{row.at(2).get<double>(), row.at(3).get<double>()},
                         cxd{row.at(4).get<double>(), row.at(5).get<double>()}});
    }
    return CoherentSuperposition(std::move(terms));
}

}  // namespace cbs
