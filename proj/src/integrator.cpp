#include "cbs/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "cbs/errors.hpp"

namespace cbs {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384,     0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,    0.0,         7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

}  // namespace

AdaptiveRk45::AdaptiveRk45(OdeRhs rhs, OdeOptions options)
    : rhs_(std::move(rhs)), opt_(options), k_(7) {}

double AdaptiveRk45::error_norm(const std::vector<cxd>& y0, const std::vector<cxd>& y1,
                                const std::vector<cxd>& err) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        const double scale =
            opt_.abs_tol + opt_.rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double e = std::abs(err[i]) / scale;
        acc += e * e;
    }
    return std::sqrt(acc / std::max<std::size_t>(1, err.size()));
}

double AdaptiveRk45::initial_step(const std::vector<cxd>& y, double t0, double t1) {
    if (opt_.initial_step > 0.0) return std::min(opt_.initial_step, t1 - t0);
    rhs_(t0, y, k_[0]);
    double ny = 0.0, nf = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        ny += std::norm(y[i]);
        nf += std::norm(k_[0][i]);
    }
    ny = std::sqrt(ny);
    nf = std::sqrt(nf);
    double h = (nf > 0.0) ? 0.01 * (ny + opt_.abs_tol) / nf : (t1 - t0) * 1e-6;
    return std::min(h, t1 - t0);
}

void AdaptiveRk45::integrate(std::vector<cxd>& y, double t0, double t1) {
    if (t1 <= t0) return;
    const std::size_t n = y.size();
    for (auto& k : k_) k.assign(n, cxd{});
    scratch_.assign(n, cxd{});
    y5_.assign(n, cxd{});
    err_.assign(n, cxd{});

    double t = t0;
    const bool auto_h = (opt_.initial_step <= 0.0);
    double h = initial_step(y, t0, t1);
    const double h_min = (t1 - t0) * 1e-15;
    bool have_k0 = auto_h;  // initial_step already evaluated f(t0, y)

    while (t < t1) {
        h = std::min(h, t1 - t);
        if (h < h_min)
            throw StepFailure("adaptive step size underflow at t = " + std::to_string(t));

        if (!have_k0) {
            rhs_(t, y, k_[0]);
            have_k0 = true;
        }
        for (int stage = 1; stage < 7; ++stage) {
            for (std::size_t i = 0; i < n; ++i) {
                cxd acc = y[i];
                for (int j = 0; j < stage; ++j)
                    if (kA[stage][j] != 0.0) acc += h * kA[stage][j] * k_[j][i];
                scratch_[i] = acc;
            }
            rhs_(t + kC[stage] * h, scratch_, k_[stage]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            cxd acc5{0.0, 0.0}, acc4{0.0, 0.0};
            for (int j = 0; j < 7; ++j) {
                if (kB5[j] != 0.0) acc5 += kB5[j] * k_[j][i];
                acc4 += kB4[j] * k_[j][i];
            }
            y5_[i] = y[i] + h * acc5;
            err_[i] = h * (acc5 - acc4);
        }

        const double err = error_norm(y, y5_, err_);
        if (err <= 1.0) {
            t += h;
            y.swap(y5_);
            k_[0].swap(k_[6]);  // FSAL: stage 7 equals next step's first stage
            ++stats_.steps;
            stats_.last_step = h;
            if (stats_.steps + stats_.rejected > opt_.max_steps)
                throw StepFailure("step budget exhausted");
            const double grow = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
            h *= std::clamp(grow, 0.2, 5.0);
        } else {
            ++stats_.rejected;  // k_[0] still matches (t, y)
            if (stats_.steps + stats_.rejected > opt_.max_steps)
                throw StepFailure("step budget exhausted");
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
        }
    }
}

}  // namespace cbs
