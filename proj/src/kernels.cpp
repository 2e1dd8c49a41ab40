#include "cbs/kernels.hpp"

#include <atomic>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cbs::kernels {

namespace {

std::atomic<int> g_threads{0};

// Shared per-element evaluation so the serial and OpenMP paths produce
// bitwise-identical output.
struct FwmEval {
    const FwmContext& ctx;
    const cxd* in;
    cxd eminus;  // exp(-i dF t)
    cxd eplus;   // exp(+i dF t)

    cxd element(std::size_t flat) const {
        const std::size_t d = ctx.block_dim();
        const int d2 = ctx.nmax2 + 1;
        const int branch = static_cast<int>(flat / d);
        const std::size_t p = flat % d;
        const int n1 = static_cast<int>(p) / d2;
        const int n2 = static_cast<int>(p) % d2;

        const cxd* g = in;
        const cxd* a = in + d;
        const cxd* b = in + 2 * d;
        const cxd* c = in + 3 * d;

        cxd h{0.0, 0.0};
        switch (branch) {
            case 0:  // g
                if (n1 >= 1) h += ctx.g1 * std::sqrt(double(n1)) * a[p - d2];
                if (n2 >= 1) h += ctx.g2 * std::sqrt(double(n2)) * b[p - 1];
                break;
            case 1:  // a
                h += -ctx.delta1 * a[p] + ctx.omega1 * c[p];
                if (n1 + 1 <= ctx.nmax1) h += ctx.g1 * std::sqrt(double(n1 + 1)) * g[p + d2];
                break;
            case 2:  // b
                h += -ctx.delta2 * b[p] + ctx.omega2 * eminus * c[p];
                if (n2 + 1 <= ctx.nmax2) h += ctx.g2 * std::sqrt(double(n2 + 1)) * g[p + 1];
                break;
            case 3:  // c
                h += -ctx.delta_two_photon * c[p] + ctx.omega1 * a[p] + ctx.omega2 * eplus * b[p];
                break;
        }
        return cxd{0.0, -1.0} * h;
    }
};

struct LindbladEval {
    const LindbladContext& ctx;
    const cxd* rho;
    cxd eplus;  // exp(+i dF t)

    cxd at(int n1, int n2, int m1, int m2) const {
        if (n1 < 0 || n1 > ctx.nmax1 || n2 < 0 || n2 > ctx.nmax2 ||
            m1 < 0 || m1 > ctx.nmax1 || m2 < 0 || m2 > ctx.nmax2)
            return cxd{0.0, 0.0};
        const std::size_t d2 = ctx.nmax2 + 1;
        const std::size_t dim = ctx.dim();
        const std::size_t row = n1 * d2 + n2;
        const std::size_t col = m1 * d2 + m2;
        return rho[row * dim + col];
    }

    cxd element(std::size_t flat) const {
        const std::size_t dim = ctx.dim();
        const int d2 = ctx.nmax2 + 1;
        const std::size_t row = flat / dim;
        const std::size_t col = flat % dim;
        const int n1 = static_cast<int>(row) / d2;
        const int n2 = static_cast<int>(row) % d2;
        const int m1 = static_cast<int>(col) / d2;
        const int m2 = static_cast<int>(col) % d2;

        const cxd eminus = std::conj(eplus);
        const cxd r = rho[flat];

        // H rho
        cxd hr = (ctx.eta1 * n1 + ctx.eta2 * n2) * r;
        if (n1 >= 1 && n2 + 1 <= ctx.nmax2)
            hr += ctx.chi0 * eplus * std::sqrt(double(n1) * (n2 + 1)) * at(n1 - 1, n2 + 1, m1, m2);
        if (n2 >= 1 && n1 + 1 <= ctx.nmax1)
            hr += ctx.chi0 * eminus * std::sqrt(double(n1 + 1) * n2) * at(n1 + 1, n2 - 1, m1, m2);

        // rho H
        cxd rh = (ctx.eta1 * m1 + ctx.eta2 * m2) * r;
        if (m2 >= 1 && m1 + 1 <= ctx.nmax1)
            rh += ctx.chi0 * eplus * std::sqrt(double(m1 + 1) * m2) * at(n1, n2, m1 + 1, m2 - 1);
        if (m1 >= 1 && m2 + 1 <= ctx.nmax2)
            rh += ctx.chi0 * eminus * std::sqrt(double(m1) * (m2 + 1)) * at(n1, n2, m1 - 1, m2 + 1);

        cxd out = cxd{0.0, -1.0} * (hr - rh);

        if (ctx.kappa != 0.0) {
            cxd diss{0.0, 0.0};
            if (n1 + 1 <= ctx.nmax1 && m1 + 1 <= ctx.nmax1)
                diss += std::sqrt(double(n1 + 1) * (m1 + 1)) * at(n1 + 1, n2, m1 + 1, m2);
            if (n2 + 1 <= ctx.nmax2 && m2 + 1 <= ctx.nmax2)
                diss += std::sqrt(double(n2 + 1) * (m2 + 1)) * at(n1, n2 + 1, m1, m2 + 1);
            diss -= 0.5 * double(n1 + n2 + m1 + m2) * r;
            out += ctx.kappa * diss;
        }
        return out;
    }
};

bool use_openmp(Exec exec, std::size_t n) {
    switch (exec) {
        case Exec::Serial: return false;
        case Exec::OpenMP: return openmp_available();
        case Exec::Auto: return openmp_available() && n >= kParallelThreshold;
    }
    return false;
}

}  // namespace

void set_threads(int n) { g_threads.store(n); }
int threads() { return g_threads.load(); }

bool openmp_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

void fwm_rhs_serial(const FwmContext& ctx, double t, const cxd* in, cxd* out) {
    const FwmEval eval{ctx, in, std::polar(1.0, -ctx.delta_four_photon * t),
                       std::polar(1.0, ctx.delta_four_photon * t)};
    const std::size_t n = ctx.state_dim();
    for (std::size_t i = 0; i < n; ++i) out[i] = eval.element(i);
}

void fwm_rhs_openmp(const FwmContext& ctx, double t, const cxd* in, cxd* out) {
#ifdef _OPENMP
    const FwmEval eval{ctx, in, std::polar(1.0, -ctx.delta_four_photon * t),
                       std::polar(1.0, ctx.delta_four_photon * t)};
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(ctx.state_dim());
    const int nt = threads();
#pragma omp parallel for schedule(static) num_threads(nt > 0 ? nt : omp_get_max_threads())
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = eval.element(i);
#else
    fwm_rhs_serial(ctx, t, in, out);
#endif
}

void fwm_rhs(const FwmContext& ctx, double t, const cxd* in, cxd* out, Exec exec) {
    if (use_openmp(exec, ctx.state_dim()))
        fwm_rhs_openmp(ctx, t, in, out);
    else
        fwm_rhs_serial(ctx, t, in, out);
}

void lindblad_rhs_serial(const LindbladContext& ctx, double t, const cxd* rho, cxd* drho) {
    const LindbladEval eval{ctx, rho, std::polar(1.0, ctx.delta_four_photon * t)};
    const std::size_t n = ctx.state_dim();
    for (std::size_t i = 0; i < n; ++i) drho[i] = eval.element(i);
}

void lindblad_rhs_openmp(const LindbladContext& ctx, double t, const cxd* rho, cxd* drho) {
#ifdef _OPENMP
    const LindbladEval eval{ctx, rho, std::polar(1.0, ctx.delta_four_photon * t)};
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(ctx.state_dim());
    const int nt = threads();
#pragma omp parallel for schedule(static) num_threads(nt > 0 ? nt : omp_get_max_threads())
    for (std::ptrdiff_t i = 0; i < n; ++i) drho[i] = eval.element(i);
#else
    lindblad_rhs_serial(ctx, t, rho, drho);
#endif
}

void lindblad_rhs(const LindbladContext& ctx, double t, const cxd* rho, cxd* drho, Exec exec) {
    if (use_openmp(exec, ctx.state_dim()))
        lindblad_rhs_openmp(ctx, t, rho, drho);
    else
        lindblad_rhs_serial(ctx, t, rho, drho);
}

}  // namespace cbs::kernels
