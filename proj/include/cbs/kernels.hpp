#pragma once

#include <complex>
#include <cstddef>

namespace cbs::kernels {

using cxd = std::complex<double>;

enum class Exec { Auto, Serial, OpenMP };

/// Worker count for the OpenMP paths and the sweep harness (0 = runtime default).
void set_threads(int n);
int threads();
bool openmp_available();

/// Smallest problem size (output elements) the Auto policy parallelizes.
inline constexpr std::size_t kParallelThreshold = 4096;

/// Coefficients of the five-level coupling Hamiltonian acting on the photonic
/// branches [g, a, b, c], each a dense (nmax1+1)(nmax2+1) block. The |m>
/// branch never couples and is not part of the integrated vector.
struct FwmContext {
    int nmax1 = 0;
    int nmax2 = 0;
    double g1 = 0.0, g2 = 0.0;
    double omega1 = 0.0, omega2 = 0.0;
    double delta1 = 0.0, delta2 = 0.0;
    double delta_two_photon = 0.0;
    double delta_four_photon = 0.0;

    std::size_t block_dim() const {
        return static_cast<std::size_t>(nmax1 + 1) * (nmax2 + 1);
    }
    std::size_t state_dim() const { return 4 * block_dim(); }
};

/// out = -i H(t) in  (Schroedinger right-hand side, branches [g,a,b,c]).
void fwm_rhs(const FwmContext& ctx, double t, const cxd* in, cxd* out, Exec exec = Exec::Auto);
void fwm_rhs_serial(const FwmContext& ctx, double t, const cxd* in, cxd* out);
void fwm_rhs_openmp(const FwmContext& ctx, double t, const cxd* in, cxd* out);

/// Coefficients of the photonic master equation
///   drho/dt = -i[H_eff(t), rho] + kappa sum_i (a_i rho a_i^dag - {n_i, rho}/2).
struct LindbladContext {
    int nmax1 = 0;
    int nmax2 = 0;
    double eta1 = 0.0, eta2 = 0.0;
    double chi0 = 0.0;
    double delta_four_photon = 0.0;
    double kappa = 0.0;

    std::size_t dim() const { return static_cast<std::size_t>(nmax1 + 1) * (nmax2 + 1); }
    std::size_t state_dim() const { return dim() * dim(); }
};

/// drho = RHS(rho) over the row-major dim x dim density matrix.
void lindblad_rhs(const LindbladContext& ctx, double t, const cxd* rho, cxd* drho,
                  Exec exec = Exec::Auto);
void lindblad_rhs_serial(const LindbladContext& ctx, double t, const cxd* rho, cxd* drho);
void lindblad_rhs_openmp(const LindbladContext& ctx, double t, const cxd* rho, cxd* drho);

}  // namespace cbs::kernels
