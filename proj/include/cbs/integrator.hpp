#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace cbs {

using cxd = std::complex<double>;

/// dy/dt = f(t, y) over a flat complex vector.
using OdeRhs = std::function<void(double t, const std::vector<cxd>& y, std::vector<cxd>& dydt)>;

struct OdeOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    double initial_step = 0.0;       // 0: choose automatically
    std::size_t max_steps = 200'000'000;
};

struct OdeStats {
    std::size_t steps = 0;
    std::size_t rejected = 0;
    double last_step = 0.0;
};

/// Embedded Dormand-Prince 5(4) with standard step control. Integrates y in
/// place from t0 to t1. Throws StepFailure when the controller stalls.
class AdaptiveRk45 {
  public:
    AdaptiveRk45(OdeRhs rhs, OdeOptions options = {});

    void integrate(std::vector<cxd>& y, double t0, double t1);

    const OdeStats& stats() const { return stats_; }

  private:
    double error_norm(const std::vector<cxd>& y0, const std::vector<cxd>& y1,
                      const std::vector<cxd>& err) const;
    double initial_step(const std::vector<cxd>& y, double t0, double t1);

    OdeRhs rhs_;
    OdeOptions opt_;
    OdeStats stats_;
    std::vector<std::vector<cxd>> k_;  // stage derivatives, reused across steps
    std::vector<cxd> scratch_;
    std::vector<cxd> y5_;
    std::vector<cxd> err_;
};

}  // namespace cbs
