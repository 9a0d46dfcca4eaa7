#include "mellin/verify.hpp"

#include "mellin/dual_series.hpp"
#include "mellin/evolution.hpp"
#include "mellin/moment_kernels.hpp"

#include <cmath>
#include <random>

namespace mellin {

namespace {

// Sampling boxes for the random checks. The ODE kernels enter the
// central-difference error as |kernel|^3 h^2 / 6, so the domains keep
// |gamma| and |chi| small enough that the h = 1e-3 residual stays below
// 1e-6 with margin: |N+1| >= 0.7 bounds |gamma| by 1.43, and the disk
// |M-1| <= 0.45 bounds |chi| by 0.45/0.55.
constexpr double kDualityBox = 5.0;
constexpr double kDualityPoleGuard = 1e-6;
constexpr double kMomentPoleRadius = 0.7;
constexpr double kDualDiskRadius = 0.45;

std::vector<double> log_centered_grid(double center, double h, int half_width) {
    std::vector<double> g;
    for (int k = -half_width; k <= half_width; ++k)
        g.push_back(std::exp(center + k * h));
    return g;
}

} // namespace

std::vector<CheckResult> run_residual_suite(const VerifyOptions& opt) {
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<CheckResult> out;

    // duality round trips chi(gamma(N)) = N and gamma(chi(M)) = M
    {
        std::vector<Complex> samples;
        while (samples.size() < static_cast<std::size_t>(opt.duality_samples)) {
            const Complex s{kDualityBox * (2.0 * unit(rng) - 1.0),
                            kDualityBox * (2.0 * unit(rng) - 1.0)};
            if (std::abs(s + 1.0) <= kDualityPoleGuard ||
                std::abs(s) <= kDualityPoleGuard)
                continue;
            samples.push_back(s);
        }
        double worst = 0.0;
        for (const auto& r : duality_residuals(samples)) {
            const double scale = 1.0 + std::abs(r.sample);
            worst = std::fmax(worst, r.chi_of_gamma / scale);
            worst = std::fmax(worst, r.gamma_of_chi / scale);
        }
        out.push_back({"duality round trip", worst, 1e-12, worst <= 1e-12});
    }

    // x-space evolution equation against the closed form
    {
        double worst = 0.0;
        for (double x : kGridX)
            for (double u : kGridU) {
                if (u <= 1.0)
                    continue;
                worst = std::fmax(worst, dglap_residual_xspace(
                                             x, u, opt.fd_step, opt.quad_tol));
            }
        out.push_back({"x-space DGLAP residual", worst, 1e-5, worst <= 1e-5});
    }

    // dual ODE x dphi/dx = -chi(M) phi on random M
    {
        double worst = 0.0;
        const auto x_grid = log_centered_grid(-1.0, opt.fd_step, 2);
        for (int i = 0; i < opt.ode_samples; ++i) {
            const double r = kDualDiskRadius * std::sqrt(unit(rng));
            const double th = 2.0 * M_PI * unit(rng);
            const Complex M = 1.0 + r * Complex(std::cos(th), std::sin(th));
            worst = std::fmax(worst, dual_ode_residual(M, x_grid));
        }
        out.push_back({"dual ODE residual", worst, 1e-6, worst <= 1e-6});
    }

    // moment ODE u dphi/du = gamma(N) phi on random N
    {
        double worst = 0.0;
        const auto u_grid = log_centered_grid(1.0, opt.fd_step, 2);
        int accepted = 0;
        while (accepted < opt.ode_samples) {
            const Complex N{-0.4 + 3.4 * unit(rng), 4.0 * unit(rng) - 2.0};
            if (std::abs(N + 1.0) < kMomentPoleRadius)
                continue;
            ++accepted;
            worst = std::fmax(worst, moment_ode_residual(N, u_grid));
        }
        out.push_back({"moment ODE residual", worst, 1e-6, worst <= 1e-6});
    }

    return out;
}

} // namespace mellin
