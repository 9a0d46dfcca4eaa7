#include "mellin/dual_series.hpp"

#include "mellin/moment_kernels.hpp"

#include <cmath>

namespace mellin {

double residue_power_moment(int k, double u) {
    if (k < 0)
        throw std::domain_error("residue_power_moment: k must be >= 0");
    if (!(u > 0.0) || !std::isfinite(u))
        throw std::domain_error("residue_power_moment: u must be positive");
    const double lu = std::log(u);
    double term = 1.0;
    for (int j = 1; j <= k; ++j)
        term *= lu / j;
    return term;
}

MethodReport eval_dual(const EvolutionPoint& p, const DualSeriesConfig& cfg) {
    if (!(cfg.tol > 0.0) || cfg.max_terms < 1)
        throw std::domain_error("eval_dual: invalid series configuration");

    // the two log factors are taken once; powers of (-ln x) near x = 1
    // would otherwise cancel badly
    const double L = p.log_inv_x(); // -ln x
    const double lu = p.log_u();

    double a = 1.0; // L^k / k!
    double b = 1.0; // (ln u)^k / k!  == residue_power_moment(k, u)
    double sum = 1.0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        const double kp1 = static_cast<double>(k + 1);
        a *= L / kp1;
        b *= lu / kp1;
        const double term = a * b;
        if (std::abs(term) < cfg.tol * std::fmax(1.0, std::abs(sum)))
            return {"dual", p.x * sum, std::abs(p.x * term), k + 1};
        sum += term;
    }
    throw truncation_error("eval_dual: series did not converge", p.x * sum);
}

namespace {

double max_central_difference_residual(Complex kernel,
                                       const std::vector<double>& log_grid) {
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < log_grid.size(); ++i) {
        const Complex fm = std::exp(kernel * log_grid[i - 1]);
        const Complex f0 = std::exp(kernel * log_grid[i]);
        const Complex fp = std::exp(kernel * log_grid[i + 1]);
        const Complex d = (fp - fm) / (log_grid[i + 1] - log_grid[i - 1]);
        worst = std::fmax(worst, std::abs(d - kernel * f0) / std::abs(f0));
    }
    return worst;
}

void require_grid(const std::vector<double>& g, const char* who) {
    if (g.size() < 3)
        throw std::domain_error(std::string(who) + ": need at least 3 grid points");
    for (std::size_t i = 1; i < g.size(); ++i)
        if (!(g[i] > g[i - 1]))
            throw std::domain_error(std::string(who) +
                                    ": grid must be strictly increasing");
}

} // namespace

double dual_ode_residual(Complex M, const std::vector<double>& x_grid) {
    require_grid(x_grid, "dual_ode_residual");
    for (double x : x_grid)
        if (!(x > 0.0) || !(x < 1.0))
            throw std::domain_error("dual_ode_residual: grid must lie in (0, 1)");

    const Complex minus_chi = -chi(M); // phi = x^{-chi} = e^{-chi ln x}
    std::vector<double> lg(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i)
        lg[i] = std::log(x_grid[i]);
    return max_central_difference_residual(minus_chi, lg);
}

double moment_ode_residual(Complex N, const std::vector<double>& u_grid) {
    require_grid(u_grid, "moment_ode_residual");
    for (double u : u_grid)
        if (!(u >= 1.0))
            throw std::domain_error("moment_ode_residual: grid must have u >= 1");

    const Complex g = gamma(N); // phi = u^{gamma} = e^{gamma ln u}
    std::vector<double> lg(u_grid.size());
    for (std::size_t i = 0; i < u_grid.size(); ++i)
        lg[i] = std::log(u_grid[i]);
    return max_central_difference_residual(g, lg);
}

} // namespace mellin
