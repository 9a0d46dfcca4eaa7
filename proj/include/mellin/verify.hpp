#pragma once

#include <array>
#include <string>
#include <vector>

namespace mellin {

// The reference grid used by the verification suite and the acceptance
// tests: every x pairs with every u.
inline constexpr std::array<double, 9> kGridX = {0.01, 0.05, 0.1, 0.2, 0.3,
                                                 0.5,  0.7,  0.8, 0.9};
inline constexpr std::array<double, 7> kGridU = {1.0,  2.0,  4.0, 10.0,
                                                 25.0, 50.0, 100.0};

// Options for the invariant battery run by the `verify` CLI subcommand.
struct VerifyOptions {
    double fd_step = 1e-3;
    double quad_tol = 1e-10;
    unsigned seed = 20250810;
    int duality_samples = 100;
    int ode_samples = 20;
};

struct CheckResult {
    std::string name;
    double max_residual;
    double threshold;
    bool pass;
};

// Runs the residual checks: duality round trips, the x-space evolution
// equation against the closed form, and both power-law ODE residuals.
// Deterministic for a fixed seed.
std::vector<CheckResult> run_residual_suite(const VerifyOptions& opt);

} // namespace mellin
