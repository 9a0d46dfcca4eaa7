#pragma once

#include "mellin/inversion.hpp"
#include "mellin/types.hpp"

#include <vector>

namespace mellin {

struct DualSeriesConfig {
    double tol = 1e-14;
    int max_terms = 500;
};

// Residue of u^M / M^{k+1} at M = 0 under the 1/(2 pi i) convention, i.e.
// the coefficient of M^k in e^{M ln u}: (ln u)^k / k!.
double residue_power_moment(int k, double u);

// The dual-contour route: phi(x, u) = Int dM x^{-chi(M)} u^M / M collapsed
// to residues at M = 0, giving x * sum_k (-ln x)^k/k! * (ln u)^k/k!. Each
// term goes through residue_power_moment so the test surface covers the
// dual derivation, not just the series identity.
MethodReport eval_dual(const EvolutionPoint& p, const DualSeriesConfig& cfg = {});

// Max normalized residual of the dual evolution equation
//   x d/dx phi(x, M) = -chi(M) phi(x, M),  phi = x^{-chi(M)},
// with the derivative formed by central differences in ln x over the grid.
double dual_ode_residual(Complex M, const std::vector<double>& x_grid);

// Same construction for the moment equation u d/du phi(N, u) = gamma(N) phi
// with phi = u^{gamma(N)}, central differences in ln u.
double moment_ode_residual(Complex N, const std::vector<double>& u_grid);

} // namespace mellin
