#pragma once

#include "mellin/types.hpp"

#include <functional>

namespace mellin {

// Moment-space evolution u d/du f(N, u) = a(u) gamma(N) f(N, u). With no
// coupling function the toy convention applies: the coupling is absorbed
// into gamma and the exponent is exactly ln(u_end/u_start). Otherwise the
// caller supplies a(s) as a function of s = ln u and the exponent is its
// adaptive integral.
struct EvolutionSpec {
    Complex N;
    double u_start;
    double u_end;
    std::function<double(double)> coupling; // empty => fixed/absorbed

    static EvolutionSpec fixed_absorbed(Complex N, double u_start,
                                        double u_end) {
        return {N, u_start, u_end, {}};
    }
    static EvolutionSpec with_coupling(Complex N, double u_start, double u_end,
                                       std::function<double(double)> a) {
        return {N, u_start, u_end, std::move(a)};
    }
};

// f(u_end) = f_start * exp(gamma(N) * E); exact multiplicative structure,
// no ODE stepping. E is the evolution exponent described on EvolutionSpec.
Complex evolve_moment(const EvolutionSpec& spec, Complex f_start, double tol);

// Normalized defect of the x-space evolution equation at one point:
//   LHS = d/d ln u phi(x, u)            (central difference, step h)
//   RHS = int_x^1 dy/y phi(y, u) P(x/y) (adaptive quadrature, P(z) = z)
// with phi the closed-form reference. Returns |LHS - RHS| / (|RHS| + tiny).
double dglap_residual_xspace(double x, double u, double h, double qtol);

} // namespace mellin
