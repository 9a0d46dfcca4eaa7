#pragma once

#include "mellin/types.hpp"

#include <vector>

namespace mellin {

// The toy moment-space pair: anomalous dimension gamma(N) = 1/(N+1) with its
// dual chi(M) = 1/M - 1, inverse to each other (chi(gamma(N)) = N).

enum class MomentKernelKind { ToyGamma, ToyChi };

struct MomentKernel {
    MomentKernelKind kind;
    std::vector<Complex> pole_locations;

    Complex operator()(Complex z) const;
};

MomentKernel toy_gamma_kernel();
MomentKernel toy_chi_kernel();

// gamma(N) = 1/(N+1); rejects N within 1e-12 of the pole at -1.
Complex gamma(Complex N);

// chi(M) = 1/M - 1; rejects M within 1e-12 of the pole at 0.
Complex chi(Complex M);

struct DualityResidual {
    Complex sample;
    double chi_of_gamma; // |chi(gamma(s)) - s|
    double gamma_of_chi; // |gamma(chi(s)) - s|, s read as an M value
    bool pole_flagged;   // sample violated the pole guard
};

// Round-trip residuals of the duality identities for each sample. Samples
// inside a pole guard disk are flagged rather than silently skipped.
std::vector<DualityResidual>
duality_residuals(const std::vector<Complex>& samples);

// x-space splitting kernels paired with the moment kernels above.
enum class SplittingKind { ToyLinear };

struct SplittingFunction {
    SplittingKind kind;

    double operator()(double z) const; // P(z) = z for ToyLinear
};

// Mellin moment of the splitting function, int_0^1 x^{N-1} P(x) dx, by
// adaptive quadrature. Requires Re(N) > 0. For the toy pair this equals
// gamma(N), which the tests verify numerically.
Complex mellin_of_splitting(const SplittingFunction& P, Complex N, double tol);

} // namespace mellin
