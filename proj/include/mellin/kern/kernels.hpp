#pragma once

#include <cstddef>

// Batch kernels for the quadrature inner loops. Every function here exists
// in a scalar reference build and (on x86-64 with AVX2+FMA) a vectorized
// build; the two are selected at runtime and must agree to near machine
// precision. The kernels are pure array -> value maps with no internal
// state, so tests can drive any table directly.
namespace mellin::kern {

struct CxSum {
    double re;
    double im;
};

// Parameters of the vertical-contour integrand at N = anchor + i*t:
//
//   e^{i t L} * (e^{w} [- 1]) / (N + 1),   w = log_u / (N + 1),
//
// with L = log(1/x). The caller owns the constant prefactor x^{-anchor}
// and the quadrature weight; the kernel returns the bare node sum.
struct DirectParams {
    double anchor;
    double log_inv_x;
    double log_u;
    bool subtract_one;
};

using DirectSumFn = CxSum (*)(const double* t, std::size_t n,
                              const DirectParams& p);

// sum_j exp(a * s[j])
using ExpSumFn = double (*)(const double* s, std::size_t n, double a);

// out[j] = exp(x[j]); valid for |x| <= 708
using ExpBatchFn = void (*)(const double* x, double* out, std::size_t n);

// s[j] = sin(x[j]), c[j] = cos(x[j]); valid for |x| <= 1e6
using SinCosBatchFn = void (*)(const double* x, double* s, double* c,
                               std::size_t n);

struct KernelTable {
    const char* name;
    DirectSumFn direct_sum;
    ExpSumFn exp_sum;
    ExpBatchFn exp_batch;
    SinCosBatchFn sincos_batch;
};

// Always available; the semantics reference for every other table.
const KernelTable& scalar_kernels();

// AVX2+FMA build, or nullptr when the CPU (or the build) lacks support.
const KernelTable* avx2_kernels();

// Table used by the library. Picks the widest supported build once per
// process; the environment variable MELLIN_KERNEL=scalar|avx2 overrides.
const KernelTable& active_kernels();

} // namespace mellin::kern
