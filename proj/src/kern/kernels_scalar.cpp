#include "mellin/kern/kernels.hpp"

#include <cmath>

namespace mellin::kern {
namespace {

CxSum direct_sum_scalar(const double* t, std::size_t n,
                        const DirectParams& p) {
    const double a = p.anchor + 1.0;
    const double L = p.log_inv_x;
    const double lu = p.log_u;
    const double sub = p.subtract_one ? 1.0 : 0.0;

    double sum_re = 0.0, sum_im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double tj = t[j];
        const double inv_d = 1.0 / (a * a + tj * tj);
        const double br = a * inv_d;        // Re 1/(N+1)
        const double bi = -tj * inv_d;      // Im 1/(N+1)
        const double er = std::exp(lu * br);
        const double wi = lu * bi;
        const double gr = er * std::cos(wi) - sub;
        const double gi = er * std::sin(wi);
        const double ph = tj * L;
        const double pr = std::cos(ph);
        const double pi = std::sin(ph);
        const double m_re = pr * gr - pi * gi;
        const double m_im = pr * gi + pi * gr;
        sum_re += m_re * br - m_im * bi;
        sum_im += m_re * bi + m_im * br;
    }
    return {sum_re, sum_im};
}

double exp_sum_scalar(const double* s, std::size_t n, double a) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        sum += std::exp(a * s[j]);
    return sum;
}

void exp_batch_scalar(const double* x, double* out, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j)
        out[j] = std::exp(x[j]);
}

void sincos_batch_scalar(const double* x, double* s, double* c,
                         std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        s[j] = std::sin(x[j]);
        c[j] = std::cos(x[j]);
    }
}

} // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", direct_sum_scalar, exp_sum_scalar,
                                   exp_batch_scalar, sincos_batch_scalar};
    return table;
}

} // namespace mellin::kern
