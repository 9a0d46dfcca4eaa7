// AVX2+FMA build of the quadrature kernels. Compiled only on x86-64 and
// entered only after a runtime CPUID check (see dispatch.cpp).
//
// exp and sin/cos are evaluated in-register with Cody-Waite argument
// reduction and the Cephes double-precision minimax polynomials, giving
// ~1-2 ulp over the documented domains (|x| <= 708 for exp, |x| <= 1e6 for
// sin/cos). The equivalence tests compare every kernel against the scalar
// build and a long-double reference.

#if defined(__x86_64__) || defined(_M_X64)

#include "mellin/kern/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace mellin::kern {
namespace {

inline __m256d set1(double v) { return _mm256_set1_pd(v); }

// ---- exp ----------------------------------------------------------------

// e^x = 2^k * e^r, r = x - k ln2 in [-ln2/2, ln2/2], e^r by the Cephes
// rational approximation e^r = 1 + 2 r P(r^2) / (Q(r^2) - r P(r^2)).
inline __m256d exp_pd(__m256d x) {
    const __m256d log2e = set1(1.4426950408889634073599);
    const __m256d c1 = set1(6.93145751953125e-1);
    const __m256d c2 = set1(1.42860682030941723212e-6);

    const __m256d p0 = set1(1.26177193074810590878e-4);
    const __m256d p1 = set1(3.02994407707441961300e-2);
    const __m256d p2 = set1(9.99999999999999999910e-1);
    const __m256d q0 = set1(3.00198505138664455042e-6);
    const __m256d q1 = set1(2.52448340349684104192e-3);
    const __m256d q2 = set1(2.27265548208155028766e-1);
    const __m256d q3 = set1(2.00000000000000000005e0);

    x = _mm256_max_pd(_mm256_min_pd(x, set1(708.0)), set1(-708.0));

    const __m256d k = _mm256_round_pd(
        _mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, c1, x);
    r = _mm256_fnmadd_pd(k, c2, r);

    const __m256d rr = _mm256_mul_pd(r, r);
    __m256d p = _mm256_fmadd_pd(p0, rr, p1);
    p = _mm256_fmadd_pd(p, rr, p2);
    p = _mm256_mul_pd(p, r);
    __m256d q = _mm256_fmadd_pd(q0, rr, q1);
    q = _mm256_fmadd_pd(q, rr, q2);
    q = _mm256_fmadd_pd(q, rr, q3);
    const __m256d er = _mm256_add_pd(
        set1(1.0),
        _mm256_div_pd(_mm256_add_pd(p, p), _mm256_sub_pd(q, p)));

    // scale by 2^k through the exponent bits
    const __m128i k32 = _mm256_cvtpd_epi32(k);
    const __m256i k64 = _mm256_cvtepi32_epi64(k32);
    const __m256i pow2 =
        _mm256_slli_epi64(_mm256_add_epi64(k64, _mm256_set1_epi64x(1023)), 52);
    return _mm256_mul_pd(er, _mm256_castsi256_pd(pow2));
}

// ---- sin/cos ------------------------------------------------------------

// Quadrant reduction: q = round(x / (pi/2)), r = x - q pi/2 via a 3-term
// Cody-Waite split, then the [-pi/4, pi/4] polynomials with the usual
// swap/sign fixup per quadrant.
inline void sincos_pd(__m256d x, __m256d* out_sin, __m256d* out_cos) {
    const __m256d two_over_pi = set1(0.63661977236758134308);
    const __m256d dp1 = set1(1.5707962512969970703125);
    const __m256d dp2 = set1(7.54978941586159635336e-8);
    const __m256d dp3 = set1(5.39030285815811905290e-15);

    const __m256d q = _mm256_round_pd(
        _mm256_mul_pd(x, two_over_pi),
        _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(q, dp1, x);
    r = _mm256_fnmadd_pd(q, dp2, r);
    r = _mm256_fnmadd_pd(q, dp3, r);

    const __m256d zz = _mm256_mul_pd(r, r);

    __m256d sp = set1(1.58962301576546568060e-10);
    sp = _mm256_fmadd_pd(sp, zz, set1(-2.50507477628578072866e-8));
    sp = _mm256_fmadd_pd(sp, zz, set1(2.75573136213857245213e-6));
    sp = _mm256_fmadd_pd(sp, zz, set1(-1.98412698295895385996e-4));
    sp = _mm256_fmadd_pd(sp, zz, set1(8.33333333332211858878e-3));
    sp = _mm256_fmadd_pd(sp, zz, set1(-1.66666666666666307295e-1));
    const __m256d s = _mm256_fmadd_pd(_mm256_mul_pd(sp, zz), r, r);

    __m256d cp = set1(-1.13585365213876817300e-11);
    cp = _mm256_fmadd_pd(cp, zz, set1(2.08757008419747316778e-9));
    cp = _mm256_fmadd_pd(cp, zz, set1(-2.75573141792967388112e-7));
    cp = _mm256_fmadd_pd(cp, zz, set1(2.48015872888517179954e-5));
    cp = _mm256_fmadd_pd(cp, zz, set1(-1.38888888888730564116e-3));
    cp = _mm256_fmadd_pd(cp, zz, set1(4.16666666666665929218e-2));
    __m256d c = _mm256_mul_pd(_mm256_mul_pd(zz, zz), cp);
    c = _mm256_fnmadd_pd(zz, set1(0.5), _mm256_add_pd(c, set1(1.0)));

    // quadrant bits: bit0 swaps sin/cos, bit1 of q flips sin,
    // bit1 of q+1 flips cos
    const __m128i q32 = _mm256_cvtpd_epi32(q);
    const __m128i one32 = _mm_set1_epi32(1);
    const __m128i two32 = _mm_set1_epi32(2);
    const __m128i swap32 =
        _mm_cmpeq_epi32(_mm_and_si128(q32, one32), one32);
    const __m128i sflip32 =
        _mm_cmpeq_epi32(_mm_and_si128(q32, two32), two32);
    const __m128i cflip32 = _mm_cmpeq_epi32(
        _mm_and_si128(_mm_add_epi32(q32, one32), two32), two32);

    const __m256d swap = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(swap32));
    const __m256d sflip = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(sflip32));
    const __m256d cflip = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(cflip32));
    const __m256d signbit = set1(-0.0);

    __m256d s_out = _mm256_blendv_pd(s, c, swap);
    __m256d c_out = _mm256_blendv_pd(c, s, swap);
    s_out = _mm256_xor_pd(s_out, _mm256_and_pd(sflip, signbit));
    c_out = _mm256_xor_pd(c_out, _mm256_and_pd(cflip, signbit));
    *out_sin = s_out;
    *out_cos = c_out;
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d sum2 = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(sum2, _mm_unpackhi_pd(sum2, sum2)));
}

// ---- kernels ------------------------------------------------------------

CxSum direct_sum_avx2(const double* t, std::size_t n, const DirectParams& p) {
    const double a = p.anchor + 1.0;
    const double L = p.log_inv_x;
    const double lu = p.log_u;
    const double sub = p.subtract_one ? 1.0 : 0.0;

    const __m256d va = set1(a);
    const __m256d vaa = set1(a * a);
    const __m256d vL = set1(L);
    const __m256d vlu = set1(lu);
    const __m256d vsub = set1(sub);
    const __m256d vone = set1(1.0);

    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();

    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d tj = _mm256_loadu_pd(t + j);
        const __m256d inv_d =
            _mm256_div_pd(vone, _mm256_fmadd_pd(tj, tj, vaa));
        const __m256d br = _mm256_mul_pd(va, inv_d);
        const __m256d bi =
            _mm256_xor_pd(_mm256_mul_pd(tj, inv_d), set1(-0.0));

        const __m256d er = exp_pd(_mm256_mul_pd(vlu, br));
        __m256d swi, cwi;
        sincos_pd(_mm256_mul_pd(vlu, bi), &swi, &cwi);
        const __m256d gr = _mm256_fmsub_pd(er, cwi, vsub);
        const __m256d gi = _mm256_mul_pd(er, swi);

        __m256d pi, pr;
        sincos_pd(_mm256_mul_pd(tj, vL), &pi, &pr);

        const __m256d m_re =
            _mm256_fmsub_pd(pr, gr, _mm256_mul_pd(pi, gi));
        const __m256d m_im =
            _mm256_fmadd_pd(pr, gi, _mm256_mul_pd(pi, gr));
        acc_re = _mm256_add_pd(
            acc_re, _mm256_fmsub_pd(m_re, br, _mm256_mul_pd(m_im, bi)));
        acc_im = _mm256_add_pd(
            acc_im, _mm256_fmadd_pd(m_re, bi, _mm256_mul_pd(m_im, br)));
    }

    double sum_re = hsum(acc_re);
    double sum_im = hsum(acc_im);
    for (; j < n; ++j) {
        const double tj = t[j];
        const double inv_d = 1.0 / (a * a + tj * tj);
        const double br = a * inv_d;
        const double bi = -tj * inv_d;
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

double exp_sum_avx2(const double* s, std::size_t n, double a) {
    const __m256d va = set1(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4)
        acc = _mm256_add_pd(
            acc, exp_pd(_mm256_mul_pd(va, _mm256_loadu_pd(s + j))));
    double sum = hsum(acc);
    for (; j < n; ++j)
        sum += std::exp(a * s[j]);
    return sum;
}

void exp_batch_avx2(const double* x, double* out, std::size_t n) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4)
        _mm256_storeu_pd(out + j, exp_pd(_mm256_loadu_pd(x + j)));
    for (; j < n; ++j)
        out[j] = std::exp(x[j]);
}

void sincos_batch_avx2(const double* x, double* s, double* c, std::size_t n) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d vs, vc;
        sincos_pd(_mm256_loadu_pd(x + j), &vs, &vc);
        _mm256_storeu_pd(s + j, vs);
        _mm256_storeu_pd(c + j, vc);
    }
    for (; j < n; ++j) {
        s[j] = std::sin(x[j]);
        c[j] = std::cos(x[j]);
    }
}

} // namespace

const KernelTable* avx2_table_impl() {
    static const KernelTable table{"avx2", direct_sum_avx2, exp_sum_avx2,
                                   exp_batch_avx2, sincos_batch_avx2};
    return &table;
}

} // namespace mellin::kern

#endif // x86-64
