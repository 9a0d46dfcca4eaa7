#include "mellin/special_functions.hpp"

#include <cmath>
#include <limits>

namespace mellin {

namespace {

constexpr int kMaxSeriesTerms = 500;
constexpr double kInvE = 0.36787944117144232160; // e^{-1}
constexpr double kOmega = 0.56714329040978387300; // W0(1)
const Complex kW0AtMinusOne{-0.31813150520476413, 1.3372357014306895};

// Truncated sum with ratio-driven terms. next_ratio(k) maps term_k to
// term_{k+1}; stops once |next term| < tol * max(1, |sum|).
template <class Ratio>
SeriesResult sum_series(double tol, Ratio&& next_ratio) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        const double next = term * next_ratio(k);
        if (std::abs(next) < tol * std::fmax(1.0, std::abs(sum)))
            return {sum, k + 1, std::abs(next)};
        term = next;
        sum += term;
    }
    throw truncation_error("series did not converge within 500 terms", sum);
}

} // namespace

LambertBranch lambert_branch_from_index(int index) {
    if (index < -1 || index > 1)
        throw std::domain_error("lambert branch index must be -1, 0 or +1");
    return static_cast<LambertBranch>(index);
}

SeriesResult bessel_i0(double z, double tol) {
    if (!std::isfinite(z))
        throw std::domain_error("bessel_i0: non-finite argument");
    if (z < 0.0)
        throw std::domain_error("bessel_i0: argument must be >= 0");
    if (!(tol > 0.0))
        throw std::domain_error("bessel_i0: tolerance must be positive");
    const double q = 0.25 * z * z; // (z/2)^2
    return sum_series(tol, [q](int k) {
        const double kp1 = static_cast<double>(k + 1);
        return q / (kp1 * kp1);
    });
}

SeriesResult phi_series_signed(double t, double tol) {
    if (!std::isfinite(t))
        throw std::domain_error("phi_series_signed: non-finite argument");
    if (!(tol > 0.0))
        throw std::domain_error("phi_series_signed: tolerance must be positive");
    return sum_series(tol, [t](int k) {
        const double kp1 = static_cast<double>(k + 1);
        return t / (kp1 * kp1);
    });
}

double phi_closed_form(double x, double u, double tol) {
    if (!(x > 0.0) || !(x <= 1.0) || !std::isfinite(x))
        throw std::domain_error("phi_closed_form: x must be in (0, 1]");
    if (!(u > 0.0) || !std::isfinite(u))
        throw std::domain_error("phi_closed_form: u must be positive");
    if (x == 1.0)
        return 1.0;
    const double t = std::log(u) * std::log(1.0 / x);
    return x * phi_series_signed(t, tol).value;
}

namespace {

// W = -1 + p - p^2/3 + 11 p^3/72 - 43 p^4/540 + 769 p^5/17280 around the
// branch point, p = sqrt(2 (e z + 1)).
Complex branch_point_series(Complex p) {
    return -1.0 +
           p * (1.0 +
                p * (-1.0 / 3.0 +
                     p * (11.0 / 72.0 +
                          p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
}

Complex halley_complex(Complex w, Complex z, double tol, double* residual) {
    const double target = tol * (1.0 + std::abs(z));
    double res = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 60; ++it) {
        const Complex ew = std::exp(w);
        const Complex f = w * ew - z;
        res = std::abs(f);
        if (res <= target) {
            *residual = res;
            return w;
        }
        const Complex d1 = ew * (w + 1.0);
        Complex dw;
        if (std::abs(w + 1.0) < 1e-4) {
            dw = f / d1; // Newton: the Halley correction is singular here
        } else {
            const Complex denom = d1 - f * (w + 2.0) / (2.0 * (w + 1.0));
            dw = (denom != Complex(0.0)) ? f / denom : f / d1;
        }
        w -= dw;
    }
    *residual = res;
    return w;
}

Complex guess_w0(Complex z) {
    if (std::abs(z + kInvE) < 0.2)
        return branch_point_series(std::sqrt(2.0 * (M_E * z + 1.0)));
    if (std::abs(z + 1.0) < 0.05)
        return std::signbit(z.imag()) ? std::conj(kW0AtMinusOne)
                                      : kW0AtMinusOne;
    // away from the cut a shifted log tracks W0 well; hugging the cut the
    // asymptotic form is the one that stays on the principal sheet
    if ((z.real() > -kInvE || std::abs(z.imag()) > 0.5) && std::abs(z) <= 4.0)
        return std::log(1.0 + z);
    const Complex l1 = std::log(z);
    const Complex l2 = std::log(l1);
    return l1 - l2 + l2 / l1;
}

// Asymptotic guess on the k = -1 sheet. from_below selects the side of the
// cut for real negative z (branch +1 is evaluated through this path by
// conjugation, which mirrors the cut approach).
Complex guess_wm1(Complex z, bool from_below) {
    if (!from_below && std::abs(z + kInvE) < 0.2)
        return branch_point_series(-std::sqrt(2.0 * (M_E * z + 1.0)));
    double theta = std::atan2(z.imag(), z.real());
    if (z.imag() == 0.0 && z.real() < 0.0)
        theta = from_below ? -M_PI : M_PI;
    const Complex l1{std::log(std::abs(z)), theta - 2.0 * M_PI};
    const Complex l2 = std::log(l1);
    return l1 - l2 + l2 / l1;
}

// Real-valued W_{-1} on (-1/e, 0), kept in real arithmetic so the result
// carries an exactly zero imaginary part.
double wm1_real(double x, double tol, double* residual) {
    double w;
    if (x < -0.27) {
        const double arg = std::fmax(2.0 * (M_E * x + 1.0), 0.0);
        const double p = -std::sqrt(arg);
        w = std::real(branch_point_series(Complex(p, 0.0)));
    } else {
        const double l1 = std::log(-x);
        const double l2 = std::log(-l1);
        w = l1 - l2 + l2 / l1;
    }
    const double target = tol * (1.0 + std::abs(x));
    double res = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 60; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        res = std::abs(f);
        if (res <= target) {
            *residual = res;
            return w;
        }
        const double d1 = ew * (w + 1.0);
        double dw;
        if (std::abs(w + 1.0) < 1e-4) {
            dw = f / d1;
        } else {
            const double denom = d1 - f * (w + 2.0) / (2.0 * (w + 1.0));
            dw = (denom != 0.0) ? f / denom : f / d1;
        }
        w -= dw;
    }
    *residual = res;
    return w;
}

Complex lambert_wm1(Complex z, double tol, bool from_below_for_real,
                    double* residual) {
    if (z.imag() == 0.0 && !from_below_for_real && z.real() >= -kInvE &&
        z.real() < 0.0)
        return {wm1_real(z.real(), tol, residual), 0.0};
    const bool below =
        (z.imag() < 0.0) || (z.imag() == 0.0 && from_below_for_real);
    return halley_complex(guess_wm1(z, below), z, tol, residual);
}

} // namespace

Complex lambert_w(LambertBranch branch, Complex z, double tol) {
    if (!(tol > 0.0))
        throw std::domain_error("lambert_w: tolerance must be positive");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("lambert_w: non-finite argument");

    if (z == Complex(0.0)) {
        if (branch == LambertBranch::Principal)
            return {0.0, 0.0};
        throw std::domain_error(
            "lambert_w: z = 0 is a logarithmic singularity on branches +-1");
    }

    // within a few ulp of the branch point -1/e the double root -1 is the
    // best representable answer on branches 0 and -1
    if (branch != LambertBranch::PlusOne &&
        std::abs(z + kInvE) <= 32.0 * std::numeric_limits<double>::epsilon() *
                                   kInvE)
        return {-1.0, 0.0};

    double residual = 0.0;
    Complex w;
    switch (branch) {
    case LambertBranch::Principal:
        w = halley_complex(guess_w0(z), z, tol, &residual);
        break;
    case LambertBranch::MinusOne:
        w = lambert_wm1(z, tol, false, &residual);
        break;
    case LambertBranch::PlusOne:
        // W_{+1}(z) = conj(W_{-1}(conj z)); for real z the mirrored cut
        // approach means taking the lower-side value of W_{-1}
        w = std::conj(lambert_wm1(std::conj(z), tol, true, &residual));
        break;
    }
    if (residual > tol * (1.0 + std::abs(z)))
        throw iteration_error("lambert_w: Halley iteration did not converge",
                              residual);
    return w;
}

} // namespace mellin
