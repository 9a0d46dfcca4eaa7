#include "mellin/moment_kernels.hpp"

#include "mellin/quadrature.hpp"

#include <cmath>

namespace mellin {

namespace {
constexpr double kPoleGuard = 1e-12;
constexpr double kSampleGuard = 1e-6;
} // namespace

Complex gamma(Complex N) {
    const double dist = std::abs(N + 1.0);
    if (dist <= kPoleGuard)
        throw pole_error("gamma: N too close to the pole at -1", dist);
    return 1.0 / (N + 1.0);
}

Complex chi(Complex M) {
    const double dist = std::abs(M);
    if (dist <= kPoleGuard)
        throw pole_error("chi: M too close to the pole at 0", dist);
    return 1.0 / M - 1.0;
}

Complex MomentKernel::operator()(Complex z) const {
    return kind == MomentKernelKind::ToyGamma ? gamma(z) : chi(z);
}

MomentKernel toy_gamma_kernel() {
    return {MomentKernelKind::ToyGamma, {Complex(-1.0, 0.0)}};
}

MomentKernel toy_chi_kernel() {
    return {MomentKernelKind::ToyChi, {Complex(0.0, 0.0)}};
}

std::vector<DualityResidual>
duality_residuals(const std::vector<Complex>& samples) {
    std::vector<DualityResidual> out;
    out.reserve(samples.size());
    for (const Complex& s : samples) {
        DualityResidual r{s, 0.0, 0.0, false};
        // both identities are evaluated on the same sample, so it must stay
        // clear of the gamma pole (-1), the chi pole (0) and the point where
        // the first map lands on the other pole (gamma(s) = 0 never happens,
        // chi(s) = -1 iff s is far from both guards anyway)
        if (std::abs(s + 1.0) <= kSampleGuard || std::abs(s) <= kSampleGuard) {
            r.pole_flagged = true;
            out.push_back(r);
            continue;
        }
        r.chi_of_gamma = std::abs(chi(gamma(s)) - s);
        r.gamma_of_chi = std::abs(gamma(chi(s)) - s);
        out.push_back(r);
    }
    return out;
}

double SplittingFunction::operator()(double z) const {
    return z; // ToyLinear
}

Complex mellin_of_splitting(const SplittingFunction& P, Complex N,
                            double tol) {
    if (!(N.real() > 0.0))
        throw std::domain_error(
            "mellin_of_splitting: Re(N) > 0 required for integrability");
    if (!(tol > 0.0))
        throw std::domain_error("mellin_of_splitting: tolerance must be positive");

    // x^{N-1} P(x); for ToyLinear the integrand is x^N, which vanishes at
    // x = 0 for Re(N) > 0, so the endpoint needs no special treatment beyond
    // adaptive bisection
    auto integrand = [&](double x) -> Complex {
        if (x <= 0.0)
            return {0.0, 0.0};
        return std::exp((N - 1.0) * std::log(x)) * P(x);
    };
    const auto r = integrate_adaptive(integrand, 0.0, 1.0, tol, tol);
    return r.value;
}

} // namespace mellin
