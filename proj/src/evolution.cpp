#include "mellin/evolution.hpp"

#include "mellin/moment_kernels.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/special_functions.hpp"

#include <cmath>

namespace mellin {

Complex evolve_moment(const EvolutionSpec& spec, Complex f_start, double tol) {
    if (!(spec.u_start >= 1.0) || !(spec.u_end >= spec.u_start))
        throw std::domain_error("evolve_moment: need 1 <= u_start <= u_end");
    if (!(tol > 0.0))
        throw std::domain_error("evolve_moment: tolerance must be positive");

    const Complex g = gamma(spec.N);
    double exponent;
    if (!spec.coupling) {
        exponent = std::log(spec.u_end / spec.u_start);
    } else {
        const auto r = integrate_adaptive_real(
            spec.coupling, std::log(spec.u_start), std::log(spec.u_end), tol,
            tol);
        exponent = r.value.real();
    }
    return f_start * std::exp(g * exponent);
}

double dglap_residual_xspace(double x, double u, double h, double qtol) {
    if (!(x > 0.0) || !(x < 1.0))
        throw std::domain_error("dglap_residual_xspace: x must be in (0, 1)");
    if (!(u > 1.0))
        throw std::domain_error("dglap_residual_xspace: u must be > 1");
    if (!(h > 0.0) || !(u * std::exp(-h) > 1.0))
        throw std::domain_error(
            "dglap_residual_xspace: step h must keep u e^{-h} above 1");
    if (!(qtol > 0.0))
        throw std::domain_error("dglap_residual_xspace: qtol must be positive");

    const double lhs =
        (phi_closed_form(x, u * std::exp(h)) -
         phi_closed_form(x, u * std::exp(-h))) /
        (2.0 * h);

    const SplittingFunction P{SplittingKind::ToyLinear};
    const auto rhs = integrate_adaptive_real(
        [&](double y) { return phi_closed_form(y, u) * P(x / y) / y; }, x, 1.0,
        qtol, qtol);

    const double r = rhs.value.real();
    return std::abs(lhs - r) / (std::abs(r) + 1e-300);
}

} // namespace mellin
