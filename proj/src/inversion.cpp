#include "mellin/inversion.hpp"

#include "mellin/kern/kernels.hpp"

#include <cmath>
#include <vector>

namespace mellin {

namespace {

// Largest tolerated phase advance of the integrand between neighbouring
// nodes. The two oscillation sources are x^{-N} (frequency ln(1/x)) and the
// essential singularity factor e^{ln u/(N+1)}, whose frequency peaks at
// ln(u)/(c+1)^2 where the contour passes the pole.
constexpr double kMaxPhaseStep = 1.5;

double direct_quadrature(const EvolutionPoint& p, double anchor, double T,
                         int n, bool subtract_leading) {
    const double L = p.log_inv_x();
    const double lu = p.log_u();

    std::vector<double> t(static_cast<std::size_t>(n));
    const double dt = 2.0 * T / (n - 1);
    for (int j = 0; j < n; ++j)
        t[static_cast<std::size_t>(j)] = -T + j * dt;

    kern::DirectParams params{anchor, L, lu, subtract_leading};
    const kern::CxSum s =
        kern::active_kernels().direct_sum(t.data(), t.size(), params);

    const double weight = dt / (2.0 * M_PI);
    const double prefactor = std::exp(anchor * L); // x^{-anchor}
    double value = weight * prefactor * s.re;
    if (subtract_leading)
        value += p.x; // residue of x^{-N}/(N+1) at N = -1
    return value;
}

double mapped_quadrature(const EvolutionPoint& p, int n) {
    const Contour cut = build_chebyshev_cut(n);
    std::vector<double> s(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        s[static_cast<std::size_t>(j)] = cut.nodes[static_cast<std::size_t>(j)].real();

    const double a = 2.0 * std::sqrt(p.t);
    const double sum = kern::active_kernels().exp_sum(s.data(), s.size(), a);
    return p.x * sum / n;
}

} // namespace

MethodReport invert_direct(const EvolutionPoint& p, const Contour& contour,
                           bool subtract_leading) {
    if (contour.kind != ContourKind::VerticalLine)
        throw std::invalid_argument(
            "invert_direct: contour must be a VerticalLine");
    if (!(p.x < 1.0))
        throw std::domain_error(
            "invert_direct: x = 1 degenerates the contour phase; use the "
            "closed form");
    if (!(p.u >= 1.0))
        throw std::domain_error("invert_direct: u >= 1 required");

    const double c = contour.anchor;
    const double T = contour.half_extent;
    const int n = contour.node_count;
    const double dt = 2.0 * T / (n - 1);

    const double peak_freq =
        p.log_inv_x() + p.log_u() / ((c + 1.0) * (c + 1.0));
    if (dt * peak_freq > kMaxPhaseStep)
        throw std::domain_error(
            "invert_direct: contour spacing too coarse for this (x, u, "
            "anchor); raise the node count");

    const double value = direct_quadrature(p, c, T, n, subtract_leading);
    const int n_half = n / 2;
    const double value_half =
        direct_quadrature(p, c, T / 2.0, n_half, subtract_leading);

    return {"direct", value, std::abs(value - value_half),
            static_cast<long>(n) + n_half};
}

MethodReport invert_mapped(const EvolutionPoint& p, int n) {
    if (n < 4)
        throw std::domain_error("invert_mapped: need at least 4 nodes");
    if (!(p.x < 1.0))
        throw std::domain_error(
            "invert_mapped: x = 1 makes w degenerate; use the closed form");
    if (!(p.u >= 1.0))
        throw std::domain_error(
            "invert_mapped: u < 1 gives negative t; use phi_series_signed");

    const double value = mapped_quadrature(p, n);
    const double value_half = mapped_quadrature(p, n / 2);
    return {"mapped", value, std::abs(value - value_half),
            static_cast<long>(n) + n / 2};
}

} // namespace mellin
