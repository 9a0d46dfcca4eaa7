#include "mellin/contour.hpp"

#include <cmath>

namespace mellin {

Contour build_vertical_contour(double c, double T, int n) {
    if (!(c > -1.0))
        throw std::domain_error(
            "build_vertical_contour: anchor must lie right of the pole at -1");
    if (!(T > 0.0))
        throw std::domain_error("build_vertical_contour: extent must be positive");
    if (n < 2)
        throw std::domain_error("build_vertical_contour: need at least 2 nodes");

    Contour out;
    out.kind = ContourKind::VerticalLine;
    out.anchor = c;
    out.half_extent = T;
    out.node_count = n;
    out.nodes.reserve(n);
    out.weights.reserve(n);

    const double dt = 2.0 * T / (n - 1);
    const double w = dt / (2.0 * M_PI);
    for (int j = 0; j < n; ++j) {
        out.nodes.emplace_back(c, -T + j * dt);
        out.weights.emplace_back(w, 0.0);
    }
    return out;
}

Contour build_chebyshev_cut(int n) {
    if (n < 1)
        throw std::domain_error("build_chebyshev_cut: need at least 1 node");

    Contour out;
    out.kind = ContourKind::ChebyshevCut;
    out.anchor = 0.0;
    out.half_extent = 1.0;
    out.node_count = n;
    out.nodes.reserve(n);
    out.weights.reserve(n);

    const double w = 1.0 / n;
    for (int j = 1; j <= n; ++j) {
        out.nodes.emplace_back(std::cos((2 * j - 1) * M_PI / (2.0 * n)), 0.0);
        out.weights.emplace_back(w, 0.0);
    }
    return out;
}

} // namespace mellin
