#pragma once

#include "mellin/types.hpp"

#include <vector>

namespace mellin {

enum class ContourKind { VerticalLine, ChebyshevCut };

// A quadrature path in the complex moment plane. VerticalLine is the
// inverse-Mellin line Re N = anchor with uniform nodes on [-T, T] in the
// imaginary direction; ChebyshevCut holds Chebyshev-Gauss nodes on the real
// interval (-1, 1) for the collapsed loop around the cut. All normalization
// constants (1/(2 pi i) for the line, 1/pi for the cut) are folded into the
// weights. Contours are immutable once built.
struct Contour {
    ContourKind kind;
    double anchor;      // Re-axis intercept c (VerticalLine only)
    double half_extent; // truncation T (VerticalLine only)
    int node_count;
    std::vector<Complex> nodes;
    std::vector<Complex> weights;
};

// Uniform nodes N_j = c + i t_j, t_j on [-T, T] inclusive, each with weight
// dt/(2 pi). Requires c > -1 (right of the gamma pole) and n >= 2.
Contour build_vertical_contour(double c, double T, int n);

// Chebyshev-Gauss nodes s_j = cos((2j-1) pi / (2n)) with the flat weight
// pi/n; the 1/pi of the collapsed cut integral is folded in, leaving 1/n.
Contour build_chebyshev_cut(int n);

} // namespace mellin
