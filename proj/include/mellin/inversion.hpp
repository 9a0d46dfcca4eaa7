#pragma once

#include "mellin/contour.hpp"
#include "mellin/types.hpp"

#include <string>

namespace mellin {

// One method's answer for phi(x, u) plus its self-estimated accuracy.
// deviation_from_oracle is filled by whoever holds the reference value
// (see scan.hpp); the inversion routines leave it at zero.
struct MethodReport {
    std::string method;
    double value;
    double error_estimate;
    long nodes_or_terms;
    double deviation_from_oracle = 0.0;
};

// Default vertical-contour parameters. The truncation tail of the
// subtracted integrand scales like x^{-c} ln(u) / (2 pi T^2 ln(1/x)); with
// T = 6000 the worst point of the x in [0.01, 0.9], u in [1, 100] box sits
// near 2e-7 relative, and dt ~ 0.18 keeps the trapezoid aliasing error far
// below that. Overridable everywhere.
struct DirectContourDefaults {
    static constexpr double anchor = 0.5;
    static constexpr double extent = 6000.0;
    static constexpr int nodes = 65536;
};

inline constexpr int kMappedDefaultNodes = 64;

// Direct inverse-Mellin evaluation of
//   phi(x, u) = (1/(2 pi i)) Int x^{-N} e^{ln u/(N+1)} / (N+1) dN
// on the given vertical contour. With subtract_leading the residue x of the
// u-independent part is added analytically and the quadrature runs on
// e^{ln u/(N+1)} - 1, whose integrand decays like 1/t^2 instead of 1/t.
// The error estimate compares against the half-window contour (T/2, n/2),
// which keeps the node spacing and exposes the truncation tail.
//
// Requires x in (0,1), u >= 1 and a VerticalLine contour whose spacing
// resolves the integrand's oscillation (phase step <= 1.5 rad per node);
// too-coarse contours are rejected rather than silently aliased.
MethodReport invert_direct(const EvolutionPoint& p, const Contour& contour,
                           bool subtract_leading = true);

// Mapped-contour evaluation: the loop around the cut [-1, 1] collapsed to
//   phi(x, u) = x * (1/pi) Int_{-1}^{1} e^{2 s sqrt(t)} / sqrt(1 - s^2) ds,
// computed by n-point Chebyshev-Gauss quadrature (spectrally accurate for
// this entire integrand). Requires x in (0,1) and u >= 1; u < 1 makes t
// negative and belongs to phi_series_signed instead.
MethodReport invert_mapped(const EvolutionPoint& p, int n);

} // namespace mellin
