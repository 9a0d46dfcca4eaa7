#pragma once

#include "mellin/types.hpp"

namespace mellin {

// Result of a truncated power series: the sum, the number of terms that
// entered it, and the magnitude of the first omitted term.
struct SeriesResult {
    double value;
    int terms_used;
    double truncation_estimate;
};

enum class LambertBranch : int { MinusOne = -1, Principal = 0, PlusOne = 1 };

LambertBranch lambert_branch_from_index(int index);

// Modified Bessel function I0(z) = sum_k (z/2)^{2k} / (k!)^2 for z >= 0,
// truncated when the next term drops below tol * max(1, |partial sum|).
SeriesResult bessel_i0(double z, double tol);

// sum_k t^k / (k!)^2. Equals I0(2 sqrt(t)) for t >= 0 and continues it to
// t < 0, where the series is alternating and the first omitted term bounds
// the truncation error.
SeriesResult phi_series_signed(double t, double tol);

// Closed form phi(x, u) = x * I0(2 sqrt(ln u * ln(1/x))), the reference
// value every contour route is checked against. Defined for x in (0, 1]
// and u > 0 (u < 1 continues through the signed series).
double phi_closed_form(double x, double u, double tol = 1e-15);

// Lambert W on branch -1, 0 or +1: returns w with w e^w = z to residual
// |w e^w - z| <= tol * (1 + |z|). Halley iteration from an asymptotic or
// branch-point initial guess. z = 0 is valid only on the principal branch.
Complex lambert_w(LambertBranch branch, Complex z, double tol);

} // namespace mellin
