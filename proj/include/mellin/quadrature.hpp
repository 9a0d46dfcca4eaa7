#pragma once

#include "mellin/types.hpp"

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace mellin {

struct QuadratureResult {
    Complex value;
    double error_estimate;
    std::size_t evaluations;
};

namespace detail {

// Gauss 7 / Kronrod 15 node-weight table on [-1, 1].
// Column 0: abscissa, column 1: Gauss weight (0 for Kronrod-only nodes),
// column 2: Kronrod weight.
inline constexpr double gk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class F>
std::pair<Complex, double> gk15_panel(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    Complex y0 = f(mid);
    Complex g7 = gk15[0][1] * y0;
    Complex k15 = gk15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * gk15[i][0];
        const Complex yi = f(mid + dx) + f(mid - dx);
        g7 += gk15[i][1] * yi;
        k15 += gk15[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;

    // standard QUADPACK-style sharpened estimate
    double err = std::abs(g7 - k15);
    err = 200.0 * err * std::sqrt(200.0 * err);
    if (!(err < std::abs(g7 - k15)))
        err = std::abs(g7 - k15);
    return {k15, err};
}

} // namespace detail

// Adaptive Gauss-Kronrod integration of a complex- (or real-) valued
// integrand over the finite interval [a, b]. Panels are bisected until the
// local estimate meets abs_tol + rel_tol * |panel value|. Throws
// integration_error when the panel budget is exhausted.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    double rel_tol,
                                    std::size_t max_panels = 4000) {
    struct Segment {
        double a, b;
    };
    std::vector<Segment> stack;
    stack.push_back({a, b});

    Complex total = 0.0;
    double err_total = 0.0;
    std::size_t evals = 0;
    std::size_t panels = 0;

    while (!stack.empty()) {
        const Segment seg = stack.back();
        stack.pop_back();
        if (++panels > max_panels)
            throw integration_error(
                "integrate_adaptive: panel budget exhausted",
                err_total + std::abs(total));

        auto [val, err] = detail::gk15_panel(f, seg.a, seg.b);
        evals += 15;

        const double width = seg.b - seg.a;
        const double goal =
            (abs_tol + rel_tol * std::abs(val)) * width / (b - a);
        if (err <= goal || width < 1e-14 * std::abs(b - a)) {
            total += val;
            err_total += err;
            continue;
        }
        const double mid = 0.5 * (seg.a + seg.b);
        stack.push_back({seg.a, mid});
        stack.push_back({mid, seg.b});
    }
    return {total, err_total, evals};
}

// Real-valued convenience wrapper.
template <class F>
QuadratureResult integrate_adaptive_real(F&& f, double a, double b,
                                         double abs_tol, double rel_tol,
                                         std::size_t max_panels = 4000) {
    return integrate_adaptive(
        [&](double x) { return Complex(f(x), 0.0); }, a, b, abs_tol, rel_tol,
        max_panels);
}

} // namespace mellin
