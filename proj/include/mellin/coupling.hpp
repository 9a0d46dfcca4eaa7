#pragma once

#include "mellin/special_functions.hpp"
#include "mellin/types.hpp"

namespace mellin {

// All-orders running coupling of the SU(N) gauge model,
//   alpha(Q^2/mu^2) = -(2 pi / N) / W_b(-(mu^2/Q^2)^{3/2}),
// with the Lambert branch left to the caller. Branch -1 is the one that is
// real and positive (asymptotically free) for q2_ratio > e^{2/3}; the other
// branches analytically continue to complex values.
struct CouplingModel {
    int gauge_n = 3;
    LambertBranch branch = LambertBranch::MinusOne;
};

struct CouplingValue {
    Complex alpha;
    Complex lambert_w;       // the W value used
    double lambert_residual; // |W e^W - z| for the argument z
};

CouplingValue alpha(const CouplingModel& model, double q2_ratio,
                    double tol = 1e-14);

} // namespace mellin
