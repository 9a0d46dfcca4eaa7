#include "mellin/coupling.hpp"

#include <cmath>

namespace mellin {

CouplingValue alpha(const CouplingModel& model, double q2_ratio, double tol) {
    if (model.gauge_n < 2)
        throw std::domain_error("alpha: gauge group needs N >= 2");
    if (!(q2_ratio > 0.0) || !std::isfinite(q2_ratio))
        throw std::domain_error("alpha: q2_ratio must be positive");

    const Complex z{-std::pow(q2_ratio, -1.5), 0.0};
    const Complex w = lambert_w(model.branch, z, tol);
    const double residual = std::abs(w * std::exp(w) - z);
    const Complex a = -(2.0 * M_PI / model.gauge_n) / w;
    return {a, w, residual};
}

} // namespace mellin
