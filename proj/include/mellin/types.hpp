#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace mellin {

using Complex = std::complex<double>;

// Evaluation too close to a kernel pole. Carries the measured distance so
// callers can report how badly the guard was violated.
class pole_error : public std::domain_error {
public:
    pole_error(const std::string& what, double distance)
        : std::domain_error(what), distance_(distance) {}
    double distance() const noexcept { return distance_; }

private:
    double distance_;
};

// Iterative solver ran out of iterations. Carries the last residual.
class iteration_error : public std::runtime_error {
public:
    iteration_error(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Adaptive quadrature could not reach the requested tolerance. Carries the
// achieved error estimate.
class integration_error : public std::runtime_error {
public:
    integration_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

// Truncated series did not converge within the term budget. Carries the
// partial sum accumulated so far.
class truncation_error : public std::runtime_error {
public:
    truncation_error(const std::string& what, double partial_sum)
        : std::runtime_error(what), partial_sum_(partial_sum) {}
    double partial_sum() const noexcept { return partial_sum_; }

private:
    double partial_sum_;
};

// A kinematic point (x, u): momentum fraction x in (0,1] and dimensionless
// scale u = mu^2/Lambda^2 > 0. The derived quantities
//   t = ln(u) * ln(1/x)        (the argument of the closed form)
//   w = sqrt(ln(u) / ln(1/x))  (defined only for x < 1, u > 1)
// are computed once at construction.
struct EvolutionPoint {
    double x;
    double u;
    double t;
    std::optional<double> w;

    EvolutionPoint(double x_, double u_) : x(x_), u(u_) {
        if (!(x > 0.0) || !(x <= 1.0) || !std::isfinite(x))
            throw std::domain_error("EvolutionPoint: x must be in (0, 1]");
        if (!(u > 0.0) || !std::isfinite(u))
            throw std::domain_error("EvolutionPoint: u must be positive");
        const double log_inv_x = std::log(1.0 / x);
        const double log_u = std::log(u);
        t = log_u * log_inv_x;
        if (x < 1.0 && u > 1.0)
            w = std::sqrt(log_u / log_inv_x);
    }

    double log_inv_x() const { return std::log(1.0 / x); }
    double log_u() const { return std::log(u); }
};

} // namespace mellin
