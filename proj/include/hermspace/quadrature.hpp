#ifndef HERMSPACE_QUADRATURE_HPP
#define HERMSPACE_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace hws {

// Quadrature rule for the standard normal measure: sum_i w_i f(x_i)
// approximates int f(x) phi(x) dx and is exact for polynomials up to `degree`.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int degree = 0;

    double integrate(const std::function<double(double)>& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

// n-point Gauss-Hermite rule for the weight phi(x) = exp(-x^2/2)/sqrt(2 pi),
// exact up to degree 2n-1.  Computed from the physicists' rule by scaling the
// nodes by sqrt(2) and dividing the weights by sqrt(pi).
QuadratureRule gauss_hermite(int n);

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to the given
// absolute tolerance.  Deterministic subdivision order.
IntegrationResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                     double abs_tol, int max_depth = 48);

} // namespace hws

#endif
