#include "hermspace/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "hermspace/errors.hpp"

namespace hws {

QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw domain_error("gauss_hermite: need at least one node");
    // Newton iteration on the physicists' orthonormal recurrence with the
    // classical asymptotic initial guesses; nodes come out in decreasing
    // order of |z| and are symmetric about 0.
    const double eps = 1.0e-14;
    const double pim4 = 0.7511255444649425;  // pi^{-1/4}
    const int max_iter = 100;

    std::vector<double> z_phys(n), w_phys(n);
    const int m = (n + 1) / 2;
    double z = 0.0, pp = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            z = std::sqrt(static_cast<double>(2 * n + 1)) -
                1.85575 * std::pow(static_cast<double>(2 * n + 1), -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * z_phys[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * z_phys[1];
        } else {
            z = 2.0 * z - z_phys[i - 2];
        }
        bool converged = false;
        for (int it = 0; it < max_iter; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= eps) {
                converged = true;
                break;
            }
        }
        if (!converged) throw convergence_error("gauss_hermite: node iteration did not converge");
        z_phys[i] = z;
        z_phys[n - 1 - i] = -z;
        w_phys[i] = 2.0 / (pp * pp);
        w_phys[n - 1 - i] = w_phys[i];
    }

    QuadratureRule rule;
    rule.degree = 2 * n - 1;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double sqrt2 = std::sqrt(2.0);
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::acos(-1.0));
    for (int i = 0; i < n; ++i) {
        // ascending node order
        rule.nodes[i] = sqrt2 * z_phys[n - 1 - i];
        rule.weights[i] = w_phys[n - 1 - i] * inv_sqrt_pi;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

namespace {

// Gauss-Kronrod 7-15 pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double value;
    double error;
};

PanelEstimate kronrod_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double result_g = 0.0, result_k = 0.0;
    for (int i = 0; i < 8; ++i) {
        if (i == 7) {
            const double fc = f(c);
            result_k += kWgk[7] * fc;
            result_g += kWg[3] * fc;
            break;
        }
        const double fa = f(c - h * kXgk[i]);
        const double fb = f(c + h * kXgk[i]);
        result_k += kWgk[i] * (fa + fb);
        if (i % 2 == 1) result_g += kWg[i / 2] * (fa + fb);
    }
    return {result_k * h, std::abs(result_k - result_g) * h};
}

void integrate_rec(const std::function<double(double)>& f, double a, double b, double tol,
                   int depth, int max_depth, long& panels, IntegrationResult& acc) {
    if (--panels < 0)
        throw convergence_error("integrate_adaptive: panel budget exhausted before reaching "
                                "the requested tolerance");
    const PanelEstimate est = kronrod_panel(f, a, b);
    if (est.error <= tol || depth >= max_depth) {
        if (est.error > tol && !(est.error <= 1e-13 * std::abs(est.value)))
            throw convergence_error("integrate_adaptive: requested tolerance not reached");
        acc.value += est.value;
        acc.error_estimate += est.error;
        return;
    }
    const double c = 0.5 * (a + b);
    integrate_rec(f, a, c, 0.5 * tol, depth + 1, max_depth, panels, acc);
    integrate_rec(f, c, b, 0.5 * tol, depth + 1, max_depth, panels, acc);
}

} // namespace

IntegrationResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                     double abs_tol, int max_depth) {
    IntegrationResult acc;
    if (a == b) return acc;
    long panels = 200000;
    integrate_rec(f, a, b, abs_tol, 0, max_depth, panels, acc);
    return acc;
}

} // namespace hws
