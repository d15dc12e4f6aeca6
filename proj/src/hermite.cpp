#include "hermspace/hermite.hpp"

#include <cmath>

#include "hermspace/errors.hpp"

namespace hws {

double hermite_eval(std::uint32_t k, double x) {
    if (!std::isfinite(x)) throw domain_error("hermite_eval: x must be finite");
    // Orthonormal three-term recurrence
    //   H_{k+1}(x) = (x H_k(x) - sqrt(k) H_{k-1}(x)) / sqrt(k+1).
    // The normalized form stays bounded by Cramer's envelope and is usable for
    // k far beyond where factorial-based formulas overflow.
    if (k == 0) return 1.0;
    double hm = 1.0;  // H_0
    double h = x;     // H_1
    for (std::uint32_t j = 1; j < k; ++j) {
        const double next = (x * h - std::sqrt(static_cast<double>(j)) * hm) /
                            std::sqrt(static_cast<double>(j + 1));
        hm = h;
        h = next;
    }
    return h;
}

std::vector<double> hermite_eval_all(std::uint32_t n, double x) {
    if (!std::isfinite(x)) throw domain_error("hermite_eval_all: x must be finite");
    std::vector<double> h(n + 1);
    h[0] = 1.0;
    if (n == 0) return h;
    h[1] = x;
    for (std::uint32_t j = 1; j < n; ++j) {
        h[j + 1] = (x * h[j] - std::sqrt(static_cast<double>(j)) * h[j - 1]) /
                   std::sqrt(static_cast<double>(j + 1));
    }
    return h;
}

double hermite_eval_multi(const MultiIndex& k, std::span<const double> x) {
    if (k.max_dimension() > x.size())
        throw domain_error("hermite_eval_multi: index support exceeds point dimension");
    double prod = 1.0;
    for (const auto& [dim, kj] : k.entries()) prod *= hermite_eval(kj, x[dim - 1]);
    return prod;
}

double normal_pdf(double x) {
    static const double inv_sqrt_2pi = 0.39894228040143267794;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double normal_cdf(double y) {
    // erfc keeps full relative accuracy in the left tail where the naive
    // 0.5*(1+erf) form cancels.
    static const double inv_sqrt2 = 0.70710678118654752440;
    return 0.5 * std::erfc(-y * inv_sqrt2);
}

double riemann_zeta(double x) {
    if (!(x > 1.0)) throw domain_error("riemann_zeta: argument must exceed 1");
    // Partial sum to N plus Euler-Maclaurin tail correction.  With N = 100 the
    // first omitted correction term is below 1e-14 for every x > 1.
    constexpr int N = 100;
    double sum = 0.0;
    for (int k = N - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -x);
    const double nd = static_cast<double>(N);
    const double n_pow = std::pow(nd, -x);
    sum += n_pow * nd / (x - 1.0);  // integral tail N^{1-x}/(x-1)
    sum += 0.5 * n_pow;
    sum += x * n_pow / (12.0 * nd);
    sum -= x * (x + 1.0) * (x + 2.0) * n_pow / (720.0 * nd * nd * nd);
    return sum;
}

} // namespace hws
