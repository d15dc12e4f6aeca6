#ifndef HERMSPACE_KERNELS_HPP
#define HERMSPACE_KERNELS_HPP

#include <cstdint>
#include <functional>
#include <span>

#include "hermspace/spectra.hpp"

namespace hws {

struct KernelEvalOptions {
    double tail_tolerance = 1e-10;    // certified truncation error budget
    std::uint64_t max_degree = 1000000;  // per-dimension series cap
    int quadrature_points = 201;      // budget hint per integral layer
};

struct KernelValue {
    double value = 0.0;
    double tail_bound = 0.0;  // certified bound on the truncation error
};

// Reproducing kernel K(x, y) = sum_k R(k) H_k(x) H_k(y) as a product of
// one-dimensional factors.  Each factor is summed until the certified tail
// (remaining weight mass times the Hermite envelope
// min(1, pi k^{-1/6}) / sqrt(phi(x) phi(y))) drops below the tolerance.
// Slowly decaying families route the tail through an exact integral
// transform against the geometric generating function instead of raw
// term-by-term summation, which cannot reach practical tolerances when the
// weights decay like 1/k.
KernelValue kernel_series(const SpaceSpec& space, std::span<const double> x,
                          std::span<const double> y, const KernelEvalOptions& opts = {});

// Closed form of the exponential-family kernel:
// prod_j (1 - gamma_j + gamma_j (1-omega^2)^{-1/2} exp(omega x_j y_j/(1+omega)
//         - omega^2 (x_j-y_j)^2 / (2(1-omega^2)))).
double kernel_mehler(double omega, const WeightSequence& weights, std::uint32_t s,
                     std::span<const double> x, std::span<const double> y);

// One-dimensional closed Mehler sum sum_k t^k H_k(x) H_k(y) for |t| < 1.
double mehler_sum_1d(double t, double x, double y);

// theta(x, y) = Phi(y) for y <= x and -Phi(-y) for y > x.
double theta(double x, double y);

// The unique absolutely continuous g with g' = h a.e. and zero phi-mean,
// g(x) = int h(y) theta(x, y) dy.
double antiderivative_op(const std::function<double(double)>& h, double x,
                         const KernelEvalOptions& opts = {});

// GaussianAnova kernel in one dimension through its integral representation
// built from theta factors; supported for alpha in {1, 2} and used as an
// independent cross-check of the series route.
double kernel_anova_integral(int alpha, double gamma, double x, double y,
                             const KernelEvalOptions& opts = {});

struct AnchoredKernel {
    double value = 0.0;
    double decomposable = 0.0;  // the part L(x,y); exactly 0 when x y < 0
};

// One-dimensional anchored-space kernel
//   1 + gamma sum_{l<alpha} (xy)^l/(l!)^2
//     + gamma 1_{xy>=0} int_0^inf phi(s)^{-1} (|x|-s)_+^{a-1} (|y|-s)_+^{a-1} ds / ((a-1)!)^2.
AnchoredKernel kernel_anchored(int alpha, double gamma, double x, double y,
                               const KernelEvalOptions& opts = {});

} // namespace hws

#endif
