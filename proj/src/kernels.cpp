#include "hermspace/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"
#include "hermspace/quadrature.hpp"

namespace hws {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Cramer-type envelope: |H_k(x) H_k(y)| <= envelope(x,y) * min(1, pi k^{-1/6}).
double hermite_envelope(double x, double y) {
    return 1.0 / std::sqrt(normal_pdf(x) * normal_pdf(y));
}

double improved_factor(double k) { return std::min(1.0, kPi * std::pow(k, -1.0 / 6.0)); }

// Mehler sum with 1 - t passed explicitly; keeps full accuracy as t -> 1.
double mehler_sum_omt(double omt, double x, double y) {
    const double t = 1.0 - omt;
    const double one_minus_t2 = omt * (2.0 - omt);
    const double d = x - y;
    const double arg = t * x * y / (2.0 - omt) - t * t * d * d / (2.0 * one_minus_t2);
    return std::exp(arg) / std::sqrt(one_minus_t2);
}

struct DimValue {
    double value;
    double tail;
};

// Transform integrands scale like exp(|xy|/2) / sqrt(1-t^2); requesting an
// absolute quadrature tolerance below round-off at that magnitude makes the
// subdivision churn forever, so the target is floored at what doubles can
// deliver.  The achieved accuracy still enters the reported certificate.
double quad_tol_floor(double alpha, double x, double y) {
    const double peak = std::exp2(alpha + 1.0) * std::exp(0.5 * std::abs(x * y));
    return 64.0 * std::numeric_limits<double>::epsilon() * peak;
}

// Direct certified summation of sum_k R(k) H_k(x) H_k(y) in one dimension.
// `tail_weight_bound(K)` must bound sum_{k>K} R(k) min(1, pi k^{-1/6}).
DimValue summed_dim(const FourierWeights& fw, double gamma, double x, double y, double tol,
                    std::uint64_t max_degree,
                    const std::function<double(std::uint64_t)>& tail_weight_bound) {
    const double env = hermite_envelope(x, y);
    double hx_prev = 1.0, hy_prev = 1.0;
    double hx = x, hy = y;
    double sum = 1.0;  // k = 0 term
    for (std::uint64_t k = 1;; ++k) {
        if (k > max_degree)
            throw convergence_error("kernel_series: tail tolerance unreachable within max_degree");
        sum += fw.weight_1d_gamma(gamma, static_cast<std::uint32_t>(k)) * hx * hy;
        const double bound = env * tail_weight_bound(k);
        if (bound < tol) return {sum, bound};
        const double sk = std::sqrt(static_cast<double>(k));
        const double sk1 = std::sqrt(static_cast<double>(k + 1));
        const double nx = (x * hx - sk * hx_prev) / sk1;
        const double ny = (y * hy - sk * hy_prev) / sk1;
        hx_prev = hx;
        hx = nx;
        hy_prev = hy;
        hy = ny;
    }
}

// sum_{k>=k0} t^{k-k0} H_k(x) H_k(y) with t = 1 - omt in [0,1).  Direct
// summation with a geometric certificate for t <= 1/2, Mehler closed form
// minus the head otherwise.
double shifted_series_omt(double omt, double x, double y, std::uint32_t k0, double abs_tol) {
    const double t = 1.0 - omt;
    if (t <= 0.0) {
        const auto hx = hermite_eval_all(k0, x);
        const auto hy = hermite_eval_all(k0, y);
        return hx[k0] * hy[k0];
    }
    if (t <= 0.5) {
        const double env = hermite_envelope(x, y);
        const auto hx0 = hermite_eval_all(k0 == 0 ? 1 : k0, x);
        const auto hy0 = hermite_eval_all(k0 == 0 ? 1 : k0, y);
        double hx_prev = k0 > 0 ? hx0[k0 - 1] : 0.0;
        double hy_prev = k0 > 0 ? hy0[k0 - 1] : 0.0;
        double hx = hx0[k0], hy = hy0[k0];
        double sum = 0.0;
        double tp = 1.0;
        for (std::uint32_t k = k0;; ++k) {
            sum += tp * hx * hy;
            const double tail = env * tp * t / (1.0 - t);
            if (tail < abs_tol) return sum;
            if (k > k0 + 4000)
                throw convergence_error("shifted_series_omt: geometric tail stalled");
            tp *= t;
            const double sk = std::sqrt(static_cast<double>(k));
            const double sk1 = std::sqrt(static_cast<double>(k + 1));
            const double nx = (x * hx - sk * hx_prev) / sk1;
            const double ny = (y * hy - sk * hy_prev) / sk1;
            hx_prev = hx;
            hx = nx;
            hy_prev = hy;
            hy = ny;
        }
    }
    double head = 0.0;
    if (k0 > 0) {
        const auto hx = hermite_eval_all(k0 - 1, x);
        const auto hy = hermite_eval_all(k0 - 1, y);
        double tp = 1.0;
        for (std::uint32_t k = 0; k < k0; ++k) {
            head += tp * hx[k] * hy[k];
            tp *= t;
        }
    }
    return (mehler_sum_omt(omt, x, y) - head) * std::pow(t, -static_cast<double>(k0));
}

// One GaussianAnova kernel factor via the exact Beta-integral form of the
// weight tail:
//   K = 1 + gamma sum_{1<=k<alpha} H_k H_k / k!
//     + (gamma/(alpha-1)!) int_0^1 (1-t)^{alpha-1} [sum_{k>=alpha} t^{k-alpha} H_k H_k] dt,
// with t = 1 - u^2 so the square-root blowup of the Mehler sum at t = 1
// cancels against the Jacobian.
DimValue anova_dim(int alpha, double gamma, double x, double y, double tol) {
    double value = 1.0;
    double factorial = 1.0;
    if (alpha > 1) {
        const auto hx = hermite_eval_all(static_cast<std::uint32_t>(alpha - 1), x);
        const auto hy = hermite_eval_all(static_cast<std::uint32_t>(alpha - 1), y);
        for (int k = 1; k < alpha; ++k) {
            factorial *= k;
            value += gamma * hx[k] * hy[k] / factorial;
        }
    }
    const double scale = gamma / factorial;  // gamma / (alpha-1)!
    const double quad_tol =
        std::max(0.25 * tol / std::max(scale, 1e-300), quad_tol_floor(alpha, x, y));
    const auto integrand = [&](double u) {
        const double omt = u * u;
        const double s = shifted_series_omt(omt, x, y, static_cast<std::uint32_t>(alpha),
                                            0.25 * quad_tol);
        return 2.0 * std::pow(u, 2.0 * alpha - 1.0) * s;
    };
    const IntegrationResult r = integrate_adaptive(integrand, 0.0, 1.0, quad_tol);
    value += scale * r.value;
    return {value, scale * (r.error_estimate + 0.5 * quad_tol)};
}

// One KorobovType kernel factor: gamma k^{-alpha} = (gamma/Gamma(alpha))
// int_0^inf v^{alpha-1} e^{-kv} dv turns the series into an integral of the
// Mehler sum; v = w^2 removes the square-root singularity at v = 0.
DimValue korobov_dim(double alpha, double gamma, double x, double y, double tol) {
    const double scale = gamma / std::tgamma(alpha);
    const double quad_tol =
        std::max(0.25 * tol / std::max(scale, 1e-300), quad_tol_floor(alpha, x, y));
    const auto integrand = [&](double w) {
        const double v = w * w;
        const double omt = -std::expm1(-v);
        const double t = 1.0 - omt;
        const double s = shifted_series_omt(omt, x, y, 1, 0.25 * quad_tol);
        return 2.0 * std::pow(w, 2.0 * alpha - 1.0) * t * s;
    };
    // cutoff where v^{alpha-1} e^{-v} is negligible for any practical alpha
    const double upper = 7.0 + std::sqrt(alpha);
    const IntegrationResult r = integrate_adaptive(integrand, 0.0, upper, quad_tol);
    return {1.0 + scale * r.value, scale * (r.error_estimate + 0.5 * quad_tol)};
}

// SobolevVariant factor at alpha = 1: psi(k) = gamma/(gamma + k) and
// 1/(gamma+k) = int_0^1 t^{gamma+k-1} dt, so the series collapses to
// gamma int_0^1 t^gamma [sum_{k>=1} t^{k-1} H_k H_k] dt.
DimValue sobolev1_dim(double gamma, double x, double y, double tol) {
    const double quad_tol =
        std::max(0.25 * tol / std::max(gamma, 1e-300), quad_tol_floor(1.0, x, y));
    const auto integrand = [&](double u) {
        const double omt = u * u;
        const double t = 1.0 - omt;
        const double s = shifted_series_omt(omt, x, y, 1, 0.25 * quad_tol);
        return 2.0 * u * std::pow(t, gamma) * s;
    };
    const IntegrationResult r = integrate_adaptive(integrand, 0.0, 1.0, quad_tol);
    return {1.0 + gamma * r.value, gamma * (r.error_estimate + 0.5 * quad_tol)};
}

DimValue kernel_dim(const FourierWeights& fw, std::uint64_t j, double x, double y,
                    double tol, const KernelEvalOptions& opts) {
    const double gamma = fw.weights().at(j);
    switch (fw.family()) {
        case FourierFamily::Exponential: {
            const double omega = fw.omega();
            const auto tail = [&](std::uint64_t k) {
                return gamma * improved_factor(static_cast<double>(k + 1)) *
                       std::pow(omega, static_cast<double>(k + 1)) / (1.0 - omega);
            };
            return summed_dim(fw, gamma, x, y, tol, opts.max_degree, tail);
        }
        case FourierFamily::SobolevVariant: {
            if (fw.alpha_int() == 1) return sobolev1_dim(gamma, x, y, tol);
            // psi(k) <= gamma (alpha/k)^alpha, so the certified tail decays
            // like K^{5/6 - alpha}.
            const double a = fw.alpha();
            const double p = a + 1.0 / 6.0;
            const double c = gamma * kPi * std::pow(a, a);
            const auto tail = [&](std::uint64_t k) {
                return c * std::pow(static_cast<double>(k), 1.0 - p) / (p - 1.0);
            };
            return summed_dim(fw, gamma, x, y, tol, opts.max_degree, tail);
        }
        case FourierFamily::GaussianAnova:
            return anova_dim(fw.alpha_int(), gamma, x, y, tol);
        case FourierFamily::KorobovType:
            return korobov_dim(fw.alpha(), gamma, x, y, tol);
    }
    throw domain_error("kernel_series: unknown family");
}

} // namespace

double mehler_sum_1d(double t, double x, double y) {
    if (!(t > -1.0 && t < 1.0)) throw domain_error("mehler_sum_1d: need |t| < 1");
    const double one_minus_t2 = (1.0 - t) * (1.0 + t);
    const double d = x - y;
    const double arg = t * x * y / (1.0 + t) - t * t * d * d / (2.0 * one_minus_t2);
    return std::exp(arg) / std::sqrt(one_minus_t2);
}

KernelValue kernel_series(const SpaceSpec& space, std::span<const double> x,
                          std::span<const double> y, const KernelEvalOptions& opts) {
    if (x.size() != space.s || y.size() != space.s)
        throw domain_error("kernel_series: point dimension must match the space");
    if (!(opts.tail_tolerance > 0.0))
        throw domain_error("kernel_series: tolerance must be positive");

    double tol_dim = opts.tail_tolerance / static_cast<double>(2 * space.s);
    KernelValue out;
    for (int pass = 0; pass < 3; ++pass) {
        std::vector<DimValue> dims;
        dims.reserve(space.s);
        for (std::uint32_t j = 1; j <= space.s; ++j)
            dims.push_back(kernel_dim(space.fw, j, x[j - 1], y[j - 1], tol_dim, opts));

        out.value = 1.0;
        for (const auto& d : dims) out.value *= d.value;
        double tail = 0.0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            double others = 1.0;
            for (std::size_t j = 0; j < dims.size(); ++j)
                if (j != i) others *= std::abs(dims[j].value) + dims[j].tail;
            tail += dims[i].tail * others;
        }
        out.tail_bound = tail;
        if (tail <= opts.tail_tolerance || space.s == 1) break;
        // large per-dimension factors inflate the aggregate: tighten and redo
        tol_dim *= 0.4 * opts.tail_tolerance / tail;
    }
    return out;
}

double kernel_mehler(double omega, const WeightSequence& weights, std::uint32_t s,
                     std::span<const double> x, std::span<const double> y) {
    if (!(omega > 0.0 && omega < 1.0)) throw domain_error("kernel_mehler: omega must be in (0,1)");
    if (x.size() != s || y.size() != s)
        throw domain_error("kernel_mehler: point dimension must match s");
    double prod = 1.0;
    for (std::uint32_t j = 1; j <= s; ++j) {
        const double g = weights.at(j);
        prod *= 1.0 - g + g * mehler_sum_1d(omega, x[j - 1], y[j - 1]);
    }
    return prod;
}

double theta(double x, double y) {
    return y <= x ? normal_cdf(y) : -normal_cdf(-y);
}

double antiderivative_op(const std::function<double(double)>& h, double x,
                         const KernelEvalOptions& opts) {
    // g(x) = int_{-inf}^{x} h Phi(y) dy - int_{x}^{inf} h(y) Phi(-y) dy.
    // Gaussian-tail truncation: Phi(-|y|) <= phi(y) for |y| >= 1, so cutting
    // at |y| = 10 leaves less than ~1e-22 times the scale of h.
    const double cut = std::max(10.0, std::abs(x) + 2.0);
    const double tol = std::max(opts.tail_tolerance, 1e-13) / 4.0;
    const auto left = [&](double y) { return h(y) * normal_cdf(y); };
    const auto right = [&](double y) { return h(y) * normal_cdf(-y); };

    double g = 0.0;
    const double xl = std::clamp(x, -cut, cut);
    std::vector<double> left_cuts{-cut, std::min(0.0, xl), xl};
    for (std::size_t i = 0; i + 1 < left_cuts.size(); ++i)
        if (left_cuts[i] < left_cuts[i + 1])
            g += integrate_adaptive(left, left_cuts[i], left_cuts[i + 1], tol).value;
    std::vector<double> right_cuts{xl, std::max(0.0, xl), cut};
    for (std::size_t i = 0; i + 1 < right_cuts.size(); ++i)
        if (right_cuts[i] < right_cuts[i + 1])
            g -= integrate_adaptive(right, right_cuts[i], right_cuts[i + 1], tol).value;
    return g;
}

namespace {

// Zero-mean primitive of xi -> theta(xi, s), in closed form:
// G(x, s) = (x-s) Phi(s) - phi(s) for x >= s and (s-x) Phi(-s) - phi(s) below.
double theta_primitive(double x, double s) {
    const double p = x >= s ? (x - s) * normal_cdf(s) : (s - x) * normal_cdf(-s);
    return p - normal_pdf(s);
}

double integrate_split(const std::function<double(double)>& f, std::vector<double> cuts,
                       double tol) {
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i] < cuts[i + 1])
            total += integrate_adaptive(f, cuts[i], cuts[i + 1], tol).value;
    }
    return total;
}

} // namespace

double kernel_anova_integral(int alpha, double gamma, double x, double y,
                             const KernelEvalOptions& opts) {
    if (alpha != 1 && alpha != 2)
        throw domain_error("kernel_anova_integral: supported for alpha in {1, 2}");
    const double cut = 8.0;
    const double tol = std::min(opts.tail_tolerance, 1e-9) / std::max(gamma, 1.0);
    const std::vector<double> cuts{-cut, std::clamp(x, -cut, cut), std::clamp(y, -cut, cut),
                                   0.0, cut};
    if (alpha == 1) {
        // integrand theta(x,s) theta(y,s) / phi(s); the theta factors shrink
        // like Phi(-|s|) <= phi(s) in the tails, which beats the 1/phi factor.
        const auto f = [&](double s) { return theta(x, s) * theta(y, s) / normal_pdf(s); };
        return 1.0 + gamma * integrate_split(f, cuts, tol);
    }
    // alpha = 2: the two inner layers of the representation integrate in
    // closed form to the zero-mean primitive of theta.
    const auto f = [&](double s) {
        return theta_primitive(x, s) * theta_primitive(y, s) / normal_pdf(s);
    };
    return 1.0 + gamma * x * y + gamma * integrate_split(f, cuts, tol);
}

AnchoredKernel kernel_anchored(int alpha, double gamma, double x, double y,
                               const KernelEvalOptions& opts) {
    if (alpha < 1) throw domain_error("kernel_anchored: alpha must be a positive integer");
    if (!(gamma > 0.0)) throw domain_error("kernel_anchored: gamma must be positive");
    AnchoredKernel out;
    out.value = 1.0;
    double fact = 1.0;
    double xy_pow = 1.0;
    for (int l = 1; l < alpha; ++l) {
        fact *= l;
        xy_pow *= x * y;
        out.value += gamma * xy_pow / (fact * fact);
    }
    if (x * y < 0.0) {
        out.decomposable = 0.0;
        return out;
    }
    const double upper = std::min(std::abs(x), std::abs(y));
    if (upper > 0.0) {
        const double am1 = static_cast<double>(alpha - 1);
        double fact_am1 = 1.0;
        for (int i = 2; i < alpha; ++i) fact_am1 *= i;
        const auto f = [&](double s) {
            const double base = (std::abs(x) - s) * (std::abs(y) - s);
            return std::pow(base, am1) / normal_pdf(s);
        };
        // the integrand peaks at ~ (|xy|)^{alpha-1} / phi(upper)
        const double peak = std::pow(std::abs(x * y), am1) / normal_pdf(upper);
        const double tol = std::max({opts.tail_tolerance * 1e-2, 1e-13,
                                     64.0 * std::numeric_limits<double>::epsilon() * peak});
        out.decomposable =
            gamma * integrate_adaptive(f, 0.0, upper, tol).value / (fact_am1 * fact_am1);
    }
    out.value += out.decomposable;
    return out;
}

} // namespace hws
