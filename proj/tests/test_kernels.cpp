#include <doctest.h>

#include <cmath>
#include <vector>

#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"
#include "hermspace/kernels.hpp"
#include "hermspace/quadrature.hpp"

using namespace hws;

namespace {

SpaceSpec make_space(FourierFamily family, double alpha, WeightSequence w, std::uint32_t s) {
    return SpaceSpec(FourierWeights(family, alpha, std::move(w)), s);
}

// brute-force partial sum of the kernel series in one dimension
double partial_kernel_sum(const FourierWeights& fw, double gamma, double x, double y,
                          std::uint32_t terms) {
    double hx_prev = 1.0, hy_prev = 1.0, hx = x, hy = y;
    double sum = 1.0;
    for (std::uint32_t k = 1; k <= terms; ++k) {
        sum += fw.weight_1d_gamma(gamma, k) * hx * hy;
        const double sk = std::sqrt(static_cast<double>(k));
        const double sk1 = std::sqrt(static_cast<double>(k + 1));
        const double nx = (x * hx - sk * hx_prev) / sk1;
        const double ny = (y * hy - sk * hy_prev) / sk1;
        hx_prev = hx;
        hx = nx;
        hy_prev = hy;
        hy = ny;
    }
    return sum;
}

} // namespace

TEST_CASE("Mehler closed form") {
    CHECK(mehler_sum_1d(0.5, 0.0, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(0.75)).epsilon(1e-14));
    const auto w1 = WeightSequence::constant(1.0);
    CHECK(kernel_mehler(0.5, w1, 1, {{0.0}}, {{0.0}}) ==
          doctest::Approx(1.1547005383792515).epsilon(1e-14));
    // vanishing weights turn every factor into 1
    const auto tiny = WeightSequence::constant(1e-12);
    CHECK(std::abs(kernel_mehler(0.5, tiny, 2, {{0.3, -1.0}}, {{0.5, 0.7}}) - 1.0) < 1e-11);
    // symmetry
    const auto w = WeightSequence::poly_decay(1.0);
    CHECK(kernel_mehler(0.7, w, 2, {{0.4, -1.2}}, {{-0.3, 2.0}}) ==
          doctest::Approx(kernel_mehler(0.7, w, 2, {{-0.3, 2.0}}, {{0.4, -1.2}})).epsilon(1e-14));
}

TEST_CASE("series kernel: exponential family against Mehler") {
    KernelEvalOptions opts;
    opts.tail_tolerance = 1e-11;
    for (double omega : {0.3, 0.9}) {
        for (double gamma : {0.5, 1.0}) {
            SpaceSpec space(
                FourierWeights::exponential(omega, WeightSequence::constant(gamma)), 1);
            for (double x : {-2.5, 0.0, 1.1}) {
                for (double y : {-0.7, 0.8, 2.9}) {
                    const auto kv = kernel_series(space, {{x}}, {{y}}, opts);
                    const double closed = kernel_mehler(omega, space.fw.weights(), 1, {{x}}, {{y}});
                    CHECK(std::abs(kv.value - closed) <= 1e-10);
                    CHECK(kv.tail_bound <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("series kernel: multivariate exponential spaces") {
    KernelEvalOptions opts;
    opts.tail_tolerance = 1e-10;
    const std::vector<WeightSequence> weight_choices{
        WeightSequence::poly_decay(1.0), WeightSequence::geometric(0.6),
        WeightSequence::explicit_seq({1.0, 0.5, 0.25}, 0.0)};
    for (const auto& w : weight_choices) {
        SpaceSpec space(FourierWeights::exponential(0.8, w), 3);
        const std::vector<double> x{0.4, -1.7, 2.1};
        const std::vector<double> y{-0.9, 0.3, 1.6};
        const auto kv = kernel_series(space, x, y, opts);
        const double closed = kernel_mehler(0.8, w, 3, x, y);
        CHECK(std::abs(kv.value - closed) <= opts.tail_tolerance);
        CHECK(kv.tail_bound <= opts.tail_tolerance);
    }
}

TEST_CASE("series kernel: GaussianAnova transform route") {
    KernelEvalOptions opts;
    opts.tail_tolerance = 1e-10;
    SUBCASE("alpha = 1 closed form at the origin") {
        const auto space = make_space(FourierFamily::GaussianAnova, 1,
                                      WeightSequence::constant(1.0), 1);
        const auto kv = kernel_series(space, {{0.0}}, {{0.0}}, opts);
        CHECK(kv.value == doctest::Approx(1.0 + std::log(2.0)).epsilon(1e-9));
        // the slowly converging direct sum brackets the same value
        const double partial = partial_kernel_sum(space.fw, 1.0, 0.0, 0.0, 400000);
        CHECK(std::abs(kv.value - partial) < 2e-3);
    }
    SUBCASE("alpha = 2 against a certified direct sum") {
        const auto space = make_space(FourierFamily::GaussianAnova, 2,
                                      WeightSequence::constant(0.8), 1);
        for (double x : {-1.0, 0.3}) {
            for (double y : {0.0, 1.4}) {
                const auto kv = kernel_series(space, {{x}}, {{y}}, opts);
                // terms decay like k^{-2} envelope k^{-1/2}: 2e5 terms give ~1e-4
                const double partial = partial_kernel_sum(space.fw, 0.8, x, y, 200000);
                CHECK(std::abs(kv.value - partial) < 1e-3);
            }
        }
    }
    SUBCASE("alpha = 4 polynomial part dominates at small weights") {
        const auto space = make_space(FourierFamily::GaussianAnova, 4,
                                      WeightSequence::constant(1e-10), 1);
        const auto kv = kernel_series(space, {{1.0}}, {{2.0}}, opts);
        CHECK(kv.value == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("symmetry and multivariate product") {
        const auto space = make_space(FourierFamily::GaussianAnova, 2,
                                      WeightSequence::poly_decay(1.0), 2);
        const auto a = kernel_series(space, {{0.5, -1.0}}, {{1.5, 0.25}}, opts);
        const auto b = kernel_series(space, {{1.5, 0.25}}, {{0.5, -1.0}}, opts);
        CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
        // product structure against two one-dimensional evaluations
        const auto d1 = make_space(FourierFamily::GaussianAnova, 2,
                                   WeightSequence::constant(1.0), 1);
        const auto d2 = make_space(FourierFamily::GaussianAnova, 2,
                                   WeightSequence::constant(0.5), 1);
        const double f1 = kernel_series(d1, {{0.5}}, {{1.5}}, opts).value;
        const double f2 = kernel_series(d2, {{-1.0}}, {{0.25}}, opts).value;
        CHECK(a.value == doctest::Approx(f1 * f2).epsilon(1e-9));
    }
}

TEST_CASE("series kernel: KorobovType and SobolevVariant") {
    KernelEvalOptions opts;
    opts.tail_tolerance = 1e-9;
    SUBCASE("korobov against direct partial sums") {
        SpaceSpec rho(FourierWeights(FourierFamily::KorobovType, 2.5,
                                     WeightSequence::constant(0.7)),
                      1);
        for (double x : {-0.6, 0.9}) {
            const auto kv = kernel_series(rho, {{x}}, {{0.2}}, opts);
            const double partial = partial_kernel_sum(rho.fw, 0.7, x, 0.2, 100000);
            CHECK(std::abs(kv.value - partial) < 1e-4);
        }
    }
    SUBCASE("sobolev alpha 1 transform against direct sum") {
        SpaceSpec psi(FourierWeights(FourierFamily::SobolevVariant, 1,
                                     WeightSequence::constant(0.9)),
                      1);
        const auto kv = kernel_series(psi, {{0.0}}, {{0.0}}, opts);
        const double partial = partial_kernel_sum(psi.fw, 0.9, 0.0, 0.0, 400000);
        CHECK(std::abs(kv.value - partial) < 2e-3);
    }
    SUBCASE("sobolev alpha 2 summed with certificate") {
        SpaceSpec psi(FourierWeights(FourierFamily::SobolevVariant, 2,
                                     WeightSequence::constant(0.5)),
                      1);
        KernelEvalOptions loose;
        loose.tail_tolerance = 1e-4;
        KernelEvalOptions tight;
        tight.tail_tolerance = 1e-6;
        tight.max_degree = 10000000;
        const auto lo = kernel_series(psi, {{0.4}}, {{-0.2}}, loose);
        const auto hi = kernel_series(psi, {{0.4}}, {{-0.2}}, tight);
        CHECK(std::abs(lo.value - hi.value) <= lo.tail_bound + hi.tail_bound);
        // unreachable tolerance reports convergence failure
        KernelEvalOptions impossible;
        impossible.tail_tolerance = 1e-12;
        impossible.max_degree = 10000;
        CHECK_THROWS_AS(kernel_series(psi, {{0.4}}, {{-0.2}}, impossible), convergence_error);
    }
}

TEST_CASE("theta and the antiderivative operator") {
    CHECK(theta(1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(theta(0.0, 1.0) == doctest::Approx(-0.15865525393145707).epsilon(1e-12));
    CHECK(theta(-1.0, -2.0) == doctest::Approx(0.022750131948179207).epsilon(1e-12));

    SUBCASE("primitive of constants and linear functions") {
        for (double x : {-1.3, 0.0, 0.7, 2.0}) {
            CHECK(antiderivative_op([](double) { return 1.0; }, x) ==
                  doctest::Approx(x).epsilon(1e-9));
            CHECK(antiderivative_op([](double y) { return y; }, x) ==
                  doctest::Approx((x * x - 1.0) / 2.0).epsilon(1e-9));
        }
    }
    SUBCASE("derivative property by central differences") {
        const auto h = [](double y) { return hermite_eval(2, y); };
        for (double x : {-0.9, 0.4, 1.6}) {
            const double d = 1e-4;
            const double fd =
                (antiderivative_op(h, x + d) - antiderivative_op(h, x - d)) / (2.0 * d);
            CHECK(fd == doctest::Approx(h(x)).epsilon(1e-6));
        }
    }
    SUBCASE("zero mean against quadrature") {
        const QuadratureRule quad = gauss_hermite(40);
        const std::vector<std::function<double(double)>> hs{
            [](double) { return 1.0; }, [](double y) { return y; },
            [](double y) { return hermite_eval(2, y); }};
        for (const auto& h : hs) {
            const double mean =
                quad.integrate([&](double x) { return antiderivative_op(h, x); });
            CHECK(std::abs(mean) < 1e-8);
        }
    }
}

TEST_CASE("integral representation of the GaussianAnova kernel") {
    KernelEvalOptions opts;
    opts.tail_tolerance = 1e-9;
    SUBCASE("alpha = 1 at the origin") {
        CHECK(kernel_anova_integral(1, 1.0, 0.0, 0.0, opts) ==
              doctest::Approx(1.0 + std::log(2.0)).epsilon(1e-8));
    }
    SUBCASE("two independent routes agree") {
        for (int alpha : {1, 2}) {
            const auto space = make_space(FourierFamily::GaussianAnova, alpha,
                                          WeightSequence::constant(1.0), 1);
            for (double x : {-1.5, 0.0, 1.2}) {
                for (double y : {-0.8, 0.4, 1.5}) {
                    const double via_integral = kernel_anova_integral(alpha, 1.0, x, y, opts);
                    const double via_series = kernel_series(space, {{x}}, {{y}}, opts).value;
                    CHECK(via_integral == doctest::Approx(via_series).epsilon(2e-7));
                }
            }
        }
    }
    SUBCASE("closed inner layers match nested quadrature at alpha 2") {
        // oracle: evaluate int theta(x,xi) theta(xi,s) dxi numerically and
        // compare through the full kernel integrand at a fixed s
        const double x = 0.7, s = -0.4;
        const auto inner = [&](double xi) { return theta(x, xi) * theta(xi, s); };
        const double nested =
            integrate_adaptive(inner, -10.0, std::min(x, s), 1e-11).value +
            integrate_adaptive(inner, std::min(x, s), std::max(x, s), 1e-11).value +
            integrate_adaptive(inner, std::max(x, s), 10.0, 1e-11).value;
        const double closed = (x >= s ? (x - s) * normal_cdf(s) : (s - x) * normal_cdf(-s)) -
                              normal_pdf(s);
        CHECK(nested == doctest::Approx(closed).epsilon(1e-8));
    }
    SUBCASE("symmetry and the polynomial part") {
        const double k1 = kernel_anova_integral(2, 0.6, 1.1, -0.5, opts);
        const double k2 = kernel_anova_integral(2, 0.6, -0.5, 1.1, opts);
        CHECK(k1 == doctest::Approx(k2).epsilon(1e-10));
        CHECK_THROWS_AS(kernel_anova_integral(3, 1.0, 0.0, 0.0, opts), domain_error);
    }
}

namespace {

// Cholesky-style check that a Gram matrix is positive semidefinite up to
// round-off; any genuine kernel must pass on every node set.
bool gram_is_psd(std::vector<std::vector<double>> g, double tol) {
    const std::size_t n = g.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (g[k][k] < -tol) return false;
        if (g[k][k] <= tol) continue;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = g[i][k] / g[k][k];
            for (std::size_t j = k; j < n; ++j) g[i][j] -= f * g[k][j];
        }
    }
    return true;
}

} // namespace

TEST_CASE("kernels are positive semidefinite on sample nodes") {
    const std::vector<double> nodes{-2.0, -1.0, -0.3, 0.4, 1.1, 2.2};
    KernelEvalOptions opts;
    opts.tail_tolerance = 1e-10;
    const std::vector<SpaceSpec> spaces{
        make_space(FourierFamily::GaussianAnova, 1, WeightSequence::constant(1.0), 1),
        make_space(FourierFamily::GaussianAnova, 3, WeightSequence::constant(0.6), 1),
        make_space(FourierFamily::KorobovType, 2.0, WeightSequence::constant(0.8), 1),
        SpaceSpec(FourierWeights::exponential(0.7, WeightSequence::constant(1.0)), 1)};
    for (const auto& space : spaces) {
        std::vector<std::vector<double>> gram(nodes.size(),
                                              std::vector<double>(nodes.size()));
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = 0; j < nodes.size(); ++j)
                gram[i][j] =
                    kernel_series(space, {{nodes[i]}}, {{nodes[j]}}, opts).value;
        CHECK(gram_is_psd(gram, 1e-7));
    }
    for (int alpha : {1, 2, 3}) {
        std::vector<std::vector<double>> gram(nodes.size(),
                                              std::vector<double>(nodes.size()));
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = 0; j < nodes.size(); ++j)
                gram[i][j] = kernel_anchored(alpha, 0.9, nodes[i], nodes[j]).value;
        CHECK(gram_is_psd(gram, 1e-9));
    }
}

TEST_CASE("anchored kernel") {
    SUBCASE("symmetry") {
        for (int alpha : {1, 2, 4}) {
            const auto a = kernel_anchored(alpha, 0.7, 1.3, 2.4);
            const auto b = kernel_anchored(alpha, 0.7, 2.4, 1.3);
            CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
            CHECK(a.decomposable == doctest::Approx(b.decomposable).epsilon(1e-12));
        }
    }
    SUBCASE("alpha 1 against the power-series oracle") {
        // int_0^1 e^{s^2/2} ds = sum_k 1/(2^k k! (2k+1))
        double series = 0.0;
        double pk = 1.0;
        for (int k = 0; k < 30; ++k) {
            series += pk / (2 * k + 1);
            pk /= 2.0 * (k + 1);
        }
        const double expected = 1.0 + std::sqrt(2.0 * 3.14159265358979323846) * series;
        const auto k = kernel_anchored(1, 1.0, 1.0, 2.0);
        CHECK(k.value == doctest::Approx(expected).epsilon(1e-10));
        CHECK(k.decomposable == doctest::Approx(expected - 1.0).epsilon(1e-10));
    }
    SUBCASE("decomposable part vanishes across the origin") {
        for (int alpha : {1, 2, 3, 4}) {
            const auto k = kernel_anchored(alpha, 0.7, -1.3, 2.4);
            CHECK(k.decomposable == 0.0);
            // only the polynomial part remains
            double poly = 1.0, fact = 1.0, xy = 1.0;
            for (int l = 1; l < alpha; ++l) {
                fact *= l;
                xy *= -1.3 * 2.4;
                poly += 0.7 * xy / (fact * fact);
            }
            CHECK(k.value == doctest::Approx(poly).epsilon(1e-14));
        }
    }
    SUBCASE("degenerate cases") {
        const auto k0 = kernel_anchored(1, 1.0, 0.0, 0.0);
        CHECK(k0.value == 1.0);
        CHECK(k0.decomposable == 0.0);
        const auto k3 = kernel_anchored(3, 1.0, 1.0, 1.0);
        CHECK(k3.value > 1.0 + 1.0 + 0.25);  // polynomial part plus positive L
        CHECK_THROWS_AS(kernel_anchored(0, 1.0, 1.0, 1.0), domain_error);
        CHECK_THROWS_AS(kernel_anchored(1, 0.0, 1.0, 1.0), domain_error);
    }
}
