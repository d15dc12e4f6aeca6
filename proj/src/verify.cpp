#include "hermspace/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "hermspace/analysis.hpp"
#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"
#include "hermspace/jsonio.hpp"
#include "hermspace/kernels.hpp"
#include "hermspace/spectra.hpp"
#include "hermspace/tractability.hpp"

namespace hws {

namespace {

// Portable deterministic generator (splitmix64); std:: distributions are
// implementation-defined, which would break cross-platform reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

WeightSequence random_weights(Rng& rng) {
    switch (rng.below(4)) {
        case 0: return WeightSequence::poly_decay(rng.uniform(0.5, 3.0));
        case 1: return WeightSequence::geometric(rng.uniform(0.3, 0.95));
        case 2: return WeightSequence::constant(rng.uniform(0.1, 1.0));
        default: {
            std::vector<double> prefix;
            double g = rng.uniform(0.5, 1.0);
            const int len = 1 + static_cast<int>(rng.below(3));
            for (int i = 0; i < len; ++i) {
                prefix.push_back(g);
                g *= rng.uniform(0.3, 1.0);
            }
            const double tail = rng.below(2) == 0 ? 0.0 : g * rng.uniform(0.1, 1.0);
            return WeightSequence::explicit_seq(std::move(prefix), tail);
        }
    }
}

FourierWeights random_family(Rng& rng, WeightSequence w) {
    const int alpha = 1 + static_cast<int>(rng.below(3));
    switch (rng.below(4)) {
        case 0: return FourierWeights(FourierFamily::GaussianAnova, alpha, std::move(w));
        case 1: return FourierWeights(FourierFamily::KorobovType, alpha, std::move(w));
        case 2: return FourierWeights(FourierFamily::SobolevVariant, alpha, std::move(w));
        default: return FourierWeights::exponential(rng.uniform(0.2, 0.9), std::move(w));
    }
}

// Reference count by full-grid enumeration: per-dimension cutoffs scanned
// from the monotone one-dimensional weights, then a dense sweep.
std::uint64_t naive_grid_count(const SpaceSpec& space, double eps, std::uint64_t* grid_size) {
    const double threshold = eps * eps;
    std::vector<std::uint32_t> cutoff(space.s);
    std::uint64_t cells = 1;
    for (std::uint32_t j = 1; j <= space.s; ++j) {
        std::uint32_t kmax = 0;
        while (space.fw.weight_1d(j, kmax + 1) > threshold) {
            ++kmax;
            if (kmax > 3000000) throw domain_error("naive_grid_count: cutoff too large");
        }
        cutoff[j - 1] = kmax;
        cells *= kmax + 1;
    }
    if (grid_size) *grid_size = cells;

    std::uint64_t count = 0;
    std::vector<std::uint32_t> k(space.s, 0);
    for (std::uint64_t cell = 0; cell < cells; ++cell) {
        std::uint64_t rem = cell;
        double prod = 1.0;
        for (std::uint32_t d = 0; d < space.s; ++d) {
            k[d] = static_cast<std::uint32_t>(rem % (cutoff[d] + 1));
            rem /= cutoff[d] + 1;
            if (k[d] != 0) prod *= space.fw.weight_1d(d + 1, k[d]);
        }
        if (prod > threshold) ++count;
    }
    return count;
}

using CheckFn = std::function<void(Rng&, bool&, std::ostringstream&)>;

CheckResult run_check(const std::string& name, double budget, std::uint64_t seed,
                      const CheckFn& fn) {
    CheckResult r;
    r.name = name;
    r.budget_seconds = budget;
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    try {
        bool pass = true;
        Rng rng(seed);
        fn(rng, pass, detail);
        r.pass = pass;
    } catch (const std::exception& e) {
        r.pass = false;
        detail << "exception: " << e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.pass && r.seconds > budget) {
        r.pass = false;
        detail << " (exceeded " << budget << " s budget)";
    }
    r.detail = detail.str();
    return r;
}

// ---------------------------------------------------------------- bounds ---

void check_cramer(Rng& rng, bool& pass, std::ostringstream& detail) {
    const double sqrt_pi = std::sqrt(3.14159265358979323846);
    double worst = 0.0;
    for (int rep = 0; rep < 40; ++rep) {
        const double x = rng.uniform(-10.0, 10.0);
        const auto h = hermite_eval_all(2000, x);
        const double root_phi = std::sqrt(normal_pdf(x));
        for (std::uint32_t k = 0; k <= 2000; ++k) {
            const double v = std::abs(h[k]) * root_phi;
            if (v > 1.0 + 1e-12) {
                pass = false;
                detail << "Cramer bound broken at k=" << k << " x=" << x << "; ";
                return;
            }
            if (k >= 1) {
                const double improved = std::min(1.0, sqrt_pi * std::pow(k, -1.0 / 12.0));
                if (v > improved + 1e-12) {
                    pass = false;
                    detail << "improved bound broken at k=" << k << " x=" << x << "; ";
                    return;
                }
            }
            worst = std::max(worst, v);
        }
        // recurrence stays finite far beyond
        const double far = hermite_eval(10000, x);
        if (!std::isfinite(far)) {
            pass = false;
            detail << "recurrence blew up at k=10000, x=" << x;
            return;
        }
    }
    detail << "max |H_k| sqrt(phi) = " << worst << " over k<=2000";
}

void check_lemma1(Rng&, bool& pass, std::ostringstream& detail) {
    std::uint64_t tested = 0;
    for (int alpha = 1; alpha <= 6; ++alpha) {
        FourierWeights fw(FourierFamily::GaussianAnova, alpha, WeightSequence::constant(1.0));
        for (double gamma : {0.1, 0.5, 1.0}) {
            for (std::uint64_t k = 1; k <= 100000; ++k) {
                const double r = fw.weight_1d_gamma(gamma, static_cast<std::uint32_t>(k));
                const auto [lo, hi] = decay_bounds(alpha, gamma, k);
                if (!(lo <= r && r <= hi)) {
                    pass = false;
                    detail << "bounds broken at alpha=" << alpha << " gamma=" << gamma
                           << " k=" << k << ": " << lo << " / " << r << " / " << hi;
                    return;
                }
                ++tested;
            }
        }
    }
    detail << tested << " triples checked exactly";
}

void check_lemma5(Rng& rng, bool& pass, std::ostringstream& detail) {
    int done = 0;
    while (done < 100) {
        const int alpha = 1 + static_cast<int>(rng.below(3));
        const auto s = static_cast<std::uint32_t>(1 + rng.below(4));
        SpaceSpec space(FourierWeights(FourierFamily::GaussianAnova, alpha, random_weights(rng)),
                        s);
        const double eps = rng.uniform(0.05, 0.9);
        const double q = 1.0 / alpha + rng.uniform(0.05, 2.0);
        const BigCount count = count_large_eigenvalues(space, eps);
        const double bound = zeta_bound_on_count(space, eps, q);
        if (count.exceeds(bound)) {
            pass = false;
            detail << "count " << count.str() << " exceeds bound " << bound << " (alpha=" << alpha
                   << ", s=" << s << ", eps=" << eps << ", q=" << q << ")";
            return;
        }
        ++done;
    }
    detail << "100 random configurations within the bound";
}

// --------------------------------------------------------------- kernels ---

void check_mehler_series(Rng&, bool& pass, std::ostringstream& detail) {
    KernelEvalOptions opts;
    opts.tail_tolerance = 1e-11;
    double worst = 0.0;
    for (double omega : {0.3, 0.6, 0.9}) {
        for (double gamma : {0.5, 1.0}) {
            SpaceSpec space(
                FourierWeights::exponential(omega, WeightSequence::constant(gamma)), 1);
            for (int i = 0; i < 21; ++i) {
                for (int j = 0; j < 21; ++j) {
                    const double x = -3.0 + 6.0 * i / 20.0;
                    const double y = -3.0 + 6.0 * j / 20.0;
                    const double closed =
                        kernel_mehler(omega, space.fw.weights(), 1, {{x}}, {{y}});
                    const double series = kernel_series(space, {{x}}, {{y}}, opts).value;
                    worst = std::max(worst, std::abs(closed - series));
                }
            }
        }
    }
    if (worst > 1e-10) pass = false;
    detail << "max |mehler - series| = " << worst;
}

void check_theorem1(Rng&, bool& pass, std::ostringstream& detail) {
    KernelEvalOptions opts;
    opts.tail_tolerance = 1e-8;
    const double at_zero = kernel_anova_integral(1, 1.0, 0.0, 0.0, opts);
    const double target = 1.0 + std::log(2.0);
    if (std::abs(at_zero - target) > 1e-6) {
        pass = false;
        detail << "integral route at (0,0) = " << at_zero << ", expected " << target;
        return;
    }
    SpaceSpec space(FourierWeights(FourierFamily::GaussianAnova, 1, WeightSequence::constant(1.0)),
                    1);
    double worst = 0.0;
    for (double x : {-1.5, 0.0, 1.2}) {
        for (double y : {-0.8, 0.4, 1.5}) {
            const double by_integral = kernel_anova_integral(1, 1.0, x, y, opts);
            const double by_series = kernel_series(space, {{x}}, {{y}}, opts).value;
            worst = std::max(worst, std::abs(by_integral - by_series));
        }
    }
    if (worst > 1e-6) pass = false;
    detail << "|K(0,0) - (1+ln 2)| = " << std::abs(at_zero - target)
           << ", max route gap on 9 points = " << worst;
}

void check_anchored_decomposable(Rng& rng, bool& pass, std::ostringstream& detail) {
    for (int alpha = 1; alpha <= 4; ++alpha) {
        for (int rep = 0; rep < 50; ++rep) {
            double x = rng.uniform(0.05, 3.0);
            double y = -rng.uniform(0.05, 3.0);
            if (rng.below(2) == 0) std::swap(x, y);
            const AnchoredKernel k = kernel_anchored(alpha, rng.uniform(0.1, 1.0), x, y);
            if (k.decomposable != 0.0) {
                pass = false;
                detail << "L(" << x << ", " << y << ") = " << k.decomposable << " at alpha "
                       << alpha;
                return;
            }
        }
    }
    detail << "decomposable part vanished at 200 opposite-sign pairs";
}

void check_prop7(Rng& rng, bool& pass, std::ostringstream& detail) {
    double closest = 1e300;
    for (int rep = 0; rep < 100; ++rep) {
        const int alpha = 1 + static_cast<int>(rng.below(3));
        const auto s = static_cast<std::uint32_t>(1 + rng.below(3));
        const std::size_t n = 1 + rng.below(20);
        const double omega = std::pow(3.0, -alpha / 3.0);
        const WeightSequence w = random_weights(rng);
        SpaceSpec space(FourierWeights::exponential(omega, w), s);

        CubatureRule rule;
        rule.s = s;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> node(s);
            for (auto& c : node) c = rng.uniform(-3.0, 3.0);
            rule.nodes.push_back(std::move(node));
            rule.weights.push_back(rng.uniform(0.0, 2.0 / static_cast<double>(n)));
        }
        const WceResult wce = wce_integration(space, rule);
        const double bound = wce_lower_bound(alpha, w, s, n);
        const double margin = wce.raw_squared - bound * bound;
        closest = std::min(closest, margin);
        if (margin < -1e-12) {
            pass = false;
            detail << "rule with n=" << n << " s=" << s << " beat the bound by " << -margin;
            return;
        }
    }
    detail << "smallest wce^2 - bound^2 margin = " << closest;
}

// ----------------------------------------------------------------- norms ---

void check_norm_duality(Rng&, bool& pass, std::ostringstream& detail) {
    const QuadratureRule quad = gauss_hermite(40);
    double worst = 0.0;
    for (int alpha = 1; alpha <= 3; ++alpha) {
        for (double gamma : {0.25, 1.0}) {
            SpaceSpec space(
                FourierWeights(FourierFamily::GaussianAnova, alpha,
                               WeightSequence::constant(gamma)),
                1);
            for (int d = 0; d <= 6; ++d) {
                const auto coeffs = hermite_coefficients(
                    [d](std::span<const double> x) { return std::pow(x[0], d); }, 1, 8);
                const double hermite_route = norm_in_space(coeffs, space);

                std::vector<std::function<double(double)>> derivs;
                for (int tau = 0; tau <= alpha; ++tau) {
                    double c = 1.0;
                    for (int i = 0; i < tau; ++i) c *= d - i;
                    const int p = d - tau;
                    if (p < 0)
                        derivs.emplace_back([](double) { return 0.0; });
                    else
                        derivs.emplace_back([c, p](double t) { return c * std::pow(t, p); });
                }
                const double sobolev_route = sobolev_norm_1d(derivs, alpha, gamma, quad);
                const double rel =
                    std::abs(hermite_route - sobolev_route) / std::max(1.0, sobolev_route);
                worst = std::max(worst, rel);
                if (alpha == 1 && gamma == 1.0 && d == 2) {
                    const double target = std::sqrt(5.0);
                    if (std::abs(hermite_route - target) > 1e-10) {
                        pass = false;
                        detail << "||x^2|| = " << hermite_route << ", expected sqrt(5)";
                        return;
                    }
                }
            }
        }
    }
    if (worst > 1e-8) pass = false;
    detail << "max relative route gap = " << worst << " over monomials x^d, d<=6";
}

void check_parseval(Rng& rng, bool& pass, std::ostringstream& detail) {
    const QuadratureRule quad = gauss_hermite(30);
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> c(7);
        for (auto& v : c) v = rng.uniform(-2.0, 2.0);
        const auto f = [&](double t) {
            double acc = 0.0, p = 1.0;
            for (double ci : c) {
                acc += ci * p;
                p *= t;
            }
            return acc;
        };
        const auto coeffs = hermite_coefficients(
            [&](std::span<const double> x) { return f(x[0]); }, 1, 6);
        const double by_coeff = coeffs.l2_norm();
        const double by_quad = std::sqrt(quad.integrate([&](double t) { return f(t) * f(t); }));
        const double gap = std::abs(by_coeff * by_coeff - by_quad * by_quad) /
                           std::max(1.0, by_quad * by_quad);
        worst = std::max(worst, gap);
    }
    if (worst > 1e-10) pass = false;
    detail << "max relative Parseval gap = " << worst;
}

// --------------------------------------------------------------- spectra ---

void check_counting_oracle(Rng& rng, bool& pass, std::ostringstream& detail) {
    int configs = 0;
    std::uint64_t comparisons = 0;
    while (configs < 200) {
        const auto s = static_cast<std::uint32_t>(1 + rng.below(3));
        SpaceSpec space(random_family(rng, random_weights(rng)), s);
        int eps_done = 0;
        int attempts = 0;
        while (eps_done < 50 && attempts < 400) {
            ++attempts;
            const double eps = rng.uniform(0.12, 0.95);
            std::uint64_t cells = 0;
            // probe grid size cheaply first
            try {
                const double threshold = eps * eps;
                std::uint64_t size = 1;
                bool too_big = false;
                for (std::uint32_t j = 1; j <= s && !too_big; ++j) {
                    std::uint32_t kmax = 0;
                    while (space.fw.weight_1d(j, kmax + 1) > threshold) {
                        ++kmax;
                        if (kmax > 400) {
                            too_big = true;
                            break;
                        }
                    }
                    size *= kmax + 1;
                }
                if (too_big || size > 300000) continue;
                const std::uint64_t reference = naive_grid_count(space, eps, &cells);
                const BigCount fast = count_large_eigenvalues(space, eps);
                if (fast.compare(static_cast<unsigned long>(reference)) != 0) {
                    pass = false;
                    detail << "mismatch: fast " << fast.str() << " vs naive " << reference
                           << " (s=" << s << ", eps=" << eps << ")";
                    return;
                }
                ++comparisons;
                ++eps_done;
            } catch (const domain_error&) {
                continue;
            }
        }
        ++configs;
    }
    detail << comparisons << " exact count comparisons across 200 configurations";
}

void check_minimal_error(Rng&, bool& pass, std::ostringstream& detail) {
    const std::vector<WeightSequence> weight_choices{
        WeightSequence::constant(0.7), WeightSequence::poly_decay(1.0),
        WeightSequence::explicit_seq({0.9, 0.6, 0.3}, 0.3)};
    const std::uint32_t caps[3] = {1200, 400, 90};
    for (std::uint32_t s = 1; s <= 3; ++s) {
        const auto& w = weight_choices[s - 1];
        SpaceSpec space(FourierWeights(FourierFamily::GaussianAnova, 2, w), s);

        // brute force: sorted products over the dense grid {0..cap}^s
        const std::uint32_t cap = caps[s - 1];
        std::vector<double> w1d[3];
        for (std::uint32_t j = 1; j <= s; ++j) {
            for (std::uint32_t k = 0; k <= cap; ++k)
                w1d[j - 1].push_back(space.fw.weight_1d(j, k));
        }
        std::vector<double> products;
        std::uint64_t cells = 1;
        for (std::uint32_t j = 0; j < s; ++j) cells *= cap + 1;
        products.reserve(cells);
        for (std::uint64_t cell = 0; cell < cells; ++cell) {
            std::uint64_t rem = cell;
            double prod = 1.0;
            for (std::uint32_t d = 0; d < s; ++d) {
                prod *= w1d[d][rem % (cap + 1)];
                rem /= cap + 1;
            }
            products.push_back(prod);
        }
        std::sort(products.begin(), products.end(), std::greater<>());
        // every index outside the grid has some k_j > cap, so its eigenvalue
        // is at most the largest per-dimension weight beyond the cap
        double grid_floor = 0.0;
        for (std::uint32_t j = 1; j <= s; ++j)
            grid_floor = std::max(grid_floor, space.fw.weight_1d(j, cap + 1));
        if (grid_floor > products[1000]) {
            pass = false;
            detail << "grid cap too small for the oracle";
            return;
        }

        const auto stream_values = leading_eigenvalues(space, 1001);
        double worst = 0.0;
        for (std::size_t n = 0; n <= 1000; ++n) {
            const double expected = std::sqrt(products[n]);
            worst = std::max(worst, std::abs(stream_values[n] - products[n]));
            if (std::abs(std::sqrt(stream_values[n]) - expected) > 1e-12) {
                pass = false;
                detail << "e(" << n << ") mismatch at s=" << s;
                return;
            }
        }

        // witness: truncation error of the (n+1)-th eigenvector equals e(n)
        EigenvalueStream stream(space);
        std::vector<EigenvalueStream::Entry> entries;
        for (int i = 0; i <= 1000; ++i) entries.push_back(stream.next());
        for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{5}, std::size_t{17},
                              std::size_t{99}, std::size_t{340}, std::size_t{999}}) {
            const auto& target = entries[n];
            HermiteCoefficients unit;
            unit.s = s;
            unit.values[target.index] = std::sqrt(space.fw.weight(target.index));
            const auto trunc = spectral_truncation(unit, space, n);
            const double e_n = std::sqrt(entries[n].value);
            if (std::abs(trunc.l2_error - e_n) > 1e-12) {
                pass = false;
                detail << "witness property broken at n=" << n << ", s=" << s << ": "
                       << trunc.l2_error << " vs " << e_n;
                return;
            }
        }
        (void)worst;
    }
    detail << "stream matches sorted products and witness identity for s<=3, n<=1000";
}

void check_trace(Rng&, bool& pass, std::ostringstream& detail) {
    const double t2 = anova_eigenvalue_sum(2);
    if (std::abs(t2 - 2.0) > 1e-10) {
        pass = false;
        detail << "T(2) = " << t2 << ", expected 2";
        return;
    }
    const double e_minus_2 = std::exp(1.0) - 2.0;
    for (int alpha = 2; alpha <= 8; ++alpha) {
        const double t = anova_eigenvalue_sum(alpha);
        const double z = riemann_zeta(alpha);
        if (!(z <= t + 1e-12 && t <= e_minus_2 + z + 1e-12)) {
            pass = false;
            detail << "T(" << alpha << ") = " << t << " outside [zeta, e-2+zeta] = [" << z << ", "
                   << e_minus_2 + z << "]";
            return;
        }
    }
    bool diverged = false;
    try {
        SpaceSpec space(
            FourierWeights(FourierFamily::GaussianAnova, 1, WeightSequence::constant(0.5)), 2);
        (void)trace(space);
    } catch (const divergence_error&) {
        diverged = true;
    }
    if (!diverged) {
        pass = false;
        detail << "alpha = 1 did not report divergence";
        return;
    }
    detail << "T(2) telescopes to 2; interval holds for alpha 2..8; alpha 1 diverges";
}

void check_spt_trend(Rng&, bool& pass, std::ostringstream& detail) {
    SpaceSpec space(FourierWeights(FourierFamily::GaussianAnova, 4, WeightSequence::poly_decay(2.0)),
                    20);
    const int points = 20;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < points; ++i) {
        const double log_eps = std::log(1e-3) + (std::log(1e-1) - std::log(1e-3)) * i /
                                                    (points - 1);
        const double eps = std::exp(log_eps);
        const BigCount n = count_large_eigenvalues(space, eps);
        const double x = -log_eps;  // log(1/eps)
        const double y = std::log(n.as_double());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (points * sxy - sx * sy) / (points * sxx - sx * sx);
    if (!(slope >= 0.9 && slope <= 1.4)) pass = false;
    detail << "least-squares slope of log n vs log(1/eps) = " << slope
           << " (theory: 1.0, accepted [0.9, 1.4])";
}

void check_curse(Rng&, bool& pass, std::ostringstream& detail) {
    for (std::uint32_t s = 10; s <= 14; ++s) {
        SpaceSpec space(
            FourierWeights(FourierFamily::GaussianAnova, 2, WeightSequence::constant(1.0)), s);
        const BigCount n = count_large_eigenvalues(space, 0.5);
        BigCount floor = BigCount::power_of_two(s);
        if (n < floor) {
            pass = false;
            detail << "count " << n.str() << " below 2^" << s;
            return;
        }
    }
    const TractabilityReport rep =
        tractability_report(WeightSequence::constant(1.0), 2.0, FourierFamily::GaussianAnova,
                            InfoClass::All, ProblemKind::Approximation);
    const NotionEntry* wt = rep.find(Notion::WT);
    if (!wt || wt->verdict != Verdict::Fails || wt->basis.find("Theorem 2") == std::string::npos ||
        wt->basis.find("item 3") == std::string::npos) {
        pass = false;
        detail << "WT verdict missing the curse citation";
        return;
    }
    detail << "count >= 2^s for s=10..14 and WT fails citing Theorem 2, item 3";
}

struct NamedCheck {
    const char* name;
    const char* suite;
    double budget;
    void (*fn)(Rng&, bool&, std::ostringstream&);
};

const NamedCheck kChecks[] = {
    {"cramer-bounds", "bounds", 30.0, check_cramer},
    {"lemma1-bounds", "bounds", 5.0, check_lemma1},
    {"lemma5-zeta-bound", "bounds", 10.0, check_lemma5},
    {"mehler-series-agreement", "kernels", 20.0, check_mehler_series},
    {"theorem1-crosscheck", "kernels", 60.0, check_theorem1},
    {"anchored-decomposability", "kernels", 1.0, check_anchored_decomposable},
    {"prop7-dominance", "kernels", 30.0, check_prop7},
    {"norm-duality", "norms", 5.0, check_norm_duality},
    {"parseval", "norms", 10.0, check_parseval},
    {"counting-oracle", "spectra", 30.0, check_counting_oracle},
    {"minimal-error-witness", "spectra", 10.0, check_minimal_error},
    {"trace-suite", "spectra", 1.0, check_trace},
    {"spt-exponent-trend", "spectra", 60.0, check_spt_trend},
    {"curse-check", "spectra", 5.0, check_curse},
};

} // namespace

std::vector<std::string> verify_suites() {
    return {"bounds", "kernels", "norms", "spectra", "all"};
}

bool is_verify_suite(const std::string& name) {
    const auto suites = verify_suites();
    return std::find(suites.begin(), suites.end(), name) != suites.end();
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed) {
    if (!is_verify_suite(suite)) throw domain_error("unknown verify suite: " + suite);
    std::vector<CheckResult> results;
    std::uint64_t salt = 1;
    for (const auto& check : kChecks) {
        ++salt;
        if (suite != "all" && suite != check.suite) continue;
        results.push_back(run_check(check.name, check.budget, seed * 0x100000001b3ULL + salt,
                                    check.fn));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string verify_summary_json(const std::string& suite, std::uint64_t seed,
                                const std::vector<CheckResult>& results, int indent) {
    nlohmann::json out;
    out["suite"] = suite;
    out["seed"] = seed;
    int passed = 0;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json c;
        c["name"] = r.name;
        c["pass"] = r.pass;
        c["detail"] = r.detail;
        c["seconds"] = r.seconds;
        c["budget_seconds"] = r.budget_seconds;
        checks.push_back(std::move(c));
        if (r.pass) ++passed;
    }
    out["checks"] = std::move(checks);
    out["passed"] = passed;
    out["failed"] = static_cast<int>(results.size()) - passed;
    return out.dump(indent);
}

} // namespace hws
