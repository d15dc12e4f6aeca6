#include <doctest.h>

#include <cmath>
#include <vector>

#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"
#include "hermspace/spectra.hpp"

using namespace hws;

namespace {

SpaceSpec anova_space(int alpha, WeightSequence w, std::uint32_t s) {
    return SpaceSpec(FourierWeights(FourierFamily::GaussianAnova, alpha, std::move(w)), s);
}

} // namespace

TEST_CASE("eigenvalue counting") {
    SUBCASE("one-dimensional scan oracle") {
        // r(k) = 0.5/(k(k-1)) stays above 0.01 exactly for k <= 7
        const auto space = anova_space(2, WeightSequence::constant(0.5), 1);
        CHECK(count_large_eigenvalues(space, 0.1).compare(8ul) == 0);
        CHECK(count_large_eigenvalues(space, 0.8).compare(1ul) == 0);
    }
    SUBCASE("unweighted spaces hold at least 2^s eigenvalues above any threshold") {
        const auto space = anova_space(2, WeightSequence::constant(1.0), 10);
        for (double eps : {0.37, 0.5, 0.99}) {
            const BigCount n = count_large_eigenvalues(space, eps);
            CHECK_FALSE(n < BigCount::power_of_two(10));
        }
    }
    SUBCASE("count is non-increasing in epsilon") {
        const auto space = anova_space(1, WeightSequence::poly_decay(1.0), 3);
        BigCount prev = count_large_eigenvalues(space, 0.05);
        for (double eps : {0.1, 0.2, 0.4, 0.6, 0.8, 0.95}) {
            const BigCount n = count_large_eigenvalues(space, eps);
            CHECK(n <= prev);
            prev = n;
        }
    }
    SUBCASE("strictness of the membership comparison") {
        // gamma = 0.64 puts r(1) exactly at eps^2 for eps = 0.8: excluded
        const auto space = anova_space(2, WeightSequence::constant(0.64), 1);
        CHECK(count_large_eigenvalues(space, 0.8).compare(1ul) == 0);
        // widening tolerance re-admits it
        CHECK(count_large_eigenvalues(space, 0.8, 1e-9).compare(2ul) == 0);
    }
    SUBCASE("blocked enumeration handles counts far beyond 64 bits") {
        // per-dimension values {0,1} carry weight 1 and k=2 carries 1/2, so
        // the exact count at eps = 0.5 is 2^s + s 2^{s-1} = (s+2) 2^{s-1}
        const auto space = anova_space(2, WeightSequence::constant(1.0), 70);
        BigCount expected(72);
        expected *= BigCount::power_of_two(69);
        CHECK(count_large_eigenvalues(space, 0.5) == expected);
    }
    SUBCASE("repeated weights against a dense reference count") {
        // blocks of equal coordinates exercise the multiplicity bookkeeping
        const auto space =
            anova_space(2, WeightSequence::explicit_seq({0.8, 0.8, 0.8, 0.5, 0.5}, 0.5), 6);
        for (double eps : {0.2, 0.35, 0.6}) {
            const double threshold = eps * eps;
            std::vector<std::uint32_t> cutoff(space.s);
            std::uint64_t cells = 1;
            for (std::uint32_t j = 1; j <= space.s; ++j) {
                std::uint32_t kmax = 0;
                while (space.fw.weight_1d(j, kmax + 1) > threshold) ++kmax;
                cutoff[j - 1] = kmax;
                cells *= kmax + 1;
            }
            std::uint64_t reference = 0;
            for (std::uint64_t cell = 0; cell < cells; ++cell) {
                std::uint64_t rem = cell;
                double prod = 1.0;
                for (std::uint32_t d = 0; d < space.s; ++d) {
                    const auto k = static_cast<std::uint32_t>(rem % (cutoff[d] + 1));
                    rem /= cutoff[d] + 1;
                    if (k != 0) prod *= space.fw.weight_1d(d + 1, k);
                }
                if (prod > threshold) ++reference;
            }
            CHECK(count_large_eigenvalues(space, eps).compare(reference) == 0);
        }
    }
    SUBCASE("the zero index keeps every count at least 1") {
        const auto space = anova_space(2, WeightSequence::poly_decay(2.0), 4);
        CHECK(count_large_eigenvalues(space, 0.99).compare(1ul) >= 0);
    }
    SUBCASE("finite effective dimension through a zero tail") {
        const auto space = anova_space(2, WeightSequence::explicit_seq({0.5}, 0.0), 3);
        // dimensions 2 and 3 admit only k = 0, so this is the 1-D count
        const auto one_dim = anova_space(2, WeightSequence::constant(0.5), 1);
        for (double eps : {0.1, 0.4}) {
            CHECK(count_large_eigenvalues(space, eps) ==
                  count_large_eigenvalues(one_dim, eps));
        }
    }
    SUBCASE("harmonic weights have a closed count") {
        // alpha = 1: r(k) = 1/k, so exactly the k < 1/eps^2 frequencies pass
        const auto space = anova_space(1, WeightSequence::constant(1.0), 1);
        CHECK(count_large_eigenvalues(space, 0.01).compare(10000ul) == 0);
        CHECK(count_large_eigenvalues(space, 0.1).compare(100ul) == 0);
    }
    SUBCASE("non-integer Korobov smoothness") {
        SpaceSpec rho(FourierWeights(FourierFamily::KorobovType, 2.5,
                                     WeightSequence::constant(0.9)),
                      1);
        for (double eps : {0.05, 0.3, 0.8}) {
            std::uint64_t manual = 1;
            for (std::uint32_t k = 1; 0.9 * std::pow(k, -2.5) > eps * eps; ++k) ++manual;
            CHECK(count_large_eigenvalues(rho, eps).compare(manual) == 0);
        }
    }
    SUBCASE("domain validation") {
        const auto space = anova_space(2, WeightSequence::constant(0.5), 1);
        CHECK_THROWS_AS(count_large_eigenvalues(space, 0.0), domain_error);
        CHECK_THROWS_AS(count_large_eigenvalues(space, 1.0), domain_error);
    }
}

TEST_CASE("zeta bound on the count") {
    SUBCASE("worked example") {
        const auto space = anova_space(2, WeightSequence::constant(1.0), 1);
        const double bound = zeta_bound_on_count(space, 0.1, 1.0);
        const double expected = 100.0 * (1.0 + 4.0 * riemann_zeta(2.0));
        CHECK(bound == doctest::Approx(expected).epsilon(1e-12));
        const BigCount count = count_large_eigenvalues(space, 0.1);
        CHECK(count.compare(11ul) == 0);
        CHECK_FALSE(count.exceeds(bound));
    }
    SUBCASE("explicit weights") {
        const auto space =
            anova_space(2, WeightSequence::explicit_seq({0.9, 0.5, 0.1}, 0.0), 3);
        const double bound = zeta_bound_on_count(space, 0.05, 1.2);
        CHECK_FALSE(count_large_eigenvalues(space, 0.05).exceeds(bound));
    }
    SUBCASE("q at or below 1/alpha is rejected") {
        const auto space = anova_space(2, WeightSequence::constant(1.0), 1);
        CHECK_THROWS_AS(zeta_bound_on_count(space, 0.1, 0.5), domain_error);
        CHECK_THROWS_AS(zeta_bound_on_count(space, 0.1, 0.2), domain_error);
    }
}

TEST_CASE("complexity reports") {
    SUBCASE("the bound always dominates the count") {
        for (double eps : {0.1, 0.33, 0.8}) {
            const auto space = anova_space(2, WeightSequence::poly_decay(1.0), 3);
            const auto report = complexity_report(space, eps);
            CHECK(report.has_bound);
            CHECK(report.q_used > 1.0 / space.fw.alpha());
            CHECK_FALSE(report.count.exceeds(report.zeta_bound));
        }
    }
    SUBCASE("non-anova families come back without a bound") {
        SpaceSpec rho(FourierWeights(FourierFamily::KorobovType, 2.0,
                                     WeightSequence::constant(0.5)),
                      2);
        const auto report = complexity_report(rho, 0.4);
        CHECK_FALSE(report.has_bound);
        CHECK(report.count.compare(0ul) > 0);
    }
    SUBCASE("explicit q is honored") {
        const auto space = anova_space(2, WeightSequence::constant(0.5), 1);
        const auto report = complexity_report(space, 0.1, 1.25);
        CHECK(report.q_used == 1.25);
        CHECK_FALSE(report.count.exceeds(report.zeta_bound));
    }
}

TEST_CASE("eigenvalue stream") {
    SUBCASE("head of the stream") {
        const auto space = anova_space(2, WeightSequence::constant(0.5), 2);
        EigenvalueStream stream(space);
        const auto first = stream.next();
        CHECK(first.value == 1.0);
        CHECK(first.index.empty());
        const auto second = stream.next();
        const auto third = stream.next();
        const auto fourth = stream.next();
        CHECK(second.value == doctest::Approx(0.5));
        CHECK(third.value == doctest::Approx(0.5));
        CHECK(fourth.value == doctest::Approx(0.25));
        // lexicographic tie order: (0,1) before (1,0)
        CHECK(second.index == MultiIndex{{2, 1}});
        CHECK(third.index == MultiIndex{{1, 1}});
    }
    SUBCASE("values are non-increasing and consistent with counting") {
        const auto space = anova_space(2, WeightSequence::explicit_seq({1.0, 0.6}, 0.0), 2);
        const auto values = leading_eigenvalues(space, 400);
        for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] <= values[i - 1]);
        for (double eps : {0.9, 0.5, 0.21, 0.1}) {
            std::size_t manual = 0;
            while (manual < values.size() && values[manual] > eps * eps) ++manual;
            REQUIRE(manual < values.size());
            CHECK(count_large_eigenvalues(space, eps).compare(manual) == 0);
        }
    }
    SUBCASE("minimal errors") {
        const auto space = anova_space(2, WeightSequence::constant(0.5), 2);
        CHECK(nth_minimal_error(space, 0) == 1.0);
        CHECK(nth_minimal_error(space, 1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
        CHECK(nth_minimal_error(space, 3) == doctest::Approx(0.5).epsilon(1e-14));
        double prev = 1.0;
        for (std::uint64_t n = 0; n <= 50; ++n) {
            const double e = nth_minimal_error(space, n);
            CHECK(e <= prev + 1e-15);
            prev = e;
        }
    }
}

TEST_CASE("trace of the approximation operator") {
    CHECK(anova_eigenvalue_sum(2) == doctest::Approx(2.0).epsilon(1e-12));
    SUBCASE("telescoping closed form") {
        // sum_{k>=alpha} (k-alpha)!/k! = 1/((alpha-1)(alpha-1)!), so
        // T(alpha) = sum_{k<alpha} 1/k! + 1/((alpha-1)(alpha-1)!)
        for (int alpha = 2; alpha <= 10; ++alpha) {
            double closed = 0.0, fact = 1.0;
            for (int k = 1; k < alpha; ++k) {
                fact *= k;
                closed += 1.0 / fact;
            }
            closed += 1.0 / ((alpha - 1.0) * fact);
            CHECK(anova_eigenvalue_sum(alpha) == doctest::Approx(closed).epsilon(1e-13));
        }
    }
    const auto one = anova_space(2, WeightSequence::constant(1.0), 1);
    CHECK(trace(one) == doctest::Approx(3.0).epsilon(1e-12));
    const auto two = anova_space(2, WeightSequence::explicit_seq({1.0, 0.5}, 0.0), 2);
    CHECK(trace(two) == doctest::Approx(6.0).epsilon(1e-12));
    const auto rough = anova_space(1, WeightSequence::constant(1.0), 1);
    CHECK_THROWS_AS(trace(rough), divergence_error);
    CHECK_THROWS_AS(anova_eigenvalue_sum(1), divergence_error);

    SUBCASE("interval against zeta") {
        const double e_minus_2 = std::exp(1.0) - 2.0;
        for (int alpha = 2; alpha <= 8; ++alpha) {
            const double t = anova_eigenvalue_sum(alpha);
            CHECK(t >= riemann_zeta(alpha) - 1e-12);
            CHECK(t <= e_minus_2 + riemann_zeta(alpha) + 1e-12);
        }
    }
}

TEST_CASE("tractability criterion sums") {
    SUBCASE("tau = 1 reduces to the trace") {
        const auto space = anova_space(2, WeightSequence::constant(1.0), 1);
        CHECK(spt_criterion_sum(space, 1.0) == doctest::Approx(3.0).epsilon(1e-11));
    }
    SUBCASE("tau = 2 against the partial-fraction closed form") {
        const auto space = anova_space(2, WeightSequence::constant(1.0), 1);
        // sum_{k>=2} (k(k-1))^{-2} = 2 zeta(2) - 3
        const double expected = 2.0 + (2.0 * riemann_zeta(2.0) - 3.0);
        CHECK(spt_criterion_sum(space, 2.0) == doctest::Approx(expected).epsilon(1e-11));
    }
    SUBCASE("divergence below 1/alpha") {
        const auto space = anova_space(2, WeightSequence::constant(1.0), 1);
        CHECK_THROWS_AS(spt_criterion_sum(space, 0.5), divergence_error);
        CHECK_THROWS_AS(qpt_criterion_value(space, 0.2), divergence_error);
    }
    SUBCASE("qpt criterion") {
        const auto s1 = anova_space(2, WeightSequence::constant(1.0), 1);
        CHECK(qpt_criterion_value(s1, 1.0) == doctest::Approx(3.0).epsilon(1e-11));
        const auto s4 = anova_space(2, WeightSequence::constant(1.0), 4);
        CHECK(qpt_criterion_value(s4, 1.0) >= 1.0);
    }
    SUBCASE("korobov series against a long direct sum") {
        SpaceSpec rho(FourierWeights(FourierFamily::KorobovType, 2.0,
                                     WeightSequence::constant(0.8)),
                      1);
        double direct = 1.0;
        for (std::uint64_t k = 1; k <= 4000000; ++k)
            direct += std::pow(0.8 / (static_cast<double>(k) * k), 1.3);
        // remaining tail below 4e6^{-1.6} * ... ~ 3e-9 relative slack
        CHECK(spt_criterion_sum(rho, 1.3) == doctest::Approx(direct).epsilon(1e-7));
    }
    SUBCASE("korobov criterion against the zeta function") {
        // rho(k)^tau = (gamma k^-alpha)^tau sums to gamma^tau zeta(alpha tau)
        SpaceSpec rho(FourierWeights(FourierFamily::KorobovType, 2.0,
                                     WeightSequence::constant(0.5)),
                      1);
        const double expected = 1.0 + std::pow(0.5, 1.5) * riemann_zeta(3.0);
        CHECK(spt_criterion_sum(rho, 1.5) == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("unsupported families") {
        SpaceSpec psi(FourierWeights(FourierFamily::SobolevVariant, 2,
                                     WeightSequence::constant(0.5)),
                      1);
        CHECK_THROWS_AS(spt_criterion_sum(psi, 1.0), domain_error);
        SpaceSpec expf(FourierWeights::exponential(0.5, WeightSequence::constant(0.5)), 1);
        CHECK_THROWS_AS(qpt_criterion_value(expf, 1.0), domain_error);
    }
}

TEST_CASE("counting recurrence across dimensions") {
    // |A(eps, s+1)| <= |A(eps, s)| + sum_k |A(eps gamma^{-1/2} (k/alpha)^{alpha/2}, s)|
    const int alpha = 2;
    const auto weights = WeightSequence::poly_decay(1.0);
    for (std::uint32_t s = 1; s <= 2; ++s) {
        for (double eps : {0.2, 0.45, 0.7}) {
            const auto lhs_space = anova_space(alpha, weights, s + 1);
            const auto rhs_space = anova_space(alpha, weights, s);
            const double lhs =
                count_large_eigenvalues(lhs_space, eps).as_double();
            double rhs = count_large_eigenvalues(rhs_space, eps).as_double();
            const double gamma_next = weights.at(s + 1);
            for (std::uint32_t k = 1;; ++k) {
                const double eps_k = eps / std::sqrt(gamma_next) *
                                     std::pow(static_cast<double>(k) / alpha, alpha / 2.0);
                if (eps_k >= 1.0) break;
                rhs += count_large_eigenvalues(rhs_space, eps_k).as_double();
            }
            CHECK(lhs <= rhs);
        }
    }
}
