#include "hermspace/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"

namespace hws {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dimensions with identical one-dimensional weight functions, i.e. equal
// gamma_j (equal weights are consecutive since the sequence is non-increasing).
struct DimBlock {
    double gamma;
    std::uint32_t size;
};

std::vector<DimBlock> segment_dimensions(const SpaceSpec& space) {
    std::vector<DimBlock> blocks;
    for (std::uint32_t j = 1; j <= space.s; ++j) {
        const double g = space.fw.weights().at(j);
        if (!blocks.empty() && blocks.back().gamma == g)
            ++blocks.back().size;
        else
            blocks.push_back({g, 1});
    }
    return blocks;
}

// Counts assignments over the remaining dimensions with product still above
// the threshold.  Within a block the dimensions are interchangeable, so
// assignments are enumerated as non-increasing value profiles weighted by the
// number of ways to place them (products of binomial coefficients).
class BlockCounter {
public:
    BlockCounter(const FourierWeights& fw, std::vector<DimBlock> blocks, double threshold)
        : fw_(fw), blocks_(std::move(blocks)), threshold_(threshold) {
        top_weight_.reserve(blocks_.size());
        for (const auto& block : blocks_)
            top_weight_.push_back(fw_.weight_1d_gamma(block.gamma, 1));
    }

    BigCount run() {
        BigCount total;
        enter_block(0, 1.0, BigCount(1), total);
        return total;
    }

private:
    void advance(std::size_t b, double product, const BigCount& mult, BigCount& total) {
        enter_block(b + 1, product, mult, total);
    }

    // The per-block weight at k = 1 is non-increasing, so once one block
    // cannot keep the product above the threshold no later block can either:
    // everything remaining is pinned to zero and contributes one assignment.
    void enter_block(std::size_t nb, double product, const BigCount& mult, BigCount& total) {
        if (nb >= blocks_.size() || !(product * top_weight_[nb] > threshold_)) {
            total += mult;
            return;
        }
        count_block(nb, blocks_[nb].size, std::numeric_limits<std::uint32_t>::max(), product,
                    mult, total);
    }

    // `remaining` dimensions of block b still need values, all <= value_cap;
    // `product` is the weight product fixed so far (> threshold).
    void count_block(std::size_t b, std::uint32_t remaining, std::uint32_t value_cap,
                     double product, const BigCount& mult, BigCount& total) {
        // all remaining dimensions zero
        advance(b, product, mult, total);
        if (remaining == 0) return;
        const double gamma = blocks_[b].gamma;
        for (std::uint32_t v = 1; v <= value_cap; ++v) {
            const double w = fw_.weight_1d_gamma(gamma, v);
            if (!(product * w > threshold_)) break;  // weights non-increasing in v
            double p = product;
            for (std::uint32_t c = 1; c <= remaining; ++c) {
                p *= w;
                if (!(p > threshold_)) break;
                BigCount m = mult;
                m *= BigCount::binomial(remaining, c);
                count_block(b, remaining - c, v - 1, p, m, total);
            }
        }
    }

    const FourierWeights& fw_;
    std::vector<DimBlock> blocks_;
    double threshold_;
    std::vector<double> top_weight_;
};

} // namespace

BigCount count_large_eigenvalues(const SpaceSpec& space, double epsilon, double tolerance) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("count_large_eigenvalues: epsilon must be in (0,1)");
    if (!(tolerance >= 0.0 && tolerance < 1.0))
        throw domain_error("count_large_eigenvalues: tolerance must be in [0,1)");
    const double threshold = epsilon * epsilon * (1.0 - tolerance);
    BlockCounter counter(space.fw, segment_dimensions(space), threshold);
    return counter.run();
}

double zeta_bound_on_count(const SpaceSpec& space, double epsilon, double q) {
    if (space.fw.family() != FourierFamily::GaussianAnova)
        throw domain_error("zeta_bound_on_count: bound is stated for the GaussianAnova family");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("zeta_bound_on_count: epsilon must be in (0,1)");
    const double alpha = space.fw.alpha();
    if (!(q > 1.0 / alpha)) throw domain_error("zeta_bound_on_count: q must exceed 1/alpha");

    const double log_zeta = std::log(riemann_zeta(alpha * q));
    const double base = alpha * q * std::log(alpha) + log_zeta;
    double log_bound = -2.0 * q * std::log(epsilon);
    for (std::uint32_t j = 1; j <= space.s; ++j) {
        const double t = base + q * std::log(space.fw.weights().at(j));
        log_bound += t > 700.0 ? t : std::log1p(std::exp(t));
    }
    return log_bound > 709.0 ? kInf : std::exp(log_bound);
}

ComplexityReport complexity_report(const SpaceSpec& space, double epsilon,
                                   std::optional<double> q) {
    ComplexityReport report;
    report.epsilon = epsilon;
    report.count = count_large_eigenvalues(space, epsilon);
    if (space.fw.family() == FourierFamily::GaussianAnova) {
        const double q_eff = q ? *q : std::max(1.0, 1.5 / space.fw.alpha());
        report.zeta_bound = zeta_bound_on_count(space, epsilon, q_eff);
        report.q_used = q_eff;
        report.has_bound = true;
    }
    return report;
}

EigenvalueStream::EigenvalueStream(const SpaceSpec& space) : space_(space) {
    heap_.push(Node{1.0, std::vector<std::uint32_t>(space.s, 0u)});
}

EigenvalueStream::Entry EigenvalueStream::next() {
    Node top = heap_.top();
    heap_.pop();

    // Canonical successors: dimension j may be incremented only if every
    // dimension beyond j is zero, which generates each index exactly once.
    std::uint32_t last_nonzero = 0;  // 1-based; 0 when the index is zero
    for (std::uint32_t j = space_.s; j >= 1; --j) {
        if (top.index[j - 1] != 0) {
            last_nonzero = j;
            break;
        }
    }
    const std::uint32_t first = last_nonzero == 0 ? 1 : last_nonzero;
    for (std::uint32_t j = first; j <= space_.s; ++j) {
        Node child;
        child.index = top.index;
        ++child.index[j - 1];
        // Recompute the product in ascending dimension order; replacing one
        // factor by a smaller one keeps IEEE products monotone, so the stream
        // stays non-increasing.
        double value = 1.0;
        for (std::uint32_t d = 1; d <= space_.s; ++d) {
            if (child.index[d - 1] != 0) value *= space_.fw.weight_1d(d, child.index[d - 1]);
        }
        child.value = value;
        heap_.push(std::move(child));
    }

    return Entry{top.value, MultiIndex(top.index)};
}

std::vector<double> leading_eigenvalues(const SpaceSpec& space, std::size_t count) {
    EigenvalueStream stream(space);
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next().value);
    return out;
}

double nth_minimal_error(const SpaceSpec& space, std::uint64_t n) {
    EigenvalueStream stream(space);
    for (std::uint64_t i = 0; i < n; ++i) stream.next();
    return std::sqrt(stream.next().value);
}

double anova_eigenvalue_sum(int alpha) {
    if (alpha < 1) throw domain_error("anova_eigenvalue_sum: alpha must be a positive integer");
    if (alpha == 1)
        throw divergence_error("anova_eigenvalue_sum: harmonic tail diverges for alpha = 1");
    double sum = 0.0;
    double factorial = 1.0;
    for (int k = 1; k < alpha; ++k) {
        factorial *= k;
        sum += 1.0 / factorial;
    }
    const int cutoff = alpha + 64;
    for (int k = alpha; k < cutoff; ++k) {
        double denom = 1.0;
        for (int i = 0; i < alpha; ++i) denom *= static_cast<double>(k - i);
        sum += 1.0 / denom;
    }
    // Exact telescoping remainder: sum_{k>=K} (k-alpha)!/k! =
    // (K-alpha)! / ((alpha-1) (K-1)!).
    double tail_denom = static_cast<double>(alpha - 1);
    for (int i = 1; i < alpha; ++i) tail_denom *= static_cast<double>(cutoff - i);
    sum += 1.0 / tail_denom;
    return sum;
}

double trace(const SpaceSpec& space) {
    if (space.fw.family() != FourierFamily::GaussianAnova)
        throw domain_error("trace: closed form is available for the GaussianAnova family");
    const double t = anova_eigenvalue_sum(space.fw.alpha_int());
    double prod = 1.0;
    for (std::uint32_t j = 1; j <= space.s; ++j) prod *= 1.0 + space.fw.weights().at(j) * t;
    return prod;
}

namespace {

// sum_{k>=1} c(k)^tau for the unit-gamma weight profile c(k) of the family,
// via direct terms plus an Euler-Maclaurin tail on f(t) = P(t)^{-tau}, with
// P(t) = prod_i (t - i) (GaussianAnova) or t^alpha (KorobovType).  The tail
// integral uses the asymptotic expansion of P(t)^{-tau} around t^{-alpha tau}.
double unit_series_sum(const FourierWeights& fw, double tau) {
    const double alpha = fw.alpha();
    if (!(alpha * tau > 1.0))
        throw divergence_error("criterion series diverges: alpha * tau must exceed 1");
    const bool anova = fw.family() == FourierFamily::GaussianAnova;
    const int ai = anova ? fw.alpha_int() : 0;

    const int start = anova ? ai : 1;
    const int cutoff = start + 1200;
    double sum = 0.0;
    for (int k = 1; k < cutoff; ++k) sum += std::pow(fw.weight_1d_gamma(1.0, k), tau);

    const double m = static_cast<double>(cutoff);
    const double at = alpha * tau;

    // moments of the pole offsets: A_n = (tau/n) sum_i i^n (zero for Korobov)
    double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;
    if (anova) {
        for (int i = 0; i < ai; ++i) {
            const double di = static_cast<double>(i);
            a1 += di;
            a2 += di * di;
            a3 += di * di * di;
            a4 += di * di * di * di;
        }
        a1 *= tau;
        a2 *= tau / 2.0;
        a3 *= tau / 3.0;
        a4 *= tau / 4.0;
    }
    const double c1 = a1;
    const double c2 = a2 + 0.5 * a1 * a1;
    const double c3 = a3 + a1 * a2 + a1 * a1 * a1 / 6.0;
    const double c4 = a4 + a1 * a3 + 0.5 * a2 * a2 + 0.5 * a1 * a1 * a2 +
                      a1 * a1 * a1 * a1 / 24.0;
    const double coeff[5] = {1.0, c1, c2, c3, c4};
    double integral = 0.0;
    for (int n = 0; n <= 4; ++n)
        integral += coeff[n] * std::pow(m, 1.0 - at - n) / (at + n - 1.0);

    // f, f', f''' at the cutoff from logarithmic derivatives of P
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    if (anova) {
        for (int i = 0; i < ai; ++i) {
            const double d = m - static_cast<double>(i);
            s1 += 1.0 / d;
            s2 += 1.0 / (d * d);
            s3 += 1.0 / (d * d * d);
        }
    } else {
        s1 = alpha / m;
        s2 = alpha / (m * m);
        s3 = alpha / (m * m * m);
    }
    const double f = std::pow(fw.weight_1d_gamma(1.0, static_cast<std::uint32_t>(cutoff)), tau);
    const double g1 = -tau * s1;
    const double g2 = tau * s2;
    const double g3 = -2.0 * tau * s3;
    const double f1 = f * g1;
    const double f3 = f * (g1 * g1 * g1 + 3.0 * g1 * g2 + g3);

    return sum + integral + 0.5 * f - f1 / 12.0 + f3 / 720.0;
}

double criterion_product(const SpaceSpec& space, double exponent, double series) {
    double log_prod = 0.0;
    for (std::uint32_t j = 1; j <= space.s; ++j) {
        const double term = std::pow(space.fw.weights().at(j), exponent) * series;
        log_prod += std::log1p(term);
    }
    return log_prod;
}

} // namespace

double spt_criterion_sum(const SpaceSpec& space, double tau) {
    if (space.fw.family() != FourierFamily::GaussianAnova &&
        space.fw.family() != FourierFamily::KorobovType)
        throw domain_error("spt_criterion_sum: supported for GaussianAnova and KorobovType");
    const double series = unit_series_sum(space.fw, tau);
    const double log_prod = criterion_product(space, tau, series);
    return log_prod > 709.0 ? kInf : std::exp(log_prod);
}

double qpt_criterion_value(const SpaceSpec& space, double tau) {
    if (space.fw.family() != FourierFamily::GaussianAnova &&
        space.fw.family() != FourierFamily::KorobovType)
        throw domain_error("qpt_criterion_value: supported for GaussianAnova and KorobovType");
    if (!(tau > 0.0)) throw domain_error("qpt_criterion_value: tau must be positive");
    const double s = static_cast<double>(space.s);
    const double exponent = tau * (1.0 + std::log(s));
    const double series = unit_series_sum(space.fw, exponent);
    const double log_value = criterion_product(space, exponent, series) / tau - 2.0 * std::log(s);
    return log_value > 709.0 ? kInf : std::exp(log_value);
}

} // namespace hws
