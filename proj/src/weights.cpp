#include "hermspace/weights.hpp"

#include <cmath>

#include "hermspace/errors.hpp"

namespace hws {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

WeightSequence WeightSequence::poly_decay(double a) {
    if (!(a > 0.0)) throw domain_error("WeightSequence: poly decay exponent must be positive");
    WeightSequence w;
    w.kind_ = Kind::PolyDecay;
    w.param_ = a;
    return w;
}

WeightSequence WeightSequence::geometric(double c) {
    if (!(c > 0.0 && c < 1.0)) throw domain_error("WeightSequence: geometric ratio must be in (0,1)");
    WeightSequence w;
    w.kind_ = Kind::Geometric;
    w.param_ = c;
    return w;
}

WeightSequence WeightSequence::constant(double g) {
    if (!(g > 0.0 && g <= 1.0)) throw domain_error("WeightSequence: constant weight must be in (0,1]");
    WeightSequence w;
    w.kind_ = Kind::Constant;
    w.param_ = g;
    return w;
}

WeightSequence WeightSequence::explicit_seq(std::vector<double> prefix, double tail) {
    if (prefix.empty()) throw domain_error("WeightSequence: explicit prefix must be non-empty");
    double prev = 1.0;
    for (double g : prefix) {
        if (!(g > 0.0 && g <= prev))
            throw domain_error("WeightSequence: explicit prefix must be non-increasing in (0,1]");
        prev = g;
    }
    if (!(tail >= 0.0 && tail <= prefix.back()))
        throw domain_error("WeightSequence: tail must lie in [0, last prefix entry]");
    WeightSequence w;
    w.kind_ = Kind::Explicit;
    w.prefix_ = std::move(prefix);
    w.tail_ = tail;
    return w;
}

double WeightSequence::at(std::uint64_t j) const {
    if (j == 0) throw domain_error("WeightSequence: coordinate indices are 1-based");
    double base = 0.0;
    switch (kind_) {
        case Kind::PolyDecay: base = std::pow(static_cast<double>(j), -param_); break;
        case Kind::Geometric: base = std::pow(param_, static_cast<double>(j)); break;
        case Kind::Constant: base = param_; break;
        case Kind::Explicit:
            base = j <= prefix_.size() ? prefix_[j - 1] : tail_;
            break;
    }
    return scale_ * base;
}

WeightSequence WeightSequence::scaled(double c) const {
    if (!(c > 0.0 && c <= 1.0)) throw domain_error("WeightSequence: scale must be in (0,1]");
    WeightSequence w = *this;
    w.scale_ *= c;
    return w;
}

double WeightSequence::sum_exponent() const {
    // The constant scale factor never changes summability.
    switch (kind_) {
        case Kind::PolyDecay: return 1.0 / param_;
        case Kind::Geometric: return 0.0;
        case Kind::Constant: return kInf;
        case Kind::Explicit: return tail_ == 0.0 ? 0.0 : kInf;
    }
    return kInf;
}

double WeightSequence::infimum() const {
    switch (kind_) {
        case Kind::PolyDecay:
        case Kind::Geometric: return 0.0;
        case Kind::Constant: return scale_ * param_;
        case Kind::Explicit: return scale_ * tail_;
    }
    return 0.0;
}

bool WeightSequence::sum_converges() const {
    switch (kind_) {
        case Kind::PolyDecay: return param_ > 1.0;
        case Kind::Geometric: return true;
        case Kind::Constant: return false;
        case Kind::Explicit: return tail_ == 0.0;
    }
    return false;
}

double WeightSequence::log_average_limsup() const {
    switch (kind_) {
        case Kind::PolyDecay:
            if (param_ > 1.0) return 0.0;        // partial sums bounded
            if (param_ == 1.0) return scale_;    // sum_{j<=s} 1/j ~ ln s
            return kInf;                         // grows like s^{1-a}
        case Kind::Geometric: return 0.0;
        case Kind::Constant: return kInf;
        case Kind::Explicit: return tail_ == 0.0 ? 0.0 : kInf;
    }
    return kInf;
}

double WeightSequence::power_average_limit(double sigma) const {
    if (!(sigma > 0.0)) throw domain_error("WeightSequence: sigma must be positive");
    switch (kind_) {
        case Kind::PolyDecay:
            // Partial sums grow like s^{1-a} (a < 1), ln s (a = 1), or stay
            // bounded (a > 1); dividing by s^sigma kills everything except
            // s^{1-a} with sigma < 1 - a.
            if (param_ >= 1.0) return 0.0;
            if (sigma > 1.0 - param_) return 0.0;
            return kInf;
        case Kind::Geometric: return 0.0;
        case Kind::Constant:
            if (sigma < 1.0) return kInf;
            if (sigma == 1.0) return scale_ * param_;
            return 0.0;
        case Kind::Explicit:
            if (tail_ == 0.0) return 0.0;
            if (sigma < 1.0) return kInf;
            if (sigma == 1.0) return scale_ * tail_;
            return 0.0;
    }
    return kInf;
}

bool WeightSequence::power_average_vanishes_all() const {
    switch (kind_) {
        case Kind::PolyDecay: return param_ >= 1.0;  // partial sums O(ln s)
        case Kind::Geometric: return true;
        case Kind::Constant: return false;
        case Kind::Explicit: return tail_ == 0.0;
    }
    return false;
}

FourierWeights::FourierWeights(FourierFamily family, double alpha, WeightSequence weights)
    : family_(family), alpha_(alpha), weights_(std::move(weights)) {
    switch (family) {
        case FourierFamily::GaussianAnova:
        case FourierFamily::SobolevVariant:
            if (!(alpha >= 1.0) || alpha != std::floor(alpha))
                throw domain_error("FourierWeights: this family needs a positive integer alpha");
            break;
        case FourierFamily::KorobovType:
            if (!(alpha >= 1.0)) throw domain_error("FourierWeights: alpha must be >= 1");
            break;
        case FourierFamily::Exponential:
            throw domain_error("FourierWeights: use FourierWeights::exponential for this family");
    }
}

FourierWeights FourierWeights::exponential(double omega, WeightSequence weights) {
    if (!(omega > 0.0 && omega < 1.0))
        throw domain_error("FourierWeights: omega must be in (0,1)");
    FourierWeights f(FourierFamily::GaussianAnova, 1.0, std::move(weights));
    f.family_ = FourierFamily::Exponential;
    f.omega_ = omega;
    return f;
}

double FourierWeights::weight_1d_gamma(double gamma, std::uint32_t k) const {
    if (k == 0) return 1.0;
    switch (family_) {
        case FourierFamily::GaussianAnova: {
            const int a = alpha_int();
            // (k-alpha)!/k! and 1/k! as running products of at most alpha
            // integer factors; never a quotient of two factorials.
            double denom = 1.0;
            const std::uint32_t factors = k < static_cast<std::uint32_t>(a)
                                              ? k
                                              : static_cast<std::uint32_t>(a);
            for (std::uint32_t i = 0; i < factors; ++i)
                denom *= static_cast<double>(k - i);
            return gamma / denom;
        }
        case FourierFamily::KorobovType:
            return gamma * std::pow(static_cast<double>(k), -alpha_);
        case FourierFamily::SobolevVariant: {
            const int a = alpha_int();
            // beta_tau(k) = k (k-1) ... (k-tau+1), zero once tau > k.
            double beta_sum = 0.0;
            double beta = 1.0;
            for (int tau = 1; tau <= a && tau <= static_cast<int>(k); ++tau) {
                beta *= static_cast<double>(k - (tau - 1));
                beta_sum += beta;
            }
            return 1.0 / (1.0 + beta_sum / gamma);
        }
        case FourierFamily::Exponential:
            return gamma * std::pow(omega_, static_cast<double>(k));
    }
    return 0.0;
}

double FourierWeights::weight_1d(std::uint64_t j, std::uint32_t k) const {
    if (k == 0) return 1.0;
    return weight_1d_gamma(weights_.at(j), k);
}

double FourierWeights::weight(const MultiIndex& k) const {
    double prod = 1.0;
    for (const auto& [dim, kj] : k.entries()) prod *= weight_1d(dim, kj);
    return prod;
}

std::pair<double, double> decay_bounds(int alpha, double gamma, std::uint64_t k) {
    if (alpha < 1) throw domain_error("decay_bounds: alpha must be a positive integer");
    if (k == 0) throw domain_error("decay_bounds: k must be positive");
    // Integer powers kept exact so that the alpha = 1 case, where both bounds
    // coincide with the weight itself, matches it to the last bit.
    double k_pow = 1.0;
    double a_pow = 1.0;
    for (int i = 0; i < alpha; ++i) {
        k_pow *= static_cast<double>(k);
        a_pow *= static_cast<double>(alpha);
    }
    return {gamma / k_pow, gamma * a_pow / k_pow};
}

WeightSequence embedding_scaled_weights(const FourierWeights& spec) {
    double factor = 0.0;
    switch (spec.family()) {
        case FourierFamily::KorobovType:
            factor = std::pow(spec.alpha(), -spec.alpha());
            break;
        case FourierFamily::SobolevVariant:
            factor = 0.5 * std::pow(spec.alpha(), -spec.alpha());
            break;
        default:
            throw domain_error(
                "embedding_scaled_weights: only the KorobovType and SobolevVariant "
                "families embed into the GaussianAnova scale");
    }
    return spec.weights().scaled(factor);
}

} // namespace hws
