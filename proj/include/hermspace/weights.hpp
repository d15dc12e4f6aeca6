#ifndef HERMSPACE_WEIGHTS_HPP
#define HERMSPACE_WEIGHTS_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "hermspace/multi_index.hpp"

namespace hws {

// Non-increasing product weights 1 >= gamma_1 >= gamma_2 >= ... > 0.
// An explicit sequence carries a constant tail so that quantities over the
// full infinite sequence (sum exponent, infimum) stay well defined; tail 0
// encodes finite effective dimension.
class WeightSequence {
public:
    enum class Kind { PolyDecay, Geometric, Constant, Explicit };

    static WeightSequence poly_decay(double a);          // gamma_j = j^{-a}, a > 0
    static WeightSequence geometric(double c);           // gamma_j = c^j, c in (0,1)
    static WeightSequence constant(double g);            // gamma_j = g, g in (0,1]
    static WeightSequence explicit_seq(std::vector<double> prefix, double tail);

    Kind kind() const { return kind_; }
    double param() const { return param_; }
    const std::vector<double>& prefix() const { return prefix_; }
    double tail() const { return tail_; }
    double scale() const { return scale_; }

    // gamma_j for j >= 1 (includes the scale factor).
    double at(std::uint64_t j) const;

    // Copy with all weights multiplied by c in (0, 1].
    WeightSequence scaled(double c) const;

    // Sum exponent s_gamma = inf{kappa > 0 : sum_j gamma_j^kappa < infty};
    // +infinity when no power is summable.
    double sum_exponent() const;

    // gamma_I = inf_j gamma_j.
    double infimum() const;

    // Whether sum_j gamma_j converges.
    bool sum_converges() const;

    // limsup_{s->infty} (1/ln s) sum_{j<=s} gamma_j  (+infinity if unbounded).
    double log_average_limsup() const;

    // lim_{s->infty} (1/s^sigma) sum_{j<=s} gamma_j for sigma in (0,1];
    // +infinity when the limit diverges.
    double power_average_limit(double sigma) const;

    // Whether (1/s^sigma) sum_{j<=s} gamma_j -> 0 for every sigma in (0,1].
    bool power_average_vanishes_all() const;

    friend bool operator==(const WeightSequence& a, const WeightSequence& b) {
        return a.kind_ == b.kind_ && a.param_ == b.param_ && a.prefix_ == b.prefix_ &&
               a.tail_ == b.tail_ && a.scale_ == b.scale_;
    }

private:
    WeightSequence() = default;

    Kind kind_ = Kind::Constant;
    double param_ = 1.0;          // a, c, or g depending on kind
    std::vector<double> prefix_;  // Explicit only
    double tail_ = 0.0;           // Explicit only
    double scale_ = 1.0;
};

enum class FourierFamily { GaussianAnova, KorobovType, SobolevVariant, Exponential };

// A family of one-dimensional Fourier weights together with coordinate
// weights: the smoothness alpha (integer for GaussianAnova/SobolevVariant,
// real >= 1 for KorobovType) and, for the Exponential family, the base omega.
class FourierWeights {
public:
    FourierWeights(FourierFamily family, double alpha, WeightSequence weights);
    static FourierWeights exponential(double omega, WeightSequence weights);

    FourierFamily family() const { return family_; }
    double alpha() const { return alpha_; }
    int alpha_int() const { return static_cast<int>(alpha_); }
    double omega() const { return omega_; }
    const WeightSequence& weights() const { return weights_; }

    // One-dimensional weight for coordinate j >= 1 at frequency k >= 0.
    // Always 1 at k = 0 and contained in (0, 1] elsewhere.
    double weight_1d(std::uint64_t j, std::uint32_t k) const;

    // Same with an explicit generic gamma instead of gamma_j.
    double weight_1d_gamma(double gamma, std::uint32_t k) const;

    // Product weight R(k) over the support of the multi-index.
    double weight(const MultiIndex& k) const;

    FourierWeights with_weights(WeightSequence w) const {
        FourierWeights c = *this;
        c.weights_ = std::move(w);
        return c;
    }

private:
    FourierFamily family_;
    double alpha_ = 1.0;
    double omega_ = 0.0;
    WeightSequence weights_;
};

// Bounds gamma/k^alpha <= r_{alpha,gamma}(k) <= gamma (alpha/k)^alpha on the
// decay of the GaussianAnova weight, for integer alpha >= 1 and k >= 1.
std::pair<double, double> decay_bounds(int alpha, double gamma, std::uint64_t k);

// Weight sequence of the GaussianAnova space that dominates the given
// KorobovType (gamma/alpha^alpha) or SobolevVariant (gamma/(2 alpha^alpha))
// space, in the sense that the scaled-space norm dominates the original norm.
WeightSequence embedding_scaled_weights(const FourierWeights& spec);

} // namespace hws

#endif
