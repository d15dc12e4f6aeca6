#ifndef HERMSPACE_ANALYSIS_HPP
#define HERMSPACE_ANALYSIS_HPP

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hermspace/kernels.hpp"
#include "hermspace/quadrature.hpp"
#include "hermspace/spectra.hpp"

namespace hws {

// Finitely supported Hermite expansion of a function on R^s.
struct HermiteCoefficients {
    std::uint32_t s = 1;
    std::map<MultiIndex, double> values;

    double l2_norm() const;
};

// Computes the Hermite coefficients f^(k) = int f H_k phi_s by tensorized
// Gauss-Hermite quadrature over all indices with entries <= degree_cap.
// Exact for polynomials of per-coordinate degree <= degree_cap; coefficients
// below 1e-13 in magnitude are dropped.
HermiteCoefficients hermite_coefficients(const std::function<double(std::span<const double>)>& f,
                                         std::uint32_t s, std::uint32_t degree_cap,
                                         int quad_points = 0);

// Norm in the space: sqrt(sum_k f^(k)^2 / R(k)).
double norm_in_space(const HermiteCoefficients& coeffs, const SpaceSpec& space);

// One-dimensional Sobolev-type route to the same norm for the GaussianAnova
// family: the caller supplies f and its first alpha derivatives (exact for
// polynomials), and the formula
//   ||f||^2 = (int f phi)^2 + (1/gamma) sum_{tau<alpha} (int f^(tau) phi)^2
//           + (1/gamma) int (f^(alpha))^2 phi
// is evaluated by quadrature.
double sobolev_norm_1d(const std::vector<std::function<double(double)>>& f_and_derivatives,
                       int alpha, double gamma, const QuadratureRule& quad);

struct SpectralTruncation {
    HermiteCoefficients retained;
    double l2_error = 0.0;  // sqrt(sum of squared dropped coefficients)
};

// Keeps the coefficients on the n multi-indices with the largest Fourier
// weights (deterministic stream order); the L2 error of the truncation is
// Parseval's square root of the dropped mass.
SpectralTruncation spectral_truncation(const HermiteCoefficients& coeffs, const SpaceSpec& space,
                                       std::size_t n);

// Cubature rule: nodes in R^s with real weights.
struct CubatureRule {
    std::uint32_t s = 1;
    std::vector<std::vector<double>> nodes;
    std::vector<double> weights;

    bool nonneg() const {
        for (double w : weights)
            if (w < 0.0) return false;
        return true;
    }
    std::size_t size() const { return weights.size(); }
};

// Parses the rule CSV: a header row, then one row per node "w,x_1,...,x_s".
// Strict column-count validation; errors carry 1-based line numbers.
CubatureRule parse_rule_csv(const std::string& text, std::uint32_t s);
std::string rule_to_csv(const CubatureRule& rule);

struct WceResult {
    double wce = 0.0;
    double raw_squared = 0.0;  // before clamping round-off to zero
};

// Worst-case integration error of the rule in the space:
//   e^2 = 1 - 2 sum_i w_i + sum_{i,l} w_i w_l K(x_i, x_l),
// clamped at zero against round-off.  Exponential spaces use the closed
// Mehler kernel; the other families go through the series kernel.
WceResult wce_integration(const SpaceSpec& space, const CubatureRule& rule,
                          const KernelEvalOptions& opts = {});

// Lower bound sqrt(max(0, 1 - n / prod_j (1 + gamma_j c_omega))) on the
// worst-case error of any n-point rule with non-negative weights, where
// omega = 3^{-alpha/3} and c_omega = (1 - sqrt(1-omega^2))/sqrt(1-omega^2).
double wce_lower_bound(int alpha, const WeightSequence& weights, std::uint32_t s,
                       std::uint64_t n);

// Same bound with the geometric base passed directly (the derivation lives
// entirely inside the exponential-weight space).
double wce_lower_bound_exponential(double omega, const WeightSequence& weights, std::uint32_t s,
                                   std::uint64_t n);

// Non-negative-rule lower bound appropriate to the given space: direct for
// GaussianAnova/KorobovType (omega = 3^{-alpha/3}), through the embedding
// scaling gamma/(2 alpha^alpha) for SobolevVariant, and with the space's own
// omega for the Exponential family.
double wce_lower_bound_for_space(const SpaceSpec& space, std::uint64_t n);

// Companion bound n >= (1 - eps^2) prod_j (1 + gamma_j c_omega) on the number
// of nodes any non-negative rule needs to reach error eps.
double min_nodes_lower_bound(int alpha, const WeightSequence& weights, std::uint32_t s,
                             double epsilon);

} // namespace hws

#endif
