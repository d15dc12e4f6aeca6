#ifndef HERMSPACE_SPECTRA_HPP
#define HERMSPACE_SPECTRA_HPP

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "hermspace/bigcount.hpp"
#include "hermspace/weights.hpp"

namespace hws {

// A weighted Hermite space in dimension s.  The approximation operator of the
// space is diagonal in the Hermite basis with eigenvalues {R(k) : k in N_0^s},
// so every spectral quantity below reduces to the Fourier weights.
struct SpaceSpec {
    FourierWeights fw;
    std::uint32_t s = 1;

    SpaceSpec(FourierWeights f, std::uint32_t dim) : fw(std::move(f)), s(dim) {
        if (dim == 0) throw domain_error("SpaceSpec: dimension must be >= 1");
    }
};

struct ComplexityReport {
    double epsilon = 0.0;
    BigCount count;
    bool has_bound = false;
    double zeta_bound = 0.0;
    double q_used = 0.0;
};

// Exact |A(eps, s)| = #{k : R(k) > eps^2}, the information complexity of
// L2-approximation under arbitrary linear information.  Membership uses the
// strict comparison R(k) > eps^2; `tolerance` (default 0) widens it to
// R(k) > eps^2 (1 - tolerance) for floating-point robustness studies.
BigCount count_large_eigenvalues(const SpaceSpec& space, double epsilon, double tolerance = 0.0);

// Upper bound eps^{-2q} prod_j (1 + alpha^{alpha q} zeta(alpha q) gamma_j^q)
// on |A(eps, s)| for the GaussianAnova family; requires q > 1/alpha.
// Evaluated in log space; returns +infinity if it overflows.
double zeta_bound_on_count(const SpaceSpec& space, double epsilon, double q);

// Count plus, for the GaussianAnova family, the zeta-function bound.  With no
// q given a default q = max(1, 1.5/alpha) is used; the bound always dominates
// the count.
ComplexityReport complexity_report(const SpaceSpec& space, double epsilon,
                                   std::optional<double> q = std::nullopt);

// Lazy non-increasing stream of eigenvalues with their multi-indices.
// Best-first search over the product lattice; a popped index spawns the
// duplicate-free canonical successors (increment dimension j only when every
// dimension beyond j is zero).  Ties are ordered lexicographically.
class EigenvalueStream {
public:
    struct Entry {
        double value;
        MultiIndex index;
    };

    explicit EigenvalueStream(const SpaceSpec& space);

    // Next largest eigenvalue; the stream is infinite.
    Entry next();

private:
    struct Node {
        double value;
        std::vector<std::uint32_t> index;  // dense
        bool operator<(const Node& other) const {
            if (value != other.value) return value < other.value;
            // std::priority_queue pops the max; make the lexicographically
            // smaller index win ties.
            return other.index < index;
        }
    };

    const SpaceSpec space_;
    std::priority_queue<Node> heap_;
};

// First n+1 eigenvalues in non-increasing order.
std::vector<double> leading_eigenvalues(const SpaceSpec& space, std::size_t count);

// n-th minimal worst-case error of L2-approximation under linear information:
// e(n) = sqrt(lambda_{n+1}).  e(0) = 1 is the initial error.
double nth_minimal_error(const SpaceSpec& space, std::uint64_t n);

// One-dimensional eigenvalue sum T(alpha) = sum_{1<=k<alpha} 1/k! +
// sum_{k>=alpha} (k-alpha)!/k!, finite iff alpha >= 2.
double anova_eigenvalue_sum(int alpha);

// Trace of the approximation operator, prod_j (1 + gamma_j T(alpha)).
// Throws divergence_error for alpha = 1 where the trace is infinite.
double trace(const SpaceSpec& space);

// prod_j (1 + sum_{k>=1} w_j(k)^tau); finite iff tau > 1/alpha.  GaussianAnova
// and KorobovType families.
double spt_criterion_sum(const SpaceSpec& space, double tau);

// (1/s^2) (sum_j lambda_{s,j}^{tau (1+ln s)})^{1/tau}, the quasi-polynomial
// tractability criterion; requires tau (1 + ln s) > 1/alpha.
double qpt_criterion_value(const SpaceSpec& space, double tau);

} // namespace hws

#endif
