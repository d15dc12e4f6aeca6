#ifndef HERMSPACE_HERMITE_HPP
#define HERMSPACE_HERMITE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hermspace/multi_index.hpp"

namespace hws {

// Orthonormal probabilists' Hermite polynomial H_k(x), normalized so that
// int H_j H_k dPhi = delta_jk with Phi the standard normal measure.
// H_0 = 1, H_1(x) = x, H_2(x) = (x^2 - 1)/sqrt(2), ...
double hermite_eval(std::uint32_t k, double x);

// All values H_0(x), ..., H_n(x) in one recurrence pass.
std::vector<double> hermite_eval_all(std::uint32_t n, double x);

// Product H_k(x) = prod_j H_{k_j}(x_j).  Dimensions absent from k contribute
// the factor H_0 = 1.  Throws if k has support beyond x's length.
double hermite_eval_multi(const MultiIndex& k, std::span<const double> x);

// Standard normal density and CDF.
double normal_pdf(double x);
double normal_cdf(double y);

// Riemann zeta(x) for x > 1, absolute accuracy well below 1e-12.
double riemann_zeta(double x);

} // namespace hws

#endif
