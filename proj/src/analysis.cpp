#include "hermspace/analysis.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"

namespace hws {

double HermiteCoefficients::l2_norm() const {
    double acc = 0.0;
    for (const auto& [k, c] : values) acc += c * c;
    return std::sqrt(acc);
}

HermiteCoefficients hermite_coefficients(const std::function<double(std::span<const double>)>& f,
                                         std::uint32_t s, std::uint32_t degree_cap,
                                         int quad_points) {
    if (s == 0) throw domain_error("hermite_coefficients: dimension must be >= 1");
    // Exactness for coefficients of a polynomial of per-coordinate degree up
    // to degree_cap against H_k with k <= degree_cap needs 2n-1 >= 2*degree_cap.
    const int n = std::max(quad_points, static_cast<int>(degree_cap) + 1);
    if (static_cast<double>(std::pow(static_cast<double>(n), static_cast<double>(s))) > 2e8)
        throw domain_error("hermite_coefficients: quadrature budget exceeded");
    const QuadratureRule rule = gauss_hermite(n);

    // Per-dimension Hermite values at every node.
    std::vector<std::vector<double>> h_at_node(n);
    for (int i = 0; i < n; ++i) h_at_node[i] = hermite_eval_all(degree_cap, rule.nodes[i]);

    HermiteCoefficients out;
    out.s = s;

    std::vector<int> node_idx(s, 0);
    std::vector<double> point(s);
    std::vector<std::uint32_t> index(s, 0);

    // Tensor iteration over nodes, accumulating every coefficient in one pass.
    std::vector<double> coeff;
    const std::uint64_t n_indices =
        static_cast<std::uint64_t>(std::pow(static_cast<double>(degree_cap + 1),
                                            static_cast<double>(s)));
    coeff.assign(n_indices, 0.0);

    const std::uint64_t n_nodes =
        static_cast<std::uint64_t>(std::pow(static_cast<double>(n), static_cast<double>(s)));
    for (std::uint64_t node = 0; node < n_nodes; ++node) {
        std::uint64_t rem = node;
        double w = 1.0;
        for (std::uint32_t d = 0; d < s; ++d) {
            node_idx[d] = static_cast<int>(rem % n);
            rem /= n;
            point[d] = rule.nodes[node_idx[d]];
            w *= rule.weights[node_idx[d]];
        }
        const double fw = w * f(point);
        for (std::uint64_t ki = 0; ki < n_indices; ++ki) {
            std::uint64_t kr = ki;
            double h = 1.0;
            for (std::uint32_t d = 0; d < s; ++d) {
                h *= h_at_node[node_idx[d]][kr % (degree_cap + 1)];
                kr /= degree_cap + 1;
            }
            coeff[ki] += fw * h;
        }
    }

    for (std::uint64_t ki = 0; ki < n_indices; ++ki) {
        if (std::abs(coeff[ki]) < 1e-13) continue;
        std::uint64_t kr = ki;
        for (std::uint32_t d = 0; d < s; ++d) {
            index[d] = static_cast<std::uint32_t>(kr % (degree_cap + 1));
            kr /= degree_cap + 1;
        }
        out.values[MultiIndex(index)] = coeff[ki];
    }
    return out;
}

double norm_in_space(const HermiteCoefficients& coeffs, const SpaceSpec& space) {
    double acc = 0.0;
    for (const auto& [k, c] : coeffs.values) {
        if (k.max_dimension() > space.s)
            throw domain_error("norm_in_space: coefficient support exceeds space dimension");
        acc += c * c / space.fw.weight(k);
    }
    return std::sqrt(acc);
}

double sobolev_norm_1d(const std::vector<std::function<double(double)>>& f_and_derivatives,
                       int alpha, double gamma, const QuadratureRule& quad) {
    if (alpha < 1) throw domain_error("sobolev_norm_1d: alpha must be a positive integer");
    if (f_and_derivatives.size() != static_cast<std::size_t>(alpha) + 1)
        throw domain_error("sobolev_norm_1d: need f together with its first alpha derivatives");
    const double mean = quad.integrate(f_and_derivatives[0]);
    double norm2 = mean * mean;
    for (int tau = 1; tau < alpha; ++tau) {
        const double m = quad.integrate(f_and_derivatives[tau]);
        norm2 += m * m / gamma;
    }
    const auto& top = f_and_derivatives[alpha];
    norm2 += quad.integrate([&](double t) { return top(t) * top(t); }) / gamma;
    return std::sqrt(norm2);
}

SpectralTruncation spectral_truncation(const HermiteCoefficients& coeffs, const SpaceSpec& space,
                                       std::size_t n) {
    SpectralTruncation out;
    out.retained.s = coeffs.s;

    EigenvalueStream stream(space);
    std::map<MultiIndex, double> remaining = coeffs.values;
    for (std::size_t i = 0; i < n; ++i) {
        const auto entry = stream.next();
        auto it = remaining.find(entry.index);
        if (it != remaining.end()) {
            out.retained.values.insert(*it);
            remaining.erase(it);
        }
    }
    double dropped = 0.0;
    for (const auto& [k, c] : remaining) dropped += c * c;
    out.l2_error = std::sqrt(dropped);
    return out;
}

CubatureRule parse_rule_csv(const std::string& text, std::uint32_t s) {
    CubatureRule rule;
    rule.s = s;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // skip blank lines
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != static_cast<std::size_t>(s) + 1)
            throw schema_error("rule CSV line " + std::to_string(line_no) + ": expected " +
                               std::to_string(s + 1) + " columns, found " +
                               std::to_string(fields.size()));
        if (!saw_header) {
            saw_header = true;  // header row: column names, not parsed as numbers
            continue;
        }
        std::vector<double> row(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const char* begin = fields[i].c_str();
            char* end = nullptr;
            row[i] = std::strtod(begin, &end);
            while (end && (*end == ' ' || *end == '\t')) ++end;
            if (end == begin || (end && *end != '\0'))
                throw schema_error("rule CSV line " + std::to_string(line_no) + ": field " +
                                   std::to_string(i + 1) + " is not a number");
        }
        rule.weights.push_back(row[0]);
        rule.nodes.emplace_back(row.begin() + 1, row.end());
    }
    return rule;
}

std::string rule_to_csv(const CubatureRule& rule) {
    std::ostringstream out;
    out.precision(17);
    out << "w";
    for (std::uint32_t d = 1; d <= rule.s; ++d) out << ",x" << d;
    out << "\n";
    for (std::size_t i = 0; i < rule.size(); ++i) {
        out << rule.weights[i];
        for (double c : rule.nodes[i]) out << "," << c;
        out << "\n";
    }
    return out.str();
}

WceResult wce_integration(const SpaceSpec& space, const CubatureRule& rule,
                          const KernelEvalOptions& opts) {
    if (rule.s != space.s)
        throw domain_error("wce_integration: rule dimension must match the space");
    const std::size_t n = rule.size();

    const bool mehler_path = space.fw.family() == FourierFamily::Exponential;
    auto kernel = [&](std::span<const double> a, std::span<const double> b) {
        if (mehler_path)
            return kernel_mehler(space.fw.omega(), space.fw.weights(), space.s, a, b);
        return kernel_series(space, a, b, opts).value;
    };

    // e^2 = 1 - 2 sum w_i + sum_{i,l} w_i w_l K(x_i, x_l); the Gram part
    // reuses the symmetry of K so each node pair is evaluated once.
    double weight_sum = 0.0;
    for (double w : rule.weights) weight_sum += w;
    double gram = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        gram += rule.weights[i] * rule.weights[i] * kernel(rule.nodes[i], rule.nodes[i]);
        for (std::size_t l = i + 1; l < n; ++l)
            gram += 2.0 * rule.weights[i] * rule.weights[l] * kernel(rule.nodes[i], rule.nodes[l]);
    }

    WceResult out;
    out.raw_squared = 1.0 - 2.0 * weight_sum + gram;
    out.wce = std::sqrt(std::max(0.0, out.raw_squared));
    return out;
}

namespace {

double prod_one_plus_gamma_c(double omega, const WeightSequence& weights, std::uint32_t s) {
    if (!(omega > 0.0 && omega < 1.0))
        throw domain_error("wce_lower_bound: omega must be in (0,1)");
    const double root = std::sqrt((1.0 - omega) * (1.0 + omega));
    const double c_omega = (1.0 - root) / root;
    double prod = 1.0;
    for (std::uint32_t j = 1; j <= s; ++j) prod *= 1.0 + weights.at(j) * c_omega;
    return prod;
}

double suitable_omega(int alpha) {
    if (alpha < 1) throw domain_error("wce_lower_bound: alpha must be a positive integer");
    // largest geometric base with omega^k <= k^{-alpha} for all k
    return std::pow(3.0, -static_cast<double>(alpha) / 3.0);
}

double bound_from_prod(double prod, std::uint64_t n) {
    const double bound2 = 1.0 - static_cast<double>(n) / prod;
    return std::sqrt(std::max(0.0, bound2));
}

} // namespace

double wce_lower_bound(int alpha, const WeightSequence& weights, std::uint32_t s,
                       std::uint64_t n) {
    return bound_from_prod(prod_one_plus_gamma_c(suitable_omega(alpha), weights, s), n);
}

double wce_lower_bound_exponential(double omega, const WeightSequence& weights, std::uint32_t s,
                                   std::uint64_t n) {
    return bound_from_prod(prod_one_plus_gamma_c(omega, weights, s), n);
}

double wce_lower_bound_for_space(const SpaceSpec& space, std::uint64_t n) {
    const FourierWeights& fw = space.fw;
    switch (fw.family()) {
        case FourierFamily::Exponential:
            return wce_lower_bound_exponential(fw.omega(), fw.weights(), space.s, n);
        case FourierFamily::GaussianAnova:
        case FourierFamily::KorobovType: {
            // k^{-alpha} >= omega^k holds for real alpha >= 1 as well
            const double omega = std::pow(3.0, -fw.alpha() / 3.0);
            return wce_lower_bound_exponential(omega, fw.weights(), space.s, n);
        }
        case FourierFamily::SobolevVariant: {
            // the bound transfers through the norm domination by the
            // GaussianAnova space with weights gamma/(2 alpha^alpha)
            const double omega = std::pow(3.0, -fw.alpha() / 3.0);
            return wce_lower_bound_exponential(omega, embedding_scaled_weights(fw), space.s, n);
        }
    }
    throw domain_error("wce_lower_bound_for_space: unknown family");
}

double min_nodes_lower_bound(int alpha, const WeightSequence& weights, std::uint32_t s,
                             double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("min_nodes_lower_bound: epsilon must be in (0,1)");
    return (1.0 - epsilon * epsilon) *
           prod_one_plus_gamma_c(suitable_omega(alpha), weights, s);
}

} // namespace hws
