#ifndef HERMSPACE_VERIFY_HPP
#define HERMSPACE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hws {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

// Suites: "bounds", "kernels", "norms", "spectra" and "all" (their union).
// Checks are deterministic for a fixed seed.
std::vector<std::string> verify_suites();
bool is_verify_suite(const std::string& name);
std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);
std::string verify_summary_json(const std::string& suite, std::uint64_t seed,
                                const std::vector<CheckResult>& results, int indent = 2);

} // namespace hws

#endif
