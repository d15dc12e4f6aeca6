// hws - command line front end for the hermspace shared library.
//
// Subcommands: complexity, error-curve, tractability, wce, verify.
// Exit codes: 0 ok, 1 verification failure, 2 schema error, 3 domain error,
// 4 unsupported combination.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermspace.h"

namespace {

constexpr int kExitInternal = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << content;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct SpaceHandle {
    hws_space* ptr = nullptr;
    ~SpaceHandle() { hws_space_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { hws_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int fail(hws_status status) {
    std::cerr << "error: " << hws_last_error() << "\n";
    return static_cast<int>(status);
}

int load_space(const std::string& spec_path, SpaceHandle& space) {
    std::string text;
    try {
        text = read_file(spec_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const hws_status st = hws_space_from_json(text.c_str(), &space.ptr);
    if (st != HWS_OK) return fail(st);
    return 0;
}

std::vector<double> make_eps_grid(double lo, double hi, int count) {
    std::vector<double> eps(count);
    for (int i = 0; i < count; ++i) {
        const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        eps[i] = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
    }
    return eps;
}

int cmd_complexity(const std::string& spec_path, const std::vector<double>& eps_list,
                   const std::vector<double>& eps_grid, double q, const std::string& out_path,
                   const std::string& format) {
    SpaceHandle space;
    if (int rc = load_space(spec_path, space)) return rc;

    std::vector<double> eps = eps_list;
    if (!eps_grid.empty()) {
        const auto count = static_cast<int>(eps_grid[2]);
        if (count < 1 || eps_grid[0] <= 0.0 || eps_grid[1] <= 0.0) {
            std::cerr << "error: --eps-grid needs MIN > 0, MAX > 0, COUNT >= 1\n";
            return 3;
        }
        eps = make_eps_grid(eps_grid[0], eps_grid[1], count);
    }
    if (eps.empty()) {
        std::cerr << "error: provide --eps or --eps-grid\n";
        return 3;
    }

    std::ostringstream csv, json;
    csv << "epsilon,count,zeta_bound\n";
    json << "[\n";
    for (std::size_t i = 0; i < eps.size(); ++i) {
        StringHandle count;
        const hws_status st = hws_count_eigenvalues(space.ptr, eps[i], &count.ptr);
        if (st != HWS_OK) return fail(st);
        double bound = 0.0;
        const bool has_bound = hws_count_zeta_bound(space.ptr, eps[i], q, &bound) == HWS_OK;

        csv << fmt_double(eps[i]) << "," << count.str() << ",";
        if (has_bound) csv << fmt_double(bound);
        csv << "\n";

        json << "  {\"epsilon\": " << fmt_double(eps[i]) << ", \"count\": " << count.str();
        if (has_bound) json << ", \"zeta_bound\": " << fmt_double(bound);
        json << "}" << (i + 1 < eps.size() ? "," : "") << "\n";
    }
    json << "]\n";

    try {
        write_output(out_path, format == "json" ? json.str() : csv.str());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}

int cmd_error_curve(const std::string& spec_path, long n_max, const std::string& out_path,
                    const std::string& format) {
    SpaceHandle space;
    if (int rc = load_space(spec_path, space)) return rc;
    if (n_max < 0) {
        std::cerr << "error: --nmax must be non-negative\n";
        return 3;
    }
    std::vector<double> errors(static_cast<std::size_t>(n_max) + 1);
    const hws_status st = hws_minimal_errors(space.ptr, n_max, errors.data());
    if (st != HWS_OK) return fail(st);

    std::ostringstream csv, json;
    csv << "n,error\n";
    json << "[\n";
    for (long n = 0; n <= n_max; ++n) {
        csv << n << "," << fmt_double(errors[static_cast<std::size_t>(n)]) << "\n";
        json << "  {\"n\": " << n
             << ", \"error\": " << fmt_double(errors[static_cast<std::size_t>(n)]) << "}"
             << (n < n_max ? "," : "") << "\n";
    }
    json << "]\n";
    try {
        write_output(out_path, format == "json" ? json.str() : csv.str());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}

int cmd_tractability(const std::string& spec_path, const std::string& info_class,
                     const std::string& problem, bool with_sigma_tau, double sigma, double tau,
                     const std::string& out_path) {
    SpaceHandle space;
    if (int rc = load_space(spec_path, space)) return rc;
    StringHandle report;
    const hws_status st =
        hws_tractability_json(space.ptr, info_class.c_str(), problem.c_str(),
                              with_sigma_tau ? 1 : 0, sigma, tau, &report.ptr);
    if (st != HWS_OK && st != HWS_ERROR_UNSUPPORTED) return fail(st);
    try {
        write_output(out_path, report.str() + "\n");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    if (st == HWS_ERROR_UNSUPPORTED) {
        std::cerr << "error: " << hws_last_error() << "\n";
        return 4;
    }
    return 0;
}

int cmd_wce(const std::string& spec_path, const std::string& rule_path,
            const std::string& out_path) {
    SpaceHandle space;
    if (int rc = load_space(spec_path, space)) return rc;
    std::string rule_text;
    try {
        rule_text = read_file(rule_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    StringHandle report;
    const hws_status st = hws_wce_from_csv(space.ptr, rule_text.c_str(), &report.ptr);
    if (st != HWS_OK) return fail(st);
    try {
        write_output(out_path, report.str() + "\n");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}

int cmd_verify(const std::string& suite, unsigned long seed, const std::string& out_path) {
    StringHandle summary;
    const hws_status st = hws_verify(suite.c_str(), seed, &summary.ptr);
    if (st != HWS_OK && st != HWS_ERROR_VERIFY) return fail(st);
    try {
        write_output(out_path, summary.str() + "\n");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    if (st == HWS_ERROR_VERIFY) {
        std::cerr << "verification failed\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Hermite spaces: complexity, error curves, kernels, tractability"};
    app.set_version_flag("--version", hws_version());
    app.require_subcommand(1);

    std::string spec_path, out_path, rule_path;
    std::string format = "csv";
    std::string info_class = "all";
    std::string problem = "app";
    std::vector<double> eps_list, eps_grid;
    double q = 0.0;  // 0 = library default
    long n_max = 0;
    double sigma = 0.0, tau = 0.0;
    unsigned long seed = 12345;
    std::string suite = "all";

    auto* complexity = app.add_subcommand(
        "complexity", "information complexity n(eps) with the zeta-function bound");
    complexity->add_option("--spec", spec_path, "space spec JSON file")->required();
    auto* eps_opt = complexity->add_option("--eps", eps_list, "epsilon values in (0,1)")
                        ->delimiter(',');
    complexity->add_option("--eps-grid", eps_grid, "log-spaced grid: MIN MAX COUNT")
        ->expected(3)
        ->excludes(eps_opt);
    complexity->add_option("--q", q, "exponent for the zeta bound (default max(1, 1.5/alpha))");
    complexity->add_option("--out", out_path, "output file (default stdout)");
    complexity->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* curve = app.add_subcommand("error-curve", "n-th minimal errors e(n), n = 0..nmax");
    curve->add_option("--spec", spec_path, "space spec JSON file")->required();
    curve->add_option("--nmax", n_max, "largest n")->required();
    curve->add_option("--out", out_path, "output file (default stdout)");
    curve->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    auto* tract = app.add_subcommand("tractability", "per-notion tractability report");
    tract->add_option("--spec", spec_path, "space spec JSON file")->required();
    tract->add_option("--class", info_class, "information class: all|std")
        ->check(CLI::IsMember({"all", "std"}));
    tract->add_option("--problem", problem, "app|int|anchored|int-nonneg")
        ->check(CLI::IsMember({"app", "int", "anchored", "int-nonneg"}));
    auto* sigma_opt = tract->add_option("--sigma", sigma, "sigma for (sigma,tau)-WT");
    auto* tau_opt = tract->add_option("--tau", tau, "tau for (sigma,tau)-WT");
    sigma_opt->needs(tau_opt);
    tau_opt->needs(sigma_opt);
    tract->add_option("--out", out_path, "output file (default stdout)");

    auto* wce = app.add_subcommand("wce", "worst-case integration error of a cubature rule");
    wce->add_option("--spec", spec_path, "space spec JSON file")->required();
    wce->add_option("--rule", rule_path, "rule CSV file: header, then w,x_1,...,x_s")->required();
    wce->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "bounds|kernels|norms|spectra|all")
        ->check(CLI::IsMember({"bounds", "kernels", "norms", "spectra", "all"}));
    verify->add_option("--seed", seed, "random seed (checks are deterministic per seed)");
    verify->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (complexity->parsed())
            return cmd_complexity(spec_path, eps_list, eps_grid, q, out_path, format);
        if (curve->parsed()) return cmd_error_curve(spec_path, n_max, out_path, format);
        if (tract->parsed())
            return cmd_tractability(spec_path, info_class, problem, sigma_opt->count() > 0,
                                    sigma, tau, out_path);
        if (wce->parsed()) return cmd_wce(spec_path, rule_path, out_path);
        if (verify->parsed()) return cmd_verify(suite, seed, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitInternal;
}
