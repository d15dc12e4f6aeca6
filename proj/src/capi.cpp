#include "hermspace.h"

#include <cmath>
#include <cstring>
#include <string>

#include "hermspace/analysis.hpp"
#include "hermspace/errors.hpp"
#include "hermspace/jsonio.hpp"
#include "hermspace/kernels.hpp"
#include "hermspace/spectra.hpp"
#include "hermspace/tractability.hpp"
#include "hermspace/verify.hpp"

struct hws_space {
    hws::SpaceSpec spec;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Maps C++ exceptions onto status codes and records the message.
template <typename Fn>
hws_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const hws::schema_error& e) {
        g_last_error = e.what();
        return HWS_ERROR_SCHEMA;
    } catch (const hws::unsupported_error& e) {
        g_last_error = e.what();
        return HWS_ERROR_UNSUPPORTED;
    } catch (const hws::domain_error& e) {
        g_last_error = e.what();
        return HWS_ERROR_DOMAIN;
    } catch (const hws::convergence_error& e) {
        g_last_error = e.what();
        return HWS_ERROR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HWS_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return HWS_ERROR_INTERNAL;
    }
}

hws_status require(bool ok, const char* message) {
    if (ok) return HWS_OK;
    g_last_error = message;
    return HWS_ERROR_DOMAIN;
}

} // namespace

extern "C" {

const char* hws_version(void) { return "1.0.0"; }

const char* hws_last_error(void) { return g_last_error.c_str(); }

void hws_string_free(char* s) { delete[] s; }

hws_status hws_space_from_json(const char* json_text, hws_space** out) {
    if (hws_status st = require(json_text && out, "null argument")) return st;
    return guarded([&] {
        *out = new hws_space{hws::parse_space_spec(json_text)};
        return HWS_OK;
    });
}

void hws_space_free(hws_space* space) { delete space; }

hws_status hws_space_to_json(const hws_space* space, char** json_out) {
    if (hws_status st = require(space && json_out, "null argument")) return st;
    return guarded([&] {
        *json_out = dup_string(hws::space_spec_to_json(space->spec));
        return HWS_OK;
    });
}

int hws_space_dimension(const hws_space* space) {
    return space ? static_cast<int>(space->spec.s) : 0;
}

hws_status hws_count_eigenvalues(const hws_space* space, double epsilon, char** count_decimal) {
    if (hws_status st = require(space && count_decimal, "null argument")) return st;
    return guarded([&] {
        const hws::BigCount count = hws::count_large_eigenvalues(space->spec, epsilon);
        *count_decimal = dup_string(count.str());
        return HWS_OK;
    });
}

hws_status hws_count_zeta_bound(const hws_space* space, double epsilon, double q, double* bound) {
    if (hws_status st = require(space && bound, "null argument")) return st;
    return guarded([&] {
        double q_eff = q;
        if (q_eff <= 0.0) q_eff = std::max(1.0, 1.5 / space->spec.fw.alpha());
        *bound = hws::zeta_bound_on_count(space->spec, epsilon, q_eff);
        return HWS_OK;
    });
}

hws_status hws_minimal_errors(const hws_space* space, long n_max, double* out) {
    if (hws_status st = require(space && out && n_max >= 0, "need a non-negative n_max")) return st;
    return guarded([&] {
        const auto values =
            hws::leading_eigenvalues(space->spec, static_cast<std::size_t>(n_max) + 1);
        for (long n = 0; n <= n_max; ++n) out[n] = std::sqrt(values[static_cast<std::size_t>(n)]);
        return HWS_OK;
    });
}

hws_status hws_trace(const hws_space* space, double* out) {
    if (hws_status st = require(space && out, "null argument")) return st;
    return guarded([&] {
        *out = hws::trace(space->spec);
        return HWS_OK;
    });
}

hws_status hws_kernel(const hws_space* space, const double* x, const double* y, double* value) {
    if (hws_status st = require(space && x && y && value, "null argument")) return st;
    return guarded([&] {
        const std::size_t s = space->spec.s;
        if (space->spec.fw.family() == hws::FourierFamily::Exponential) {
            *value = hws::kernel_mehler(space->spec.fw.omega(), space->spec.fw.weights(),
                                        space->spec.s, {x, s}, {y, s});
        } else {
            *value = hws::kernel_series(space->spec, {x, s}, {y, s}).value;
        }
        return HWS_OK;
    });
}

hws_status hws_tractability_json(const hws_space* space, const char* info_class,
                                 const char* problem, int with_sigma_tau, double sigma, double tau,
                                 char** json_out) {
    if (hws_status st = require(space && info_class && problem && json_out, "null argument"))
        return st;
    return guarded([&]() -> hws_status {
        const std::string cls(info_class);
        const std::string prob(problem);
        hws::InfoClass ic;
        if (cls == "all") ic = hws::InfoClass::All;
        else if (cls == "std") ic = hws::InfoClass::Std;
        else throw hws::schema_error("info class must be \"all\" or \"std\"");

        hws::ProblemKind pk;
        if (prob == "app") pk = hws::ProblemKind::Approximation;
        else if (prob == "int") pk = hws::ProblemKind::Integration;
        else if (prob == "anchored") pk = hws::ProblemKind::AnchoredIntegration;
        else if (prob == "int-nonneg") pk = hws::ProblemKind::IntegrationNonnegRules;
        else throw hws::schema_error("problem must be app, int, anchored or int-nonneg");

        std::optional<hws::SigmaTauRequest> st_req;
        if (with_sigma_tau) {
            if (!(sigma > 0.0) || !(tau > 0.0))
                throw hws::domain_error("sigma and tau must be positive");
            st_req = hws::SigmaTauRequest{sigma, tau};
        }
        const auto report =
            hws::tractability_report(space->spec.fw.weights(), space->spec.fw.alpha(),
                                     space->spec.fw.family(), ic, pk, st_req);
        *json_out = dup_string(hws::report_to_json(report));
        if (!report.supported) {
            g_last_error = report.note;
            return HWS_ERROR_UNSUPPORTED;
        }
        return HWS_OK;
    });
}

hws_status hws_wce_from_csv(const hws_space* space, const char* rule_csv, char** json_out) {
    if (hws_status st = require(space && rule_csv && json_out, "null argument")) return st;
    return guarded([&] {
        const hws::CubatureRule rule = hws::parse_rule_csv(rule_csv, space->spec.s);
        const hws::WceResult wce = hws::wce_integration(space->spec, rule);
        hws::WceReport report;
        report.wce = wce.wce;
        report.raw_squared = wce.raw_squared;
        report.nonneg = rule.nonneg();
        report.nodes = rule.size();
        if (report.nonneg) {
            report.has_lower_bound = true;
            report.lower_bound = hws::wce_lower_bound_for_space(space->spec, rule.size());
        }
        *json_out = dup_string(hws::wce_report_to_json(report));
        return HWS_OK;
    });
}

hws_status hws_verify(const char* suite, unsigned long seed, char** json_out) {
    if (hws_status st = require(suite && json_out, "null argument")) return st;
    return guarded([&]() -> hws_status {
        if (!hws::is_verify_suite(suite))
            throw hws::domain_error("unknown verify suite: " + std::string(suite));
        const auto results = hws::run_verify_suite(suite, seed);
        *json_out = dup_string(hws::verify_summary_json(suite, seed, results));
        if (!hws::all_passed(results)) {
            g_last_error = "verification failures reported";
            return HWS_ERROR_VERIFY;
        }
        return HWS_OK;
    });
}

} // extern "C"
