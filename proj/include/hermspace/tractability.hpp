#ifndef HERMSPACE_TRACTABILITY_HPP
#define HERMSPACE_TRACTABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hermspace/weights.hpp"

namespace hws {

enum class Notion { SPT, PT, QPT, WT, UWT, SigmaTauWT };

// `Holds`/`Fails` come from an exact characterization or a proved necessary
// condition; `SufficientOnly` means the notion holds via a sufficient
// condition with no matching necessary side; `Unknown` means neither a
// sufficient nor a necessary condition resolves the case.
enum class Verdict { Holds, Fails, SufficientOnly, Unknown, Unsupported };

enum class InfoClass { All, Std };

enum class ProblemKind { Approximation, Integration, AnchoredIntegration, IntegrationNonnegRules };

struct NotionEntry {
    Notion notion = Notion::SPT;
    double sigma = 0.0;  // SigmaTauWT only
    double tau = 0.0;    // SigmaTauWT only
    Verdict verdict = Verdict::Unknown;
    std::optional<double> exponent;
    bool exponent_is_upper_bound = false;
    std::string basis;
};

struct TractabilityReport {
    FourierFamily family = FourierFamily::GaussianAnova;
    double alpha = 1.0;
    InfoClass info_class = InfoClass::All;
    ProblemKind problem = ProblemKind::Approximation;
    bool supported = true;
    std::string note;  // explanation when unsupported
    std::vector<NotionEntry> entries;

    const NotionEntry* find(Notion n) const {
        for (const auto& e : entries)
            if (e.notion == n) return &e;
        return nullptr;
    }
};

struct SigmaTauRequest {
    double sigma = 1.0;
    double tau = 1.0;
};

// Per-notion verdicts with exponents and citation strings, evaluated
// analytically on the weight sequence.  Unsupported combinations come back
// with supported = false and an explanatory note instead of throwing.
TractabilityReport tractability_report(const WeightSequence& weights, double alpha,
                                       FourierFamily family, InfoClass info_class,
                                       ProblemKind problem,
                                       std::optional<SigmaTauRequest> sigma_tau = std::nullopt);

// Logical closure SPT => PT and QPT => UWT => WT, where Holds and
// SufficientOnly count as positive.  Every emitted report satisfies this;
// exposed so tests can assert it on arbitrary reports.
bool closure_holds(const TractabilityReport& report);

const char* to_string(Notion n);
const char* to_string(Verdict v);
const char* to_string(InfoClass c);
const char* to_string(ProblemKind p);
const char* to_string(FourierFamily f);

} // namespace hws

#endif
