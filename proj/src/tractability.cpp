#include "hermspace/tractability.hpp"

#include <cmath>
#include <limits>

#include "hermspace/errors.hpp"

namespace hws {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct WeightFigures {
    double sum_exponent;
    double infimum;
    bool sum_converges;
    double log_average;      // limsup (1/ln s) sum gamma_j
    bool vanishes_all;       // (1/s^sigma) sum -> 0 for all sigma in (0,1]
    bool wt_condition;       // (1/s) sum gamma_j -> 0
    const WeightSequence* seq;
};

WeightFigures figures(const WeightSequence& w) {
    return {w.sum_exponent(),       w.infimum(), w.sum_converges(),
            w.log_average_limsup(), w.power_average_vanishes_all(),
            w.power_average_limit(1.0) == 0.0, &w};
}

// (sigma, tau)-WT condition at a given sigma <= 1.
bool figures_condition_sigma(const WeightFigures& fig, double sigma) {
    return fig.seq->power_average_limit(sigma) == 0.0;
}

double spt_exponent_all(double alpha, double sum_exponent) {
    return 2.0 * std::max(1.0 / alpha, sum_exponent);
}

double qpt_exponent_all(double alpha, double infimum) {
    // Second case of the exponent formula: infimum 0 gives 2/alpha.
    if (infimum <= 0.0) return 2.0 / alpha;
    return 2.0 * std::max(1.0 / alpha, 1.0 / std::log(1.0 / infimum));
}

NotionEntry make(Notion n, Verdict v, std::string basis,
                 std::optional<double> exponent = std::nullopt, bool upper = false) {
    NotionEntry e;
    e.notion = n;
    e.verdict = v;
    e.basis = std::move(basis);
    e.exponent = exponent;
    e.exponent_is_upper_bound = upper;
    return e;
}

bool positive(Verdict v) { return v == Verdict::Holds || v == Verdict::SufficientOnly; }

// Lambda^all approximation: exact characterizations for the GaussianAnova
// family; embedding consequences for KorobovType / SobolevVariant.
void fill_all_approximation(TractabilityReport& rep, const WeightFigures& fig, double alpha,
                            FourierFamily family, std::optional<SigmaTauRequest> st) {
    const bool anova = family == FourierFamily::GaussianAnova;
    const char* thm = anova ? "Theorem 2" : "Corollary 1";

    const bool spt = fig.sum_exponent < kInf;
    const std::optional<double> spt_exp =
        spt ? std::optional<double>(spt_exponent_all(alpha, fig.sum_exponent)) : std::nullopt;
    rep.entries.push_back(make(Notion::SPT, spt ? Verdict::Holds : Verdict::Fails,
                               std::string(thm) + ", item 1 (iff: finite sum exponent)", spt_exp));
    rep.entries.push_back(make(Notion::PT, spt ? Verdict::Holds : Verdict::Fails,
                               std::string(thm) + ", item 2 (PT and SPT are equivalent)"));

    // QPT / UWT / WT
    Verdict weak;
    std::string weak_basis;
    std::optional<double> qpt_exp;
    if (fig.infimum < 1.0) {
        weak = Verdict::Holds;
        weak_basis = std::string(thm) + ", item 3 (weight infimum below 1)";
        qpt_exp = qpt_exponent_all(alpha, fig.infimum);
    } else if (anova) {
        weak = Verdict::Fails;
        weak_basis = "Theorem 2, item 3 (unweighted case: 2^s eigenvalues equal 1, "
                     "curse of dimensionality)";
    } else if (family == FourierFamily::KorobovType) {
        // The one-dimensional weight at k = 1 equals gamma_j, so the counting
        // argument of Theorem 2, item 3 applies verbatim.
        weak = Verdict::Fails;
        weak_basis = "Theorem 2, item 3 argument (weights equal to 1 put 2^s eigenvalues at 1)";
    } else {
        weak = Verdict::Unknown;
        weak_basis = "Corollary 1, item 3 sufficient condition not met; no necessary "
                     "condition is available for this family";
    }
    rep.entries.push_back(make(Notion::QPT, weak, weak_basis, qpt_exp));
    rep.entries.push_back(make(Notion::WT, weak, weak_basis));
    rep.entries.push_back(make(Notion::UWT, weak, weak_basis));

    if (st) {
        NotionEntry e;
        e.notion = Notion::SigmaTauWT;
        e.sigma = st->sigma;
        e.tau = st->tau;
        if (st->sigma > 1.0) {
            e.verdict = Verdict::Holds;
            e.basis = std::string(thm) + ", item 4 (sigma > 1: holds for all weights)";
        } else {
            e.verdict = weak;
            e.basis = weak_basis;
        }
        rep.entries.push_back(e);
    }
}

// Lambda^std: sufficient conditions on partial weight sums (approximation via
// one theorem, integration via its transfer); the only necessary side is the
// unweighted curse for approximation in the families whose weight at k = 1
// equals gamma.
void fill_std_sufficient(TractabilityReport& rep, const WeightFigures& fig, double alpha,
                         FourierFamily family, bool integration,
                         std::optional<SigmaTauRequest> st) {
    const char* thm = integration ? "Theorem 5" : "Theorem 4";
    const bool curse_family = !integration && (family == FourierFamily::GaussianAnova ||
                                               family == FourierFamily::KorobovType);
    const std::string curse_basis =
        "curse of dimensionality (n_std >= n_all >= 2^s in the unweighted case; "
        "Theorem 2, item 3 argument)";

    auto resolve = [&](bool condition_met, const std::string& met_basis) -> NotionEntry {
        NotionEntry e;
        if (condition_met) {
            e.verdict = Verdict::SufficientOnly;
            e.basis = met_basis;
        } else if (curse_family && fig.infimum >= 1.0) {
            e.verdict = Verdict::Fails;
            e.basis = curse_basis;
        } else {
            e.verdict = Verdict::Unknown;
            e.basis = met_basis + ": sufficient condition not met; no matching necessary "
                                  "condition is known";
        }
        return e;
    };

    NotionEntry spt = resolve(fig.sum_converges,
                              std::string(thm) + ", item 1 (summable weights)");
    if (spt.verdict == Verdict::SufficientOnly) {
        spt.exponent = spt_exponent_all(alpha, fig.sum_exponent);
        spt.exponent_is_upper_bound = integration;
    }
    spt.notion = Notion::SPT;
    rep.entries.push_back(spt);

    const bool pt_cond = fig.log_average < kInf;
    NotionEntry pt = resolve(pt_cond, std::string(thm) +
                                          ", item 2 (weight sums grow at most logarithmically)");
    pt.notion = Notion::PT;
    rep.entries.push_back(pt);

    NotionEntry qpt = resolve(pt_cond, std::string(thm) + ", item 2 (PT implies QPT)");
    qpt.notion = Notion::QPT;
    rep.entries.push_back(qpt);

    NotionEntry wt = resolve(fig.wt_condition,
                             std::string(thm) + ", item 3 (Cesaro averages of weights vanish)");
    wt.notion = Notion::WT;
    rep.entries.push_back(wt);

    NotionEntry uwt = resolve(fig.vanishes_all,
                              std::string(thm) + ", item 5 (s^-sigma averages vanish for all "
                                                 "sigma in (0,1])");
    uwt.notion = Notion::UWT;
    rep.entries.push_back(uwt);

    if (st) {
        NotionEntry e;
        if (st->sigma <= 1.0) {
            const bool cond = figures_condition_sigma(fig, st->sigma);
            e = resolve(cond, std::string(thm) + ", item 4 (s^-sigma weight averages vanish)");
        } else {
            e = resolve(fig.wt_condition,
                        std::string(thm) + ", items 3-4 with sigma' = 1 (monotone in sigma)");
            if (e.verdict == Verdict::Fails) {
                // the curse does not contradict sigma > 1
                e.verdict = Verdict::Unknown;
                e.basis = "not covered for sigma > 1";
            }
        }
        e.notion = Notion::SigmaTauWT;
        e.sigma = st->sigma;
        e.tau = st->tau;
        rep.entries.push_back(e);
    }
}

// Anchored-space integration: the decomposable kernel part upgrades the
// sufficient conditions to exact characterizations.
void fill_anchored(TractabilityReport& rep, const WeightFigures& fig,
                   std::optional<SigmaTauRequest> st) {
    const std::string thm = "anchored-space integration theorem";

    auto iff = [&](bool cond, int item) {
        return make(Notion::SPT, cond ? Verdict::Holds : Verdict::Fails,
                    thm + ", item " + std::to_string(item));
    };

    NotionEntry spt = iff(fig.sum_converges, 1);
    rep.entries.push_back(spt);
    NotionEntry pt = iff(fig.log_average < kInf, 2);
    pt.notion = Notion::PT;
    rep.entries.push_back(pt);
    // QPT is not characterized directly; PT implies it and it implies UWT.
    NotionEntry qpt;
    qpt.notion = Notion::QPT;
    if (fig.log_average < kInf) {
        qpt.verdict = Verdict::SufficientOnly;
        qpt.basis = thm + ", item 2 (PT implies QPT)";
    } else if (!fig.vanishes_all) {
        qpt.verdict = Verdict::Fails;
        qpt.basis = thm + ", item 5 (QPT implies UWT, which fails)";
    } else {
        qpt.verdict = Verdict::Unknown;
        qpt.basis = "QPT is not characterized for the anchored space";
    }
    rep.entries.push_back(qpt);
    NotionEntry wt = iff(fig.wt_condition, 3);
    wt.notion = Notion::WT;
    rep.entries.push_back(wt);
    NotionEntry uwt = iff(fig.vanishes_all, 5);
    uwt.notion = Notion::UWT;
    rep.entries.push_back(uwt);

    if (st) {
        NotionEntry e;
        e.notion = Notion::SigmaTauWT;
        e.sigma = st->sigma;
        e.tau = st->tau;
        if (st->sigma <= 1.0) {
            const bool cond = figures_condition_sigma(fig, st->sigma);
            e.verdict = cond ? Verdict::Holds : Verdict::Fails;
            e.basis = thm + ", item 4";
        } else if (fig.wt_condition) {
            e.verdict = Verdict::Holds;
            e.basis = thm + ", items 3-4 with sigma' = 1 (monotone in sigma)";
        } else {
            e.verdict = Verdict::Unknown;
            e.basis = "not covered for sigma > 1";
        }
        rep.entries.push_back(e);
    }
}

// Integration by rules with non-negative weights: necessary conditions only.
void fill_nonneg(TractabilityReport& rep, const WeightFigures& fig,
                 std::optional<SigmaTauRequest> st) {
    auto necessary = [&](bool condition_met, int item) {
        NotionEntry e;
        if (!condition_met) {
            e.verdict = Verdict::Fails;
            e.basis = "Theorem 6, item " + std::to_string(item) + " (necessary condition violated)";
        } else {
            e.verdict = Verdict::Unknown;
            e.basis = "Theorem 6, item " + std::to_string(item) +
                      " necessary condition met; sufficiency within non-negative-weight rules "
                      "is not established";
        }
        return e;
    };

    NotionEntry spt = necessary(fig.sum_converges, 1);
    spt.notion = Notion::SPT;
    rep.entries.push_back(spt);
    NotionEntry pt = necessary(fig.log_average < kInf, 2);
    pt.notion = Notion::PT;
    rep.entries.push_back(pt);
    NotionEntry qpt;
    qpt.notion = Notion::QPT;
    if (!fig.vanishes_all) {
        qpt.verdict = Verdict::Fails;
        qpt.basis = "Theorem 6, item 5 (QPT implies UWT, whose necessary condition is violated)";
    } else {
        qpt.verdict = Verdict::Unknown;
        qpt.basis = "QPT is not characterized for non-negative-weight rules";
    }
    rep.entries.push_back(qpt);
    NotionEntry wt = necessary(fig.wt_condition, 3);
    wt.notion = Notion::WT;
    rep.entries.push_back(wt);
    NotionEntry uwt = necessary(fig.vanishes_all, 5);
    uwt.notion = Notion::UWT;
    rep.entries.push_back(uwt);

    if (st) {
        NotionEntry e;
        if (st->sigma <= 1.0) {
            e = necessary(figures_condition_sigma(fig, st->sigma), 4);
        } else {
            e.verdict = Verdict::Unknown;
            e.basis = "not covered for sigma > 1";
        }
        e.notion = Notion::SigmaTauWT;
        e.sigma = st->sigma;
        e.tau = st->tau;
        rep.entries.push_back(e);
    }
}

} // namespace

TractabilityReport tractability_report(const WeightSequence& weights, double alpha,
                                       FourierFamily family, InfoClass info_class,
                                       ProblemKind problem,
                                       std::optional<SigmaTauRequest> sigma_tau) {
    TractabilityReport rep;
    rep.family = family;
    rep.alpha = alpha;
    rep.info_class = info_class;
    rep.problem = problem;

    auto unsupported = [&](const std::string& why) {
        rep.supported = false;
        rep.note = why;
        for (Notion n : {Notion::SPT, Notion::PT, Notion::QPT, Notion::WT, Notion::UWT})
            rep.entries.push_back(make(n, Verdict::Unsupported, why));
        if (sigma_tau) {
            NotionEntry e = make(Notion::SigmaTauWT, Verdict::Unsupported, why);
            e.sigma = sigma_tau->sigma;
            e.tau = sigma_tau->tau;
            rep.entries.push_back(e);
        }
        return rep;
    };

    const WeightFigures fig = figures(weights);

    switch (problem) {
        case ProblemKind::Approximation:
            if (family == FourierFamily::Exponential)
                return unsupported("no tractability characterization is implemented for "
                                   "approximation in the exponential-weight family");
            if (info_class == InfoClass::All) {
                fill_all_approximation(rep, fig, alpha, family, sigma_tau);
            } else {
                if (!(alpha > 1.0))
                    return unsupported("standard-information approximation results require "
                                       "smoothness alpha > 1");
                fill_std_sufficient(rep, fig, alpha, family, false, sigma_tau);
            }
            break;
        case ProblemKind::Integration:
            if (info_class == InfoClass::All) {
                // One linear functional recovers the integral exactly.
                for (Notion n : {Notion::SPT, Notion::PT, Notion::QPT, Notion::WT, Notion::UWT}) {
                    NotionEntry e = make(n, Verdict::Holds,
                                         "the integral is itself a continuous linear functional, "
                                         "so n(eps) <= 1 for every eps and s");
                    if (n == Notion::SPT || n == Notion::QPT) e.exponent = 0.0;
                    rep.entries.push_back(e);
                }
                if (sigma_tau) {
                    NotionEntry e = make(Notion::SigmaTauWT, Verdict::Holds,
                                         "n(eps) <= 1 under full linear information");
                    e.sigma = sigma_tau->sigma;
                    e.tau = sigma_tau->tau;
                    rep.entries.push_back(e);
                }
                break;
            }
            if (family == FourierFamily::Exponential)
                return unsupported("no tractability characterization is implemented for "
                                   "integration in the exponential-weight family");
            if (!(alpha > 1.0))
                return unsupported("standard-information integration results require "
                                   "smoothness alpha > 1");
            fill_std_sufficient(rep, fig, alpha, family, true, sigma_tau);
            break;
        case ProblemKind::AnchoredIntegration:
            if (info_class == InfoClass::All)
                return unsupported("the anchored-space characterization concerns standard "
                                   "information");
            if (family != FourierFamily::GaussianAnova)
                return unsupported("the anchored space is the anchored variant of the "
                                   "GaussianAnova norm; pass family \"anova\"");
            if (!(alpha > 1.0))
                return unsupported("the anchored-space theorem requires smoothness alpha > 1");
            fill_anchored(rep, fig, sigma_tau);
            break;
        case ProblemKind::IntegrationNonnegRules:
            if (info_class == InfoClass::All)
                return unsupported("non-negative-weight rules are function-evaluation "
                                   "algorithms; use the standard information class");
            if (family == FourierFamily::Exponential)
                return unsupported("the non-negative-rule bound is stated for the GaussianAnova, "
                                   "KorobovType and SobolevVariant families");
            fill_nonneg(rep, fig, sigma_tau);
            break;
    }
    return rep;
}

bool closure_holds(const TractabilityReport& rep) {
    const NotionEntry* spt = rep.find(Notion::SPT);
    const NotionEntry* pt = rep.find(Notion::PT);
    const NotionEntry* qpt = rep.find(Notion::QPT);
    const NotionEntry* wt = rep.find(Notion::WT);
    const NotionEntry* uwt = rep.find(Notion::UWT);
    if (!spt || !pt || !qpt || !wt || !uwt) return false;
    if (positive(spt->verdict) && wt->verdict == Verdict::Fails) return false;
    if (positive(spt->verdict) && !positive(pt->verdict)) return false;
    if (positive(qpt->verdict) && !positive(uwt->verdict)) return false;
    if (positive(uwt->verdict) && !positive(wt->verdict)) return false;
    // contrapositives
    if (pt->verdict == Verdict::Fails && positive(spt->verdict)) return false;
    if (wt->verdict == Verdict::Fails && positive(uwt->verdict)) return false;
    if (uwt->verdict == Verdict::Fails && positive(qpt->verdict)) return false;
    return true;
}

const char* to_string(Notion n) {
    switch (n) {
        case Notion::SPT: return "SPT";
        case Notion::PT: return "PT";
        case Notion::QPT: return "QPT";
        case Notion::WT: return "WT";
        case Notion::UWT: return "UWT";
        case Notion::SigmaTauWT: return "SigmaTauWT";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::SufficientOnly: return "sufficient-only";
        case Verdict::Unknown: return "unknown";
        case Verdict::Unsupported: return "unsupported";
    }
    return "?";
}

const char* to_string(InfoClass c) { return c == InfoClass::All ? "all" : "std"; }

const char* to_string(ProblemKind p) {
    switch (p) {
        case ProblemKind::Approximation: return "approximation";
        case ProblemKind::Integration: return "integration";
        case ProblemKind::AnchoredIntegration: return "anchored-integration";
        case ProblemKind::IntegrationNonnegRules: return "integration-nonneg-rules";
    }
    return "?";
}

const char* to_string(FourierFamily f) {
    switch (f) {
        case FourierFamily::GaussianAnova: return "anova";
        case FourierFamily::KorobovType: return "korobov";
        case FourierFamily::SobolevVariant: return "sobolev";
        case FourierFamily::Exponential: return "exponential";
    }
    return "?";
}

} // namespace hws
