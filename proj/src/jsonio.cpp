#include "hermspace/jsonio.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

#include "hermspace/errors.hpp"

namespace hws {

namespace {

using nlohmann::json;

void require_fields(const json& obj, const std::set<std::string>& required,
                    const std::set<std::string>& optional, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!required.count(key) && !optional.count(key))
            throw schema_error(where + ": unknown field \"" + key + "\"");
    }
    for (const auto& key : required) {
        if (!obj.contains(key)) throw schema_error(where + ": missing field \"" + key + "\"");
    }
}

double number_field(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number()) throw schema_error(where + ": field \"" + key + "\" must be a number");
    return v.get<double>();
}

WeightSequence parse_weights(const json& w) {
    if (!w.is_object()) throw schema_error("weights: must be an object");
    if (!w.contains("kind") || !w.at("kind").is_string())
        throw schema_error("weights: missing string field \"kind\"");
    const std::string kind = w.at("kind").get<std::string>();
    try {
        if (kind == "poly") {
            require_fields(w, {"kind", "a"}, {}, "weights(poly)");
            return WeightSequence::poly_decay(number_field(w, "a", "weights"));
        }
        if (kind == "geometric") {
            require_fields(w, {"kind", "c"}, {}, "weights(geometric)");
            return WeightSequence::geometric(number_field(w, "c", "weights"));
        }
        if (kind == "constant") {
            require_fields(w, {"kind", "g"}, {}, "weights(constant)");
            return WeightSequence::constant(number_field(w, "g", "weights"));
        }
        if (kind == "explicit") {
            require_fields(w, {"kind", "prefix", "tail"}, {}, "weights(explicit)");
            const auto& pj = w.at("prefix");
            if (!pj.is_array()) throw schema_error("weights: \"prefix\" must be an array");
            std::vector<double> prefix;
            for (const auto& e : pj) {
                if (!e.is_number()) throw schema_error("weights: prefix entries must be numbers");
                prefix.push_back(e.get<double>());
            }
            return WeightSequence::explicit_seq(std::move(prefix),
                                                number_field(w, "tail", "weights"));
        }
    } catch (const domain_error& e) {
        throw schema_error(std::string("weights: ") + e.what());
    }
    throw schema_error("weights: unknown kind \"" + kind + "\"");
}

json weights_to_json(const WeightSequence& w) {
    json out;
    // The scale factor exists only on derived (embedding-scaled) sequences,
    // which are not part of the document schema.
    if (w.scale() != 1.0)
        throw domain_error("space_spec_to_json: scaled weight sequences are not serializable");
    switch (w.kind()) {
        case WeightSequence::Kind::PolyDecay:
            out["kind"] = "poly";
            out["a"] = w.param();
            break;
        case WeightSequence::Kind::Geometric:
            out["kind"] = "geometric";
            out["c"] = w.param();
            break;
        case WeightSequence::Kind::Constant:
            out["kind"] = "constant";
            out["g"] = w.param();
            break;
        case WeightSequence::Kind::Explicit:
            out["kind"] = "explicit";
            out["prefix"] = w.prefix();
            out["tail"] = w.tail();
            break;
    }
    return out;
}

} // namespace

SpaceSpec parse_space_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw schema_error(std::string("space spec: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw schema_error("space spec: top level must be an object");
    if (!doc.contains("family") || !doc.at("family").is_string())
        throw schema_error("space spec: missing string field \"family\"");
    const std::string family = doc.at("family").get<std::string>();

    FourierFamily fam;
    if (family == "anova") fam = FourierFamily::GaussianAnova;
    else if (family == "korobov") fam = FourierFamily::KorobovType;
    else if (family == "sobolev") fam = FourierFamily::SobolevVariant;
    else if (family == "exponential") fam = FourierFamily::Exponential;
    else throw schema_error("space spec: unknown family \"" + family + "\"");

    if (fam == FourierFamily::Exponential)
        require_fields(doc, {"family", "omega", "weights", "s"}, {"alpha"}, "space spec");
    else
        require_fields(doc, {"family", "alpha", "weights", "s"}, {}, "space spec");

    const auto& sj = doc.at("s");
    if (!sj.is_number_integer() || sj.get<long long>() < 1)
        throw schema_error("space spec: \"s\" must be a positive integer");
    const auto s = static_cast<std::uint32_t>(sj.get<long long>());

    WeightSequence weights = parse_weights(doc.at("weights"));

    try {
        if (fam == FourierFamily::Exponential) {
            // alpha plays no role here but must still be well formed if given
            if (doc.contains("alpha") && !(number_field(doc, "alpha", "space spec") >= 1.0))
                throw schema_error("space spec: alpha must be >= 1");
            const double omega = number_field(doc, "omega", "space spec");
            return SpaceSpec(FourierWeights::exponential(omega, std::move(weights)), s);
        }
        const double alpha = number_field(doc, "alpha", "space spec");
        return SpaceSpec(FourierWeights(fam, alpha, std::move(weights)), s);
    } catch (const domain_error& e) {
        throw schema_error(std::string("space spec: ") + e.what());
    }
}

std::string space_spec_to_json(const SpaceSpec& space) {
    json out;
    out["family"] = to_string(space.fw.family());
    if (space.fw.family() == FourierFamily::Exponential)
        out["omega"] = space.fw.omega();
    else
        out["alpha"] = space.fw.alpha();
    out["weights"] = weights_to_json(space.fw.weights());
    out["s"] = space.s;
    return out.dump(2);
}

std::string report_to_json(const TractabilityReport& report, int indent) {
    json out;
    out["family"] = to_string(report.family);
    out["alpha"] = report.alpha;
    out["info_class"] = to_string(report.info_class);
    out["problem"] = to_string(report.problem);
    out["supported"] = report.supported;
    if (!report.note.empty()) out["note"] = report.note;
    json entries = json::array();
    for (const auto& e : report.entries) {
        json je;
        je["notion"] = to_string(e.notion);
        if (e.notion == Notion::SigmaTauWT) {
            je["sigma"] = e.sigma;
            je["tau"] = e.tau;
        }
        je["verdict"] = to_string(e.verdict);
        if (e.exponent) {
            je["exponent"] = *e.exponent;
            if (e.exponent_is_upper_bound) je["exponent_is_upper_bound"] = true;
        }
        je["basis"] = e.basis;
        entries.push_back(std::move(je));
    }
    out["entries"] = std::move(entries);
    return out.dump(indent);
}

std::string wce_report_to_json(const WceReport& report, int indent) {
    json out;
    out["wce"] = report.wce;
    out["raw_squared"] = report.raw_squared;
    out["nonneg"] = report.nonneg;
    out["nodes"] = report.nodes;
    if (report.has_lower_bound) out["lower_bound"] = report.lower_bound;
    return out.dump(indent);
}

} // namespace hws
