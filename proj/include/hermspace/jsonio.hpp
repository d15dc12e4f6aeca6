#ifndef HERMSPACE_JSONIO_HPP
#define HERMSPACE_JSONIO_HPP

#include <string>

#include "hermspace/spectra.hpp"
#include "hermspace/tractability.hpp"

namespace hws {

// Parses the canonical space-spec document
//   {"family": "anova"|"korobov"|"sobolev"|"exponential", "alpha": number,
//    "omega": number (exponential only), "weights": {...}, "s": integer}
// with strict validation: unknown fields are rejected, and each weight kind
// accepts exactly its own parameters.  Throws schema_error.
SpaceSpec parse_space_spec(const std::string& json_text);

// Canonical serialization; parse(serialize(parse(x))) == parse(x).
std::string space_spec_to_json(const SpaceSpec& space);

std::string report_to_json(const TractabilityReport& report, int indent = 2);

struct WceReport {
    double wce = 0.0;
    double raw_squared = 0.0;
    bool nonneg = false;
    bool has_lower_bound = false;
    double lower_bound = 0.0;
    std::uint64_t nodes = 0;
};

std::string wce_report_to_json(const WceReport& report, int indent = 2);

} // namespace hws

#endif
