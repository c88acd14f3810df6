#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ellred/base_field.hpp"
#include "ellred/elliptic.hpp"
#include "ellred/gauss.hpp"

namespace ellred {

using Json = nlohmann::json;

/// JSON forms: {"kind":"p-adic","p":5} | {"kind":"t-adic"[,"semantics":
/// "exact"|"real-signs"]} | {"kind":"t-adic-fp","p":7} |
/// {"kind":"composite-t-p","p":5}
BaseFieldPtr field_from_json(const Json& j);
Json field_to_json(const BaseFieldPtr& field);

/// Array of "num/den" strings, or the string "inf".
Json value_to_json(const Value& v);

Json report_to_json(const std::string& id, const WeierstrassCurve& curve,
                    const OmegaStarReport& report);

Json analysis_to_json(const ResidueAnalysis& analysis);

Json conic_to_json(const ConicClass& c, bool has_point);

struct ClassifyOptions {
    bool pretty = false;
    int jobs = 1;
};

struct BatchResult {
    std::size_t records = 0;
    std::size_t errors = 0;
};

/// JSON-lines batch classifier: one output object per input line, in input
/// order; malformed records produce in-stream error objects and do not
/// abort the stream.
BatchResult run_classify(std::istream& in, std::ostream& out, const ClassifyOptions& opts);

/// Built-in regression suite; prints one line per check, returns the
/// number of failures.
int run_selftest(std::ostream& out);

} // namespace ellred
