#pragma once

#include "pio/criteria.hpp"
#include "pio/kcf.hpp"
#include "pio/pencil.hpp"

#include <json.hpp>

#include <string>

namespace pio {

using Json = nlohmann::ordered_json;

// System file: {"m":.., "n":.., "p":.., "r":.., "E":[["0","1"],..], ...}
// with every matrix entry a string "integer" or "integer/positive-integer".
// Unknown top-level keys are rejected. Throws ParseError / DimensionMismatch
// naming the offending field.
DescriptorSystem parse_system_json(const Json& j);
DescriptorSystem read_system_file(const std::string& path);

// KCF file: {"epsilon":[..], "jf":[{"eigenvalue":"..","size":..},..],
// "sigma":[..], "eta":[..], "C":[[..]], "L":[[..]]}.
KcfSystem parse_kcf_json(const Json& j);
KcfSystem read_kcf_file(const std::string& path);

// Stable machine-readable form; report_from_json(report_to_json(r)) == r.
Json report_to_json(const ObservabilityReport& rep);
ObservabilityReport report_from_json(const Json& j);

std::string render_report(const DescriptorSystem& sys, const ObservabilityReport& rep);

} // namespace pio
