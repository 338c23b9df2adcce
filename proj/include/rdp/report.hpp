#pragma once

#include <json.hpp>

#include "rdp/classify.hpp"

namespace rdp {

// JSON serialization of the report types emitted by permcheck and classify.
// Objects use nlohmann's default key ordering, so identical inputs always
// serialize to identical bytes.

using json = nlohmann::json;

json to_json(const Witness& w);
json to_json(const CycleType& t);
json to_json(const PermReport& r);
json to_json(const IndexClassification& c);
json to_json(const PeriodReport& r);
json to_json(const ConjectureVerdict& v);
json to_json(const ScanResult& r);
json to_json(const CheckLine& c);
json to_json(const SuiteReport& r);

Witness witness_from_json(const json& j);
CycleType cycle_type_from_json(const json& j);
PermReport perm_report_from_json(const json& j);
CheckLine check_line_from_json(const json& j);
SuiteReport suite_report_from_json(const json& j);

/// Versioned wrapper every JSON-emitting command prints.
json make_envelope(const std::string& command, const json& parameters, const json& results);

}  // namespace rdp
