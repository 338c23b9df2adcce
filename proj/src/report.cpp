#include "rdp/report.hpp"

namespace rdp {

json to_json(const Witness& w) {
    return json{{"x1", w.x1}, {"x2", w.x2}, {"image", w.image}};
}

json to_json(const CycleType& t) { return json(t.expanded()); }

json to_json(const PermReport& r) {
    json j;
    j["is_pp"] = r.is_pp;
    j["is_cpp"] = r.is_cpp ? json(*r.is_cpp) : json(nullptr);
    j["fixed_points"] = r.fixed_points;
    j["cycle_type"] = r.cycle_type ? to_json(*r.cycle_type) : json(nullptr);
    j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    return j;
}

json to_json(const IndexClassification& c) {
    json j;
    j["modulus"] = c.modulus;
    j["kind"] = c.kind.k;
    j["scan_bound"] = c.scan_bound;
    j["pp_indices"] = c.pp_indices;
    j["cpp_indices"] = c.cpp_indices;
    j["congruence_classes"] = c.congruence_classes;
    j["class_modulus"] = c.class_modulus;
    return j;
}

json to_json(const PeriodReport& r) {
    json j;
    j["p"] = r.p;
    j["kind"] = r.kind.k;
    j["point"] = r.point;
    j["terms"] = r.terms;
    j["start_offset"] = r.start_offset;
    j["period"] = r.period;
    j["predicted"] = r.predicted ? json(*r.predicted) : json(nullptr);
    j["matches_prediction"] = r.matches_prediction ? json(*r.matches_prediction) : json(nullptr);
    return j;
}

namespace {

std::string status_str(ConjectureStatus s) {
    switch (s) {
        case ConjectureStatus::ConfirmedAtScale: return "confirmed-at-scale";
        case ConjectureStatus::Counterexample: return "counterexample";
        case ConjectureStatus::SufficientDirectionOnly: return "sufficient-direction-only";
    }
    return "unknown";
}

}  // namespace

json to_json(const ConjectureVerdict& v) {
    json j;
    j["id"] = v.id;
    j["p"] = v.p;
    j["status"] = status_str(v.status);
    j["counterexample"] = v.counterexample ? json(*v.counterexample) : json(nullptr);
    return j;
}

json to_json(const ScanResult& r) {
    json j;
    j["classification"] = to_json(r.classification);
    j["verdict"] = r.verdict ? to_json(*r.verdict) : json(nullptr);
    return j;
}

json to_json(const CheckLine& c) {
    return json{{"name", c.name}, {"hard", c.hard}, {"ok", c.ok}, {"detail", c.detail}};
}

json to_json(const SuiteReport& r) {
    json checks = json::array();
    for (const CheckLine& c : r.checks) checks.push_back(to_json(c));
    return json{{"suite", r.suite},
                {"checks", checks},
                {"all_hard_ok", r.all_hard_ok()},
                {"all_ok", r.all_ok()}};
}

Witness witness_from_json(const json& j) {
    return Witness{j.at("x1").get<i64>(), j.at("x2").get<i64>(), j.at("image").get<i64>()};
}

CycleType cycle_type_from_json(const json& j) {
    CycleType t;
    std::vector<i64> lens = j.get<std::vector<i64>>();
    for (i64 len : lens) {
        if (!t.cycles.empty() && t.cycles.back().first == len)
            ++t.cycles.back().second;
        else
            t.cycles.push_back({len, 1});
    }
    return t;
}

PermReport perm_report_from_json(const json& j) {
    PermReport r;
    r.is_pp = j.at("is_pp").get<bool>();
    if (!j.at("is_cpp").is_null()) r.is_cpp = j.at("is_cpp").get<bool>();
    r.fixed_points = j.at("fixed_points").get<std::vector<i64>>();
    if (!j.at("cycle_type").is_null()) r.cycle_type = cycle_type_from_json(j.at("cycle_type"));
    if (!j.at("witness").is_null()) r.witness = witness_from_json(j.at("witness"));
    return r;
}

CheckLine check_line_from_json(const json& j) {
    return CheckLine{j.at("name").get<std::string>(), j.at("hard").get<bool>(),
                     j.at("ok").get<bool>(), j.at("detail").get<std::string>()};
}

SuiteReport suite_report_from_json(const json& j) {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    for (const json& c : j.at("checks")) r.checks.push_back(check_line_from_json(c));
    return r;
}

json make_envelope(const std::string& command, const json& parameters, const json& results) {
    json j;
    j["schema_version"] = "1";
    j["command"] = command;
    j["parameters"] = parameters;
    j["results"] = results;
    return j;
}

}  // namespace rdp
