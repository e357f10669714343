#include "iwss/report.hpp"

namespace iwss {

using nlohmann::json;

json to_json(const LocalReductionData& ld) {
    return {{"p", ld.p.str()},     {"kodaira", ld.kodaira}, {"type", to_string(ld.type)},
            {"f", ld.f},           {"c", ld.c.str()},       {"v_disc", ld.v_disc}};
}

json to_json(const HypOneVerdict& v) {
    return {{"p", v.p.str()},
            {"good_at_p", v.good_at_p},
            {"supersingular", v.supersingular},
            {"a_p", v.a_p.str()},
            {"failures", v.failures}};
}

json to_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& [p, e] : f.factors) factors.push_back({{"p", p.str()}, {"e", e}});
    json out = {{"factors", factors}, {"complete", f.complete}, {"value", f.value().str()}};
    if (!f.complete) out["cofactor"] = f.cofactor.str();
    return out;
}

json to_json(const TorsionDimension& t) {
    return {{"l", t.l.str()},
            {"p", t.p.str()},
            {"layer", t.layer == TorsionLayer::Base ? "base" : "first"},
            {"dim", t.dim},
            {"exact_order_p_points", t.exact_order_p_points.str()}};
}

json to_json(const SplittingNumber& s) {
    return {{"l", s.l.str()}, {"p", s.p.str()}, {"k", s.k}, {"s", s.s.str()}};
}

json to_json(const DefectReport& d) {
    json entries = json::array();
    for (const auto& e : d.entries) {
        entries.push_back({{"l", e.l.str()},
                           {"s", e.s.s.str()},
                           {"layer", e.dim.layer == TorsionLayer::Base ? "base" : "first"},
                           {"dim", e.dim.dim},
                           {"contribution", e.contribution.str()}});
    }
    return {{"curve", d.curve}, {"p", d.p.str()}, {"entries", entries}, {"delta", d.delta.str()}};
}

json to_json(const LambdaReport& r) {
    json out = {{"curve", r.curve},
                {"label", r.label},
                {"p", r.p.str()},
                {"rho_plus", r.rho_plus.str()},
                {"rho_minus", r.rho_minus.str()},
                {"delta", r.delta.str()},
                {"lambda_plus", r.lambda_plus.str()},
                {"lambda_minus", r.lambda_minus.str()},
                {"lambda_difference", (r.lambda_plus - r.lambda_minus).str()},
                {"mu_status", to_string(r.mu_status)},
                {"discarded", r.discarded},
                {"warnings", r.warnings}};
    if (r.discarded) out["discard_reason"] = r.discard_reason;
    if (r.defect) out["defect"] = to_json(*r.defect);
    if (r.hyp1) out["hyp1"] = to_json(*r.hyp1);
    if (r.matches_published) out["matches_published"] = *r.matches_published;
    return out;
}

json to_json(const FamilyRunResult& r) {
    json reports = json::array();
    for (const auto& rep : r.reports) reports.push_back(to_json(rep));
    return {{"family", r.fixture.name},
            {"p", r.fixture.p.str()},
            {"reference", r.fixture.reference_label},
            {"reports", reports},
            {"lambda_difference_constant", r.lambda_difference_constant},
            {"warnings", r.warnings}};
}

json to_json(const CurveRecord& r) {
    return json::parse(record_to_json_text(r));
}

json make_envelope(const std::string& command, json inputs, json result,
                   const std::vector<std::string>& warnings) {
    return {{"command", command},
            {"inputs", std::move(inputs)},
            {"result", std::move(result)},
            {"warnings", warnings},
            {"status", "ok"}};
}

bool validate_envelope(const json& env, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!env.is_object()) return fail("envelope is not an object");
    for (const char* key : {"command", "inputs", "result", "warnings", "status"})
        if (!env.contains(key)) return fail(std::string("missing key: ") + key);
    if (!env["command"].is_string()) return fail("command must be a string");
    if (!env["warnings"].is_array()) return fail("warnings must be an array");
    if (!env["status"].is_string()) return fail("status must be a string");
    return true;
}

}  // namespace iwss
