#pragma once

#include <string>

#include <json.hpp>

#include "iwss/iwasawa.hpp"

namespace iwss {

// Structured payload serializers shared by the CLI's human and JSON output.
nlohmann::json to_json(const LocalReductionData& ld);
nlohmann::json to_json(const HypOneVerdict& v);
nlohmann::json to_json(const Factorization& f);
nlohmann::json to_json(const TorsionDimension& t);
nlohmann::json to_json(const SplittingNumber& s);
nlohmann::json to_json(const DefectReport& d);
nlohmann::json to_json(const LambdaReport& r);
nlohmann::json to_json(const FamilyRunResult& r);
nlohmann::json to_json(const CurveRecord& r);

// Report envelope: {command, inputs, result, warnings, status}; exit status 0
// iff no errors (warnings allowed).
nlohmann::json make_envelope(const std::string& command, nlohmann::json inputs,
                             nlohmann::json result, const std::vector<std::string>& warnings);

// Minimal structural validation against the shipped schema description.
bool validate_envelope(const nlohmann::json& env, std::string* why = nullptr);

}  // namespace iwss
