#pragma once

#include <json.hpp>

#include <string>

#include "dicycle/extraction.hpp"
#include "dicycle/oracle.hpp"

namespace dicycle {

// Shortest round-trip representation, byte-identical to what the JSON
// reports emit, so text and JSON output can never disagree.
std::string format_double(double x);

void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const DepthReport& r);
void to_json(nlohmann::json& j, const OracleResult& r);
void to_json(nlohmann::json& j, const SweepSummary& s);

}  // namespace dicycle
