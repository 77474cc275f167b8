#pragma once

#include "k3walls/report.hpp"

namespace k3walls {

// Serializes the report: "json" (stable key order, rationals as "p/q"
// strings, byte-reproducible), "text" (aligned human-readable table), or
// "svg" (the (b,t) half-plane; floats appear only in rendering coordinates,
// exact values are kept in metadata attributes). Throws ConfigError for an
// unsupported format/command combination.
std::string emit(const AnalysisReport& report, const std::string& format);

// Inverse of emit(report, "json"): rebuilds the report from its bytes.
AnalysisReport parse_report(const std::string& json_bytes);

// Serialization helpers shared with tests.
nlohmann::json config_to_json(const AnalysisConfig& cfg);
AnalysisConfig config_from_json(const nlohmann::json& j);
std::string divisor_string(const HilbDivisor& D);
nlohmann::json class_to_json(const MukaiClass& v);
nlohmann::json wall_to_json(const Wall& w);

} // namespace k3walls
