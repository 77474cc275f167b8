#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3walls/divisors.hpp"
#include "k3walls/walls.hpp"

namespace k3walls {

inline constexpr const char* kToolName = "k3walls";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Command {
  Walls,
  Path,
  GiesekerBound,
  NefDivisor,
  HilbNef,
  Lagrangian,
  IsGeometric,
  SphericalSolve,
  Classify,
};

Command command_from_string(const std::string& s); // throws ConfigError
std::string command_to_string(Command c);

struct AnalysisConfig {
  Command command = Command::Walls;
  long d = 1;
  std::optional<MukaiClass> vector;
  std::optional<Rat> b, T;
  std::optional<Rat> b_min, b_max, T_min, T_max;
  std::optional<long> n;
  std::optional<long> rank_bound;
  std::optional<MukaiClass> dest; // destabilizer for `classify`
  std::vector<std::pair<MukaiClass, Rat>> constraints;
  bool mukai_filter = false;
  std::vector<std::string> formats = {"text"};
  std::string out_path; // empty: stdout
};

// Parses a UTF-8 key=value config file ('#' comments, blank lines ignored).
// Rationals must be "p/q" or integer strings; floats are rejected.
AnalysisConfig parse_config_file(const std::string& path);
void apply_config_line(AnalysisConfig& cfg, const std::string& key, const std::string& value);

struct AnalysisReport {
  AnalysisConfig config;
  long rank_bound_used = 0; // 0 when the command does not enumerate
  nlohmann::json result;    // command-specific payload, rationals as "p/q" strings
};

// Dispatches to exactly one core operation family. Deterministic output
// ordering; core precondition failures propagate as CoreError.
AnalysisReport run(const AnalysisConfig& cfg);

} // namespace k3walls
