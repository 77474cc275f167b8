#pragma once

#include <stdexcept>
#include <string>

namespace k3walls {

// Error codes for precondition failures in the core modules. The CLI maps
// CoreError to exit code 3 and ConfigError to exit code 2.
enum class Err {
  ZeroClass,
  NotSpherical,
  ZeroCharge,
  OutsideHalfPlane,
  NonPositiveRank,
  NonPositiveSlope,
  ProportionalClasses,
  EmptyRegion,
  DegeneratePath,
  ForeignWall,
  UnderdeterminedSystem,
  NotOrthogonal,
  ZeroVector,
  HypothesisFailed,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::ZeroClass: return "ZeroClass";
    case Err::NotSpherical: return "NotSpherical";
    case Err::ZeroCharge: return "ZeroCharge";
    case Err::OutsideHalfPlane: return "OutsideHalfPlane";
    case Err::NonPositiveRank: return "NonPositiveRank";
    case Err::NonPositiveSlope: return "NonPositiveSlope";
    case Err::ProportionalClasses: return "ProportionalClasses";
    case Err::EmptyRegion: return "EmptyRegion";
    case Err::DegeneratePath: return "DegeneratePath";
    case Err::ForeignWall: return "ForeignWall";
    case Err::UnderdeterminedSystem: return "UnderdeterminedSystem";
    case Err::NotOrthogonal: return "NotOrthogonal";
    case Err::ZeroVector: return "ZeroVector";
    case Err::HypothesisFailed: return "HypothesisFailed";
  }
  return "UnknownError";
}

class CoreError : public std::runtime_error {
public:
  CoreError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what)
      : std::runtime_error("config error: " + what) {}
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw CoreError(code, what);
}

} // namespace k3walls
