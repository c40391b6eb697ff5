#pragma once

#include "json.hpp"

#include "bridgeland/stability.hpp"
#include "bridgeland/surgery.hpp"
#include "bridgeland/walls.hpp"

namespace bridgeland::cli {

inline constexpr int kSchemaVersion = 1;

/// Exact rationals travel as "p/q" strings (or "p" for integers).
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const ChernVector& v);
nlohmann::json to_json(const StabilityPoint& p);
nlohmann::json to_json(const Wall& wall);
nlohmann::json to_json(const Chamber& chamber);
nlohmann::json to_json(const FlopRecord& record);
nlohmann::json to_json(const TorusPoint& point);

/// Top-level object with schema_version and command filled in.
nlohmann::json envelope(const std::string& command);

}  // namespace bridgeland::cli
