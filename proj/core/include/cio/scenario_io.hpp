/// @file scenario_io.hpp
/// @brief JSON ingestion of market scenarios.
///
/// Field names match MarketScenario exactly; all times are year fractions and
/// all spreads, rates and strikes are decimals (0.0361, not 361). The optional
/// `bid_ask` object maps strike in bps (as a string key) to a threshold in bps.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cio/curves.hpp"

namespace cio {

/// Parses and validates a scenario. Throws InputError on malformed input.
MarketScenario parse_scenario(std::string_view json_text);

MarketScenario load_scenario(const std::filesystem::path& path);

std::string scenario_to_json(const MarketScenario& s);

}  // namespace cio
