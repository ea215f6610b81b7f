/// @file report.hpp
/// @brief Strike x correlation price grids in the layout of the published tables.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cio/pricing.hpp"
#include "cio/scenario_model.hpp"

namespace cio::cli {

/// One strike of a grid. All prices in bps of notional.
struct ReportRow {
    double strike_bps = 0.0;
    Side side = Side::payer;
    double market_price = 0.0;
    std::vector<double> noarb_price;  ///< one per rho
    std::vector<double> difference;   ///< noarb - market, one per rho
    std::optional<double> bid_ask_threshold;
    std::vector<bool> exceeds;        ///< |difference| > threshold, one per rho (empty without threshold)

    bool operator==(const ReportRow&) const = default;
};

struct TableReport {
    std::string label;
    Side side = Side::payer;
    double anchor_strike_bps = 0.0;
    double anchor_price_bps = 0.0;
    double vol = 0.0;
    std::vector<double> rho_grid;
    std::vector<double> q_arm;  ///< one per rho
    std::vector<ReportRow> rows;

    bool operator==(const TableReport&) const = default;
};

/// Prices every strike under both formulas at a common volatility.
TableReport build_table(const ScenarioModel& model, Side side, double vol,
                        std::span<const double> rho_grid, std::span<const double> strikes);

/// Backs out the volatility from an anchor quote with the market formula,
/// then fills the grid. Throws InversionError if the anchor is unattainable.
TableReport build_anchored_table(const ScenarioModel& model, Side side, double anchor_strike_bps,
                                 double anchor_price_bps, std::span<const double> rho_grid,
                                 std::span<const double> strikes);

/// Strikes as columns; rows `market`, `noarb` and `diff` per rho, then
/// `bid_ask` and `exceeds` per rho when thresholds are quoted.
std::string to_csv(const TableReport& report);

std::string to_json(const TableReport& report);

/// Inverse of to_json. Throws InputError on malformed input.
TableReport parse_table_json(std::string_view text);

}  // namespace cio::cli
