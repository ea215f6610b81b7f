#include "cio/cli/report.hpp"

#include <cmath>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "cio/error.hpp"

namespace cio::cli {

namespace {

constexpr double kBps = 1e4;

std::string bps(double value) {
    return fmt::format("{:.2f}", value);
}

}  // namespace

TableReport build_table(const ScenarioModel& model, Side side, double vol,
                        std::span<const double> rho_grid, std::span<const double> strikes) {
    TableReport report;
    report.label = model.scenario.label;
    report.side = side;
    report.vol = vol;
    report.rho_grid.assign(rho_grid.begin(), rho_grid.end());

    std::vector<ArmageddonAdjustment> adjustments;
    for (double rho : rho_grid) {
        adjustments.push_back(model.adjustment(rho));
        report.q_arm.push_back(adjustments.back().q_arm);
    }

    const double recovery = model.scenario.recovery;
    for (double strike : strikes) {
        const OptionSpec spec = model.option(strike, side, vol);
        ReportRow row;
        row.strike_bps = strike * kBps;
        row.side = side;
        row.market_price = price_market(model.forward_legs, spec) * kBps;
        row.bid_ask_threshold = model.scenario.bid_ask_for(strike);
        for (const auto& adj : adjustments) {
            const double noarb = price_noarb(model.forward_legs, adj, spec, model.curve, recovery).total * kBps;
            row.noarb_price.push_back(noarb);
            row.difference.push_back(noarb - row.market_price);
            if (row.bid_ask_threshold)
                row.exceeds.push_back(std::abs(row.difference.back()) > *row.bid_ask_threshold);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

TableReport build_anchored_table(const ScenarioModel& model, Side side, double anchor_strike_bps,
                                 double anchor_price_bps, std::span<const double> rho_grid,
                                 std::span<const double> strikes) {
    detail::require(anchor_strike_bps > 0.0, "anchor strike must be positive");
    const OptionSpec anchor = model.option(anchor_strike_bps / kBps, side, 0.0);
    const double vol = implied_vol(model.forward_legs, anchor, anchor_price_bps / kBps);
    TableReport report = build_table(model, side, vol, rho_grid, strikes);
    report.anchor_strike_bps = anchor_strike_bps;
    report.anchor_price_bps = anchor_price_bps;
    return report;
}

std::string to_csv(const TableReport& report) {
    std::ostringstream os;
    os << "row,rho";
    for (const auto& row : report.rows) os << ',' << fmt::format("{:g}", row.strike_bps);
    os << '\n';

    os << "market,";
    for (const auto& row : report.rows) os << ',' << bps(row.market_price);
    os << '\n';
    for (std::size_t r = 0; r < report.rho_grid.size(); ++r) {
        os << "noarb," << fmt::format("{:.2f}", report.rho_grid[r]);
        for (const auto& row : report.rows) os << ',' << bps(row.noarb_price[r]);
        os << '\n';
    }
    for (std::size_t r = 0; r < report.rho_grid.size(); ++r) {
        os << "diff," << fmt::format("{:.2f}", report.rho_grid[r]);
        for (const auto& row : report.rows) os << ',' << bps(row.difference[r]);
        os << '\n';
    }

    bool any_threshold = false;
    for (const auto& row : report.rows) any_threshold = any_threshold || row.bid_ask_threshold;
    if (!any_threshold) return os.str();

    os << "bid_ask,";
    for (const auto& row : report.rows)
        os << ',' << (row.bid_ask_threshold ? bps(*row.bid_ask_threshold) : std::string());
    os << '\n';
    for (std::size_t r = 0; r < report.rho_grid.size(); ++r) {
        os << "exceeds," << fmt::format("{:.2f}", report.rho_grid[r]);
        for (const auto& row : report.rows)
            os << ',' << (row.bid_ask_threshold ? (row.exceeds[r] ? "1" : "0") : "");
        os << '\n';
    }
    return os.str();
}

std::string to_json(const TableReport& report) {
    using nlohmann::json;
    json j;
    j["label"] = report.label;
    j["side"] = std::string(to_string(report.side));
    j["anchor_strike_bps"] = report.anchor_strike_bps;
    j["anchor_price_bps"] = report.anchor_price_bps;
    j["vol"] = report.vol;
    j["rho_grid"] = report.rho_grid;
    j["q_arm"] = report.q_arm;
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r;
        r["strike_bps"] = row.strike_bps;
        r["side"] = std::string(to_string(row.side));
        r["market_price"] = row.market_price;
        r["noarb_price"] = row.noarb_price;
        r["difference"] = row.difference;
        r["bid_ask_threshold"] = row.bid_ask_threshold ? json(*row.bid_ask_threshold) : json(nullptr);
        r["exceeds"] = row.exceeds;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

TableReport parse_table_json(std::string_view text) {
    using nlohmann::json;
    try {
        const json j = json::parse(text);
        TableReport report;
        report.label = j.at("label").get<std::string>();
        report.side = parse_side(j.at("side").get<std::string>());
        report.anchor_strike_bps = j.at("anchor_strike_bps").get<double>();
        report.anchor_price_bps = j.at("anchor_price_bps").get<double>();
        report.vol = j.at("vol").get<double>();
        report.rho_grid = j.at("rho_grid").get<std::vector<double>>();
        report.q_arm = j.at("q_arm").get<std::vector<double>>();
        for (const auto& r : j.at("rows")) {
            ReportRow row;
            row.strike_bps = r.at("strike_bps").get<double>();
            row.side = parse_side(r.at("side").get<std::string>());
            row.market_price = r.at("market_price").get<double>();
            row.noarb_price = r.at("noarb_price").get<std::vector<double>>();
            row.difference = r.at("difference").get<std::vector<double>>();
            if (!r.at("bid_ask_threshold").is_null())
                row.bid_ask_threshold = r.at("bid_ask_threshold").get<double>();
            row.exceeds = r.at("exceeds").get<std::vector<bool>>();
            report.rows.push_back(std::move(row));
        }
        return report;
    } catch (const json::exception& e) {
        throw InputError(std::string("table report: ") + e.what());
    }
}

}  // namespace cio::cli
