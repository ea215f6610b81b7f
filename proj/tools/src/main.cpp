// cio: credit index option pricing lab.
//
//   cio calibrate   --scenario FILE
//   cio table       --scenario FILE --side payer --anchor-strike 300 --anchor-price 559.60
//   cio mc-validate --scenario FILE --paths 1000000 --seed 7

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cio/cli/commands.hpp"
#include "cio/error.hpp"

namespace {

struct RawCommon {
    std::string scenario;
    std::string rho_grid;
    std::string strikes;
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* cmd, RawCommon& raw) {
    cmd->add_option("--scenario", raw.scenario, "Scenario JSON file")->required();
    cmd->add_option("--rho-grid", raw.rho_grid, "Comma-separated correlations (overrides scenario)");
    cmd->add_option("--strikes", raw.strikes, "Comma-separated strikes in bps (overrides scenario)");
    cmd->add_option("--format", raw.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", raw.out, "Write the report to PATH instead of stdout");
}

void apply_common(const RawCommon& raw, cio::cli::CommonOptions& opts) {
    opts.scenario = raw.scenario;
    if (!raw.rho_grid.empty()) opts.rho_grid = cio::cli::parse_csv_list(raw.rho_grid);
    if (!raw.strikes.empty()) opts.strikes_bps = cio::cli::parse_csv_list(raw.strikes);
    opts.format = cio::cli::parse_format(raw.format);
    if (!raw.out.empty()) opts.out = raw.out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Credit index option pricing: market vs arbitrage-free formula"};
    app.require_subcommand(1);

    RawCommon cal_raw;
    auto* calibrate = app.add_subcommand("calibrate", "Calibrate the flat intensity and value the legs");
    add_common(calibrate, cal_raw);

    RawCommon tab_raw;
    std::string side = "payer";
    double anchor_strike = 0.0;
    double anchor_price = 0.0;
    auto* table = app.add_subcommand("table", "Price a strike x rho grid under both formulas");
    add_common(table, tab_raw);
    table->add_option("--side", side, "payer or receiver")
        ->check(CLI::IsMember({"payer", "receiver", "put", "call"}));
    table->add_option("--anchor-strike", anchor_strike, "Anchor strike in bps")->required();
    table->add_option("--anchor-price", anchor_price, "Anchor market price in bps")->required();

    RawCommon mc_raw;
    cio::cli::McValidateOptions mc_opts;
    auto* mc = app.add_subcommand("mc-validate", "Check copula quadrature against Monte Carlo");
    add_common(mc, mc_raw);
    mc->add_option("--paths", mc_opts.paths, "Number of paths")->check(CLI::PositiveNumber);
    mc->add_option("--seed", mc_opts.seed, "RNG seed");
    mc->add_flag("--antithetic", mc_opts.antithetic, "Use antithetic pairs");
    mc->add_option("--threads", mc_opts.threads, "Worker threads (0 = all cores)");
    mc->add_option("--qarm-scale", mc_opts.qarm_scale, "Test hook: scale the quadrature q_arm")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cio::cli::kExitInput;
    }

    try {
        if (*calibrate) {
            cio::cli::CalibrateOptions opts;
            apply_common(cal_raw, opts);
            return cio::cli::run_calibrate(opts, std::cout, std::cerr);
        }
        if (*table) {
            cio::cli::TableOptions opts;
            apply_common(tab_raw, opts);
            opts.side = cio::parse_side(side);
            opts.anchor_strike_bps = anchor_strike;
            opts.anchor_price_bps = anchor_price;
            return cio::cli::run_table(opts, std::cout, std::cerr);
        }
        apply_common(mc_raw, mc_opts);
        return cio::cli::run_mc_validate(mc_opts, std::cout, std::cerr);
    } catch (const cio::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cio::cli::kExitInput;
    }
}
