/// @file commands.hpp
/// @brief Implementation of the `cio` subcommands, callable without a process.
///
/// Exit codes: 0 ok, 2 bad input, 3 numerical failure, 4 validation failure.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cio/pricing.hpp"

namespace cio::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 2,
    kExitNumerical = 3,
    kExitValidation = 4,
};

enum class Format { csv, json };

Format parse_format(const std::string& text);

struct CommonOptions {
    std::filesystem::path scenario;
    std::optional<std::vector<double>> rho_grid;  ///< overrides the scenario grid
    std::optional<std::vector<double>> strikes_bps;
    Format format = Format::csv;
    std::optional<std::filesystem::path> out;
};

struct CalibrateOptions : CommonOptions {};

struct TableOptions : CommonOptions {
    Side side = Side::payer;
    std::optional<double> anchor_strike_bps;
    std::optional<double> anchor_price_bps;
};

struct McValidateOptions : CommonOptions {
    std::size_t paths = 1'000'000;
    std::uint64_t seed = 20070814;
    bool antithetic = false;
    unsigned threads = 0;
    /// Test hook: multiplies the quadrature q_arm before comparison.
    double qarm_scale = 1.0;
};

/// Parses "0.6,0.65" style lists. Throws InputError.
std::vector<double> parse_csv_list(const std::string& text);

int run_calibrate(const CalibrateOptions& opts, std::ostream& out, std::ostream& err);
int run_table(const TableOptions& opts, std::ostream& out, std::ostream& err);
int run_mc_validate(const McValidateOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace cio::cli
