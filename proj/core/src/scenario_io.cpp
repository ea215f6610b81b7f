#include "cio/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cio/error.hpp"

namespace cio {

namespace {

using nlohmann::json;

template <typename T>
T field(const json& j, const char* name) {
    if (!j.contains(name)) throw InputError(std::string("scenario: missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("scenario: field '") + name + "' has the wrong type");
    }
}

std::string format_strike_key(double bps) {
    std::ostringstream os;
    os << bps;
    return os.str();
}

}  // namespace

MarketScenario parse_scenario(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("scenario: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("scenario: top level must be an object");

    MarketScenario s;
    s.label = field<std::string>(j, "label");
    s.index_spread = field<double>(j, "index_spread");
    s.recovery = field<double>(j, "recovery");
    s.n_names = field<int>(j, "n_names");
    s.rho_grid = field<std::vector<double>>(j, "rho_grid");
    s.zero_rate = field<double>(j, "zero_rate");
    s.index_maturity = field<double>(j, "index_maturity");
    s.option_expiry = field<double>(j, "option_expiry");
    s.strikes = field<std::vector<double>>(j, "strikes");

    if (j.contains("bid_ask")) {
        const auto& ba = j.at("bid_ask");
        if (!ba.is_object()) throw InputError("scenario: bid_ask must be an object");
        for (const auto& [key, value] : ba.items()) {
            double strike_bps = 0.0;
            try {
                std::size_t used = 0;
                strike_bps = std::stod(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw InputError("scenario: bid_ask key '" + key + "' is not a number");
            }
            if (!value.is_number()) throw InputError("scenario: bid_ask values must be numbers");
            s.bid_ask_bps[strike_bps] = value.get<double>();
        }
    }

    validate(s);
    return s;
}

MarketScenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("scenario: cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const MarketScenario& s) {
    json j;
    j["label"] = s.label;
    j["index_spread"] = s.index_spread;
    j["recovery"] = s.recovery;
    j["n_names"] = s.n_names;
    j["rho_grid"] = s.rho_grid;
    j["zero_rate"] = s.zero_rate;
    j["index_maturity"] = s.index_maturity;
    j["option_expiry"] = s.option_expiry;
    j["strikes"] = s.strikes;
    if (!s.bid_ask_bps.empty()) {
        json ba = json::object();
        for (const auto& [k, v] : s.bid_ask_bps) ba[format_strike_key(k)] = v;
        j["bid_ask"] = ba;
    }
    return j.dump(2);
}

}  // namespace cio
