#include "cio/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "cio/cli/report.hpp"
#include "cio/error.hpp"
#include "cio/mc_oracle.hpp"
#include "cio/scenario_io.hpp"
#include "cio/scenario_model.hpp"

namespace cio::cli {

namespace {

using nlohmann::json;

/// Scenario with command-line overrides applied.
MarketScenario load(const CommonOptions& opts) {
    MarketScenario s = load_scenario(opts.scenario);
    if (opts.rho_grid) s.rho_grid = *opts.rho_grid;
    if (opts.strikes_bps) {
        s.strikes.clear();
        for (double k : *opts.strikes_bps) s.strikes.push_back(k / 1e4);
    }
    validate(s);
    return s;
}

void emit(const CommonOptions& opts, const std::string& text, std::ostream& out) {
    if (!opts.out) {
        out << text;
        return;
    }
    std::ofstream file(*opts.out, std::ios::binary);
    if (!file) throw InputError("cannot write " + opts.out->string());
    file << text;
}

/// Maps library exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

std::string legs_csv(const std::string& prefix, const IndexLegs& legs) {
    return fmt::format("{0}_protection,{1:.12g}\n{0}_annuity,{2:.12g}\n{0}_fep,{3:.12g}\n", prefix,
                       legs.protection_value, legs.annuity, legs.fep_value);
}

json legs_json(const IndexLegs& legs) {
    return json{{"start", legs.start},
                {"maturity", legs.maturity},
                {"protection", legs.protection_value},
                {"annuity", legs.annuity},
                {"fep", legs.fep_value}};
}

double z_score(double estimate, double reference, double std_error) {
    const double diff = estimate - reference;
    if (std::abs(diff) < 1e-14) return 0.0;
    if (std_error == 0.0) return diff > 0 ? INFINITY : -INFINITY;
    return diff / std_error;
}

}  // namespace

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    throw InputError("unknown format '" + text + "'");
}

std::vector<double> parse_csv_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("not a number in list: '" + item + "'");
        }
    }
    if (values.empty()) throw InputError("empty list");
    return values;
}

int run_calibrate(const CalibrateOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ScenarioModel model = build_model(load(opts));
        const double lambda = model.hazard.pillars().front().intensity;
        const double survival = model.hazard.survival(model.scenario.option_expiry);
        const double par = forward_spread(model.spot_legs);
        const double adjusted = market_adjusted_spread(model.forward_legs);

        std::string text;
        if (opts.format == Format::json) {
            json pillars = json::array();
            for (const auto& p : model.hazard.pillars())
                pillars.push_back({{"time", std::isfinite(p.time) && p.time < 1e300 ? json(p.time) : json(nullptr)},
                                   {"intensity", p.intensity}});
            json j{{"label", model.scenario.label},
                   {"lambda", lambda},
                   {"hazard", {{"pillars", pillars}}},
                   {"survival_at_expiry", survival},
                   {"default_prob_at_expiry", model.default_prob},
                   {"spot", legs_json(model.spot_legs)},
                   {"spot_par_spread", par},
                   {"forward", legs_json(model.forward_legs)},
                   {"forward_spread", forward_spread(model.forward_legs)},
                   {"loss_adjusted_spread", adjusted}};
            text = j.dump(2) + "\n";
        } else {
            text = fmt::format("field,value\nlabel,{}\nlambda,{:.12g}\nsurvival_at_expiry,{:.12g}\n"
                               "default_prob_at_expiry,{:.12g}\n",
                               model.scenario.label, lambda, survival, model.default_prob);
            text += legs_csv("spot", model.spot_legs);
            text += fmt::format("spot_par_spread,{:.12g}\n", par);
            text += legs_csv("forward", model.forward_legs);
            text += fmt::format("forward_spread,{:.12g}\nloss_adjusted_spread,{:.12g}\n",
                                forward_spread(model.forward_legs), adjusted);
        }
        emit(opts, text, out);
        return int{kExitOk};
    });
}

int run_table(const TableOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!opts.anchor_strike_bps || !opts.anchor_price_bps)
            throw InputError("table: --anchor-strike and --anchor-price are required");
        const ScenarioModel model = build_model(load(opts));
        const TableReport report =
            build_anchored_table(model, opts.side, *opts.anchor_strike_bps, *opts.anchor_price_bps,
                                 model.scenario.rho_grid, model.scenario.strikes);
        emit(opts, opts.format == Format::json ? to_json(report) : to_csv(report), out);
        return int{kExitOk};
    });
}

int run_mc_validate(const McValidateOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        detail::require(opts.paths >= 2, "mc-validate: need at least two paths");
        const ScenarioModel model = build_model(load(opts));
        const McConfig cfg{.n_paths = opts.paths,
                           .seed = opts.seed,
                           .antithetic = opts.antithetic,
                           .threads = opts.threads};
        const double lgd = 1.0 - model.scenario.recovery;

        bool all_pass = true;
        json rows = json::array();
        std::string csv =
            "rho,q_arm,q_arm_mc,q_arm_se,q_arm_z,loss_noarm,loss_noarm_mc,loss_noarm_se,loss_noarm_z,pass\n";
        for (double rho : model.scenario.rho_grid) {
            const CopulaParams params = model.copula(rho);
            const double q = armageddon_prob(params) * opts.qarm_scale;
            const double loss_noarm = lgd * (model.default_prob - q);
            const McEstimate q_mc = simulate_armageddon(params, cfg);
            const McEstimate loss_mc = simulate_loss_given_no_armageddon(params, cfg, model.scenario.recovery);
            const double z_q = z_score(q_mc.mean, q, q_mc.std_error);
            const double z_loss = z_score(loss_mc.mean, loss_noarm, loss_mc.std_error);
            const bool pass = std::abs(z_q) < 3.0 && std::abs(z_loss) < 3.0;
            all_pass = all_pass && pass;

            csv += fmt::format("{:.4f},{:.10e},{:.10e},{:.4e},{:.3f},{:.10e},{:.10e},{:.4e},{:.3f},{}\n", rho, q,
                               q_mc.mean, q_mc.std_error, z_q, loss_noarm, loss_mc.mean, loss_mc.std_error,
                               z_loss, pass ? 1 : 0);
            rows.push_back({{"rho", rho},
                            {"q_arm", q},
                            {"q_arm_mc", q_mc.mean},
                            {"q_arm_se", q_mc.std_error},
                            {"q_arm_z", z_q},
                            {"loss_noarm", loss_noarm},
                            {"loss_noarm_mc", loss_mc.mean},
                            {"loss_noarm_se", loss_mc.std_error},
                            {"loss_noarm_z", z_loss},
                            {"pass", pass}});
        }

        if (opts.format == Format::json) {
            const json j{{"label", model.scenario.label},
                         {"paths", opts.paths},
                         {"seed", opts.seed},
                         {"antithetic", opts.antithetic},
                         {"rows", rows},
                         {"pass", all_pass}};
            emit(opts, j.dump(2) + "\n", out);
        } else {
            emit(opts, csv, out);
        }
        if (!all_pass) err << "mc-validate: oracle disagreement (|z| >= 3)\n";
        return int{all_pass ? kExitOk : kExitValidation};
    });
}

}  // namespace cio::cli
