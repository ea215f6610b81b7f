#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cio/error.hpp"
#include "cio/pricing.hpp"
#include "cio/scenario_io.hpp"
#include "cio/scenario_model.hpp"

using namespace cio;

TEST(Black, ZeroVolIsIntrinsic) {
    EXPECT_NEAR(black(0.04, 0.03, 0.0), 0.01, 1e-17);
    EXPECT_EQ(black_put(0.04, 0.03, 0.0), 0.0);
}

TEST(Black, AtTheMoneyAgainstErfOracle) {
    // S (N(v/2) - N(-v/2)) = S erf(v / (2 sqrt 2))
    const double oracle = 0.04 * std::erf(0.15 / std::numbers::sqrt2);
    EXPECT_NEAR(oracle, 0.0047694153896194013, 1e-17);
    EXPECT_NEAR(black(0.04, 0.04, 0.3), oracle, 1e-17);
}

TEST(Black, VegaPositive) {
    double prev = black(0.036, 0.03, 0.0);
    for (double v = 0.05; v <= 4.0; v += 0.05) {
        const double value = black(0.036, 0.03, v);
        EXPECT_GT(value, prev);
        prev = value;
    }
}

TEST(Black, ParityAndLimits) {
    EXPECT_NEAR(black(0.036, 0.03, 0.4) - black_put(0.036, 0.03, 0.4), 0.006, 1e-14);
    for (double s : {0.01, 0.03, 0.05})
        for (double k : {0.02, 0.04})
            for (double v : {0.01, 0.3, 1.5})
                EXPECT_NEAR(black(s, k, v) - black_put(s, k, v), s - k, 1e-14);
    EXPECT_NEAR(black_put(0.03, 0.03, 40.0), 0.03, 1e-12);
    EXPECT_THROW(black(0.03, 0.03, -0.1), InputError);
    EXPECT_THROW(black_put(0.0, 0.03, 0.1), InputError);
}

class AugustPricing : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        model_ = new ScenarioModel(build_model(load_scenario(CIO_SCENARIO_DIR "/aug14.json")));
    }
    static void TearDownTestSuite() { delete model_; }

    static const ScenarioModel& model() { return *model_; }
    static inline ScenarioModel* model_ = nullptr;
};

TEST_F(AugustPricing, ZeroVolOutOfTheMoneyPayerIsWorthless) {
    const auto spec = model().option(0.06, Side::payer, 0.0);
    EXPECT_EQ(price_market(model().forward_legs, spec), 0.0);
}

TEST_F(AugustPricing, ParityBothFormulas) {
    const auto& legs = model().forward_legs;
    for (double rho : {0.0, 0.8, 0.95, 1.0}) {
        const auto adj = model().adjustment(rho);
        for (double k : {0.02, 0.03, 0.0361, 0.045, 0.06}) {
            const auto payer = model().option(k, Side::payer, 0.55);
            const auto receiver = model().option(k, Side::receiver, 0.55);
            const double fwd = forward_index_value(legs, k);
            EXPECT_NEAR(price_market(legs, payer) - price_market(legs, receiver), fwd, 1e-13);
            const double noarb = price_noarb(legs, adj, payer, model().curve, 0.4).total -
                                 price_noarb(legs, adj, receiver, model().curve, 0.4).total;
            EXPECT_NEAR(noarb, fwd, 1e-13);
        }
    }
}

TEST_F(AugustPricing, DegenerateArmageddonMatchesMarket) {
    const auto& legs = model().forward_legs;
    const auto adj = make_armageddon_adjustment(legs, 0.0, 0.4, model().curve);
    for (Side side : {Side::payer, Side::receiver}) {
        const auto spec = model().option(0.03, side, 0.5);
        const auto b = price_noarb(legs, adj, spec, model().curve, 0.4);
        EXPECT_EQ(b.total, price_market(legs, spec));
        EXPECT_EQ(b.armageddon_term, 0.0);
    }
}

TEST_F(AugustPricing, BreakdownInvariants) {
    const auto& legs = model().forward_legs;
    const auto adj = model().adjustment(0.95);
    const auto payer = price_noarb(legs, adj, model().option(0.03, Side::payer, 0.57), model().curve, 0.4);
    EXPECT_EQ(payer.total, payer.black_term + payer.armageddon_term + payer.realized_term);
    EXPECT_GE(payer.black_term, 0.0);
    EXPECT_NEAR(payer.armageddon_term, 0.6 * model().curve.discount(0.75) * adj.q_arm, 1e-16);
    EXPECT_EQ(payer.realized_term, 0.0);
    const auto receiver =
        price_noarb(legs, adj, model().option(0.03, Side::receiver, 0.57), model().curve, 0.4);
    EXPECT_EQ(receiver.armageddon_term, 0.0);
}

TEST_F(AugustPricing, AnchoredVolAndPayerDifference) {
    const auto& legs = model().forward_legs;
    const double vol = implied_vol(legs, model().option(0.03, Side::payer, 0.0), 559.60e-4);
    // independent pin: same legs built in a separate script, Brent inversion
    EXPECT_NEAR(vol, 0.5700166467841893, 1e-8);

    const auto spec = model().option(0.03, Side::payer, vol);
    const double market = price_market(legs, spec);
    EXPECT_NEAR(market, 559.60e-4, 1e-10);
    const double noarb = price_noarb(legs, model().adjustment(0.95), spec, model().curve, 0.4).total;
    EXPECT_NEAR((noarb - market) * 1e4, 13.2, 7.0);

    double prev = 1.0;
    for (double k = 0.03; k <= 0.04 + 1e-12; k += 0.0025) {
        const double price = price_market(legs, model().option(k, Side::payer, vol));
        EXPECT_LT(price, prev);
        prev = price;
    }
}

TEST_F(AugustPricing, OrderingDecomposition) {
    const auto& legs = model().forward_legs;
    for (double rho : {0.8, 0.9, 0.95}) {
        const auto adj = model().adjustment(rho);
        for (double k : {0.03, 0.035, 0.04}) {
            const auto spec = model().option(k, Side::payer, 0.57);
            const auto b = price_noarb(legs, adj, spec, model().curve, 0.4);
            const double market = price_market(legs, spec);
            EXPECT_LE(b.black_term, market);
            const double sd = 0.57 * std::sqrt(0.75);
            const double shift = legs.annuity * (black(market_adjusted_spread(legs), k, sd) -
                                                 black(adj.adjusted_spread, k, sd));
            EXPECT_NEAR(b.total - market, b.armageddon_term - shift, 1e-15);
        }
    }
}

TEST_F(AugustPricing, StrikeAndCorrelationMonotonicity) {
    const auto& legs = model().forward_legs;
    const double rhos[] = {0.0, 0.5, 0.8, 0.85, 0.9, 0.95, 0.99};
    for (double k = 0.025; k <= 0.05; k += 0.0025) {
        double prev = -1.0;
        for (double rho : rhos) {
            const double price =
                price_noarb(legs, model().adjustment(rho), model().option(k, Side::payer, 0.57), model().curve, 0.4)
                    .total;
            EXPECT_GE(price, prev - 1e-15) << k << ' ' << rho;
            prev = price;
        }
    }
    for (double rho : {0.0, 0.9}) {
        const auto adj = model().adjustment(rho);
        double prev_payer = 1.0;
        double prev_receiver = -1.0;
        for (double k = 0.02; k <= 0.06; k += 0.0025) {
            const double payer = price_noarb(legs, adj, model().option(k, Side::payer, 0.5), model().curve, 0.4).total;
            const double receiver =
                price_noarb(legs, adj, model().option(k, Side::receiver, 0.5), model().curve, 0.4).total;
            EXPECT_LE(payer, prev_payer);
            EXPECT_GE(receiver, prev_receiver);
            prev_payer = payer;
            prev_receiver = receiver;
        }
    }
}

TEST_F(AugustPricing, ImpliedVolRoundTripsBothFormulas) {
    const auto& legs = model().forward_legs;
    const auto adj = model().adjustment(0.9);
    for (Side side : {Side::payer, Side::receiver}) {
        for (double k : {0.03, 0.04, 0.05}) {
            for (double vol : {0.1, 0.5, 1.2}) {
                const auto spec = model().option(k, side, vol);
                EXPECT_NEAR(implied_vol(legs, spec, price_market(legs, spec)), vol, 1e-8);
                const double noarb = price_noarb(legs, adj, spec, model().curve, 0.4).total;
                EXPECT_NEAR(implied_vol(legs, adj, spec, model().curve, 0.4, noarb), vol, 1e-8);
            }
        }
    }
}

TEST_F(AugustPricing, ImpliedVolFailsOutsideAttainableRange) {
    const auto& legs = model().forward_legs;
    const auto spec = model().option(0.03, Side::payer, 0.0);
    const double intrinsic = legs.annuity * (market_adjusted_spread(legs) - 0.03);
    EXPECT_THROW(implied_vol(legs, spec, 0.5 * intrinsic), InversionError);
    EXPECT_THROW(implied_vol(legs, spec, 1.0), InversionError);
}
