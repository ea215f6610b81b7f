#include <gtest/gtest.h>

#include <cmath>

#include "cio/copula.hpp"
#include "cio/mc_oracle.hpp"

using namespace cio;

namespace {

const CopulaParams kAugust{.rho = 0.95, .n_names = 50, .default_prob = 0.04412};

}  // namespace

TEST(McArmageddon, ComonotoneIsExact) {
    const CopulaParams params{.rho = 1.0, .n_names = 50, .default_prob = 0.0441};
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto est = simulate_armageddon(params, {.n_paths = 20'000, .seed = seed});
        EXPECT_EQ(est.mean, 0.0441);
        EXPECT_EQ(est.std_error, 0.0);
    }
}

TEST(McArmageddon, ZeroDefaultProbability) {
    const CopulaParams params{.rho = 0.5, .n_names = 50, .default_prob = 0.0};
    const auto est = simulate_armageddon(params, {.n_paths = 10'000});
    EXPECT_EQ(est.mean, 0.0);
    EXPECT_EQ(est.std_error, 0.0);
    const auto loss = simulate_loss_given_no_armageddon(params, {.n_paths = 10'000}, 0.4);
    EXPECT_EQ(loss.mean, 0.0);
    EXPECT_EQ(loss.std_error, 0.0);
}

TEST(McArmageddon, AgreesWithQuadratureAtAugustParams) {
    const auto est = simulate_armageddon(kAugust, {.n_paths = 1'000'000, .seed = 11});
    const double reference = armageddon_prob(kAugust);
    EXPECT_GT(est.std_error, 0.0);
    EXPECT_LT(std::abs(est.mean - reference), 3.0 * est.std_error);
}

TEST(McArmageddon, GridAgreement) {
    for (double rho : {0.3, 0.6, 0.8, 0.9}) {
        for (double p : {0.03, 0.1}) {
            for (int n : {5, 50}) {
                const CopulaParams params{.rho = rho, .n_names = n, .default_prob = p};
                const auto est = simulate_armageddon(params, {.n_paths = 200'000, .seed = 5});
                const double reference = armageddon_prob(params);
                if (est.std_error == 0.0) {
                    EXPECT_LT(reference, 1e-6);
                    continue;
                }
                EXPECT_LT(std::abs(est.mean - reference), 3.0 * est.std_error)
                    << rho << ' ' << p << ' ' << n;
            }
        }
    }
}

TEST(McArmageddon, ReproducibleAndThreadIndependent) {
    const McConfig one{.n_paths = 100'001, .seed = 99, .threads = 1};
    McConfig four = one;
    four.threads = 4;
    const auto a = simulate_armageddon(kAugust, one);
    const auto b = simulate_armageddon(kAugust, one);
    const auto c = simulate_armageddon(kAugust, four);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_EQ(a.mean, c.mean);
    EXPECT_EQ(a.std_error, c.std_error);
    EXPECT_EQ(a.n_paths, 100'001u);

    const auto la = simulate_loss_given_no_armageddon(kAugust, one, 0.4);
    const auto lc = simulate_loss_given_no_armageddon(kAugust, four, 0.4);
    EXPECT_EQ(la.mean, lc.mean);

    const auto d = simulate_armageddon(kAugust, {.n_paths = 100'001, .seed = 100});
    EXPECT_NE(a.mean, d.mean);
}

TEST(McArmageddon, StdErrorScalesWithInverseRootPaths) {
    const auto small = simulate_armageddon(kAugust, {.n_paths = 100'000, .seed = 3});
    const auto large = simulate_armageddon(kAugust, {.n_paths = 1'000'000, .seed = 4});
    EXPECT_NEAR(small.std_error / large.std_error, std::sqrt(10.0), 0.2 * std::sqrt(10.0));
    const double combined = std::hypot(small.std_error, large.std_error);
    EXPECT_LT(std::abs(small.mean - large.mean), 4.0 * combined);
}

TEST(McLoss, AntitheticDoesNotIncreaseError) {
    for (double rho : {0.3, 0.6, 0.8, 0.95}) {
        const CopulaParams params{.rho = rho, .n_names = 50, .default_prob = 0.0441};
        const auto plain = simulate_loss_given_no_armageddon(params, {.n_paths = 400'000, .seed = 8}, 0.4);
        const auto anti =
            simulate_loss_given_no_armageddon(params, {.n_paths = 400'000, .seed = 8, .antithetic = true}, 0.4);
        EXPECT_LE(anti.std_error, plain.std_error) << rho;
    }
}

// A rare all-default event is almost never hit by both members of a pair, so
// antithetic sampling is neutral here up to the noise of the error estimate.
TEST(McArmageddon, AntitheticErrorWithinNoiseOfPlain) {
    for (double rho : {0.6, 0.8, 0.95}) {
        const CopulaParams params{.rho = rho, .n_names = 50, .default_prob = 0.0441};
        const auto plain = simulate_armageddon(params, {.n_paths = 400'000, .seed = 8});
        const auto anti = simulate_armageddon(params, {.n_paths = 400'000, .seed = 8, .antithetic = true});
        EXPECT_LE(anti.std_error, 1.05 * plain.std_error) << rho;
    }
}

TEST(McLoss, SingleNameLossAndSurvivalAreExclusive) {
    const CopulaParams params{.rho = 0.5, .n_names = 1, .default_prob = 0.05};
    const auto est = simulate_loss_given_no_armageddon(params, {.n_paths = 50'000}, 0.4);
    EXPECT_EQ(est.mean, 0.0);
    EXPECT_EQ(est.std_error, 0.0);
}

TEST(McLoss, IndependentLargePortfolioMatchesExpectedLoss) {
    const CopulaParams params{.rho = 0.0, .n_names = 125, .default_prob = 0.05};
    const auto est = simulate_loss_given_no_armageddon(params, {.n_paths = 200'000, .seed = 2}, 0.4);
    EXPECT_LT(std::abs(est.mean - 0.6 * 0.05), 3.0 * est.std_error);
}

TEST(McLoss, AugustMatchesDecomposition) {
    const auto est = simulate_loss_given_no_armageddon(kAugust, {.n_paths = 1'000'000, .seed = 21}, 0.4);
    const double closed = 0.6 * kAugust.default_prob - 0.6 * armageddon_prob(kAugust);
    EXPECT_LT(std::abs(est.mean - closed), 3.0 * est.std_error);
}
