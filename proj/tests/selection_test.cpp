#include <gtest/gtest.h>

#include <numeric>

#include "mrlb/selection.hpp"

using namespace mrlb;

TEST(ExpTransform, ZeroExponentIsOne) { EXPECT_DOUBLE_EQ(exp_transform(0, 1.02), 1.0); }

TEST(ExpTransform, DirectEvaluations) {
    EXPECT_NEAR(exp_transform(35, 1.02), 1.99989, 1e-4);
    EXPECT_NEAR(exp_transform(-50, 1.02), 0.37153, 1e-4);
}

TEST(ExpTransform, BaseMustExceedOne) {
    EXPECT_THROW(exp_transform(1, 1.0), ConfigError);
    EXPECT_THROW(exp_transform(1, 0.5), ConfigError);
    EXPECT_THROW(exp_transform(1, -2.0), ConfigError);
}

TEST(NormalizeTo100, SmallVectors) {
    EXPECT_EQ(normalize_to_100(std::vector<double>{1, 1, 2}), (std::vector<double>{25, 25, 50}));
    EXPECT_EQ(normalize_to_100(std::vector<double>{5}), (std::vector<double>{100}));
    EXPECT_EQ(normalize_to_100(std::vector<double>{2, 3}), (std::vector<double>{40, 60}));
}

TEST(NormalizeTo100, EmptyOrNonPositiveRejected) {
    EXPECT_THROW(normalize_to_100(std::vector<double>{}), InputError);
    EXPECT_THROW(normalize_to_100(std::vector<double>{1, 0}), InputError);
}

TEST(SelectionPercentages, MatchesNaivePipeline) {
    const std::vector<double> scores{-12, 0, 3.5, 35, 7};
    std::vector<double> weights;
    for (double x : scores) weights.push_back(exp_transform(x, 1.02));
    const auto naive = normalize_to_100(weights);
    const auto stable = selection_percentages(scores, 1.02);
    ASSERT_EQ(naive.size(), stable.size());
    for (std::size_t k = 0; k < naive.size(); ++k) EXPECT_NEAR(naive[k], stable[k], 1e-9);
}

TEST(SelectionPercentages, HugePointValuesDoNotOverflow) {
    // 1.02^100000 overflows a double; the shifted form still yields a distribution
    const auto pct = selection_percentages(std::vector<double>{100000, 99990}, 1.02);
    EXPECT_NEAR(pct[0] + pct[1], 100.0, 1e-9);
    EXPECT_NEAR(pct[0] / pct[1], std::pow(1.02, 10), 1e-9);
}

TEST(RouletteSelect, SingleSlotAlwaysWins) {
    RandomStream rng(3);
    for (int i = 0; i < 1000; ++i) EXPECT_EQ(roulette_select(std::vector<double>{100}, rng), 0u);
}

TEST(RouletteSelect, DegenerateWeightAlmostAlwaysLosesTheDraw) {
    const auto pct = selection_percentages(std::vector<double>{-2000, 0}, 1.02);
    RandomStream rng(11);
    int second = 0;
    for (int i = 0; i < 10000; ++i) second += roulette_select(pct, rng) == 1;
    EXPECT_EQ(second, 10000);
}

TEST(RouletteSelect, FairCoinWithinBinomialBounds) {
    RandomStream rng(2024);
    const std::vector<double> pct{50, 50};
    int counts[2] = {0, 0};
    for (int i = 0; i < 100000; ++i) ++counts[roulette_select(pct, rng)];
    EXPECT_GE(counts[0], 49000);
    EXPECT_LE(counts[0], 51000);
    EXPECT_GE(counts[1], 49000);
    EXPECT_LE(counts[1], 51000);
}

TEST(RouletteSelect, SameSeedSameSequence) {
    const std::vector<double> pct{10, 20, 30, 40};
    RandomStream a(99), b(99);
    for (int i = 0; i < 500; ++i) EXPECT_EQ(roulette_select(pct, a), roulette_select(pct, b));
}

TEST(RandomStream, UnitIntervalAndBelow) {
    RandomStream rng(1);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_LT(rng.below(7), 7u);
    }
}
