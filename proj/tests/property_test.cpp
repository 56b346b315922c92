// Randomised invariants over generated instances. Generators are seeded, so
// failures reproduce.

#include <gtest/gtest.h>

#include <algorithm>

#include "mrlb/agents.hpp"
#include "mrlb/baselines.hpp"
#include "test_support.hpp"

using namespace mrlb;

namespace {

constexpr int kCases = 300;
const testkit::InstanceShape kWide{4, 10, 3, 40, 15, 10};

}  // namespace

TEST(ModelProperties, StableIffNoNegativeRemainder) {
    RandomStream rng(1);
    for (int i = 0; i < kCases; ++i) {
        const auto sc = testkit::random_scenario(rng, kWide);
        const auto mu = testkit::random_assignment(rng, sc.space);
        Level lowest = 0;
        for (NodeIndex n = 0; n < sc.space.node_count(); ++n)
            for (Level v : remaining_resources(sc.space, mu, n)) lowest = std::min(lowest, v);
        EXPECT_EQ(is_stable(sc.space, mu), lowest >= 0);
    }
}

TEST(ModelProperties, CostIsZeroOnSelfSymmetricAndBounded) {
    RandomStream rng(2);
    for (int i = 0; i < kCases; ++i) {
        const auto sc = testkit::random_scenario(rng, kWide);
        const auto a = testkit::random_assignment(rng, sc.space);
        const auto b = testkit::random_assignment(rng, sc.space);
        EXPECT_EQ(transformation_cost(a, a, sc.space), 0);
        EXPECT_EQ(transformation_cost(a, b, sc.space), transformation_cost(b, a, sc.space));
        EXPECT_LE(transformation_cost(a, b, sc.space), max_transformation_cost(sc.space));
        EXPECT_GE(transformation_cost(a, b, sc.space), 0);
    }
}

TEST(ModelProperties, ReturningHomeIsFree) {
    RandomStream rng(3);
    for (int i = 0; i < kCases; ++i) {
        const auto sc = testkit::random_scenario(rng, kWide);
        if (sc.space.task_count() == 0 || sc.space.node_count() < 2) continue;
        auto mu = sc.initial;
        const TaskIndex t = rng.below(sc.space.task_count());
        const NodeIndex home = mu[t];
        mu.move(t, (home + 1) % sc.space.node_count());
        EXPECT_EQ(transformation_cost(sc.initial, mu, sc.space), sc.space.task(t).migration_cost);
        mu.move(t, (home + 2) % sc.space.node_count());
        mu.move(t, home);
        EXPECT_EQ(transformation_cost(sc.initial, mu, sc.space), 0);
    }
}

TEST(ModelProperties, ResourcesAreConserved) {
    RandomStream rng(4);
    for (int i = 0; i < kCases; ++i) {
        const auto sc = testkit::random_scenario(rng, kWide);
        const auto mu = testkit::random_assignment(rng, sc.space);
        for (std::size_t r = 0; r < sc.space.dimension(); ++r) {
            Level sum_f = 0, capacity = 0, demand = 0;
            for (NodeIndex n = 0; n < sc.space.node_count(); ++n) {
                sum_f += remaining_resources(sc.space, mu, n)[r];
                capacity += sc.space.node(n).capacities[r];
            }
            for (const auto& t : sc.space.tasks()) demand += t.requirements[r];
            EXPECT_EQ(sum_f, capacity - demand);
        }
    }
}

TEST(SelectionProperties, ExpTransformPositiveAndIncreasing) {
    RandomStream rng(5);
    for (int i = 0; i < 10000; ++i) {
        const double s = 1.0 + 1e-3 + rng.uniform01();
        const double x = (rng.uniform01() - 0.5) * 400.0;
        const double dx = 1e-3 + rng.uniform01() * 10.0;
        EXPECT_GT(exp_transform(x, s), 0.0);
        EXPECT_LT(exp_transform(x, s), exp_transform(x + dx, s));
    }
}

TEST(SelectionProperties, NormaliseSumsTo100) {
    RandomStream rng(6);
    for (int i = 0; i < 10000; ++i) {
        std::vector<double> v(1 + rng.below(20));
        for (auto& x : v) x = 1e-6 + rng.uniform01() * std::pow(10.0, static_cast<double>(rng.below(8)));
        const auto pct = normalize_to_100(v);
        double sum = 0;
        for (double p : pct) sum += p;
        EXPECT_NEAR(sum, 100.0, 1e-9);
    }
}

TEST(SelectionProperties, RouletteFrequenciesWithinOnePoint) {
    RandomStream gen(7);
    for (int trial = 0; trial < 10; ++trial) {
        // weights with every entry at least 5%
        const std::size_t k = 2 + gen.below(6);
        std::vector<double> raw(k);
        for (auto& w : raw) w = 1.0 + gen.uniform01() * 3.0;
        auto pct = normalize_to_100(raw);
        if (*std::ranges::min_element(pct) < 5.0) continue;
        RandomStream rng(100 + trial);
        std::vector<int> counts(k, 0);
        constexpr int kDraws = 100000;
        for (int i = 0; i < kDraws; ++i) ++counts[roulette_select(pct, rng)];
        for (std::size_t j = 0; j < k; ++j) EXPECT_NEAR(100.0 * counts[j] / kDraws, pct[j], 1.0);
    }
}

TEST(AgentProperties, LogsReplayAndResultsAreConsistent) {
    RandomStream rng(8);
    for (int i = 0; i < 200; ++i) {
        const auto sc = testkit::random_scenario(rng, kWide);
        for (auto variant : {AgentVariant::Ijiids08, AgentVariant::Kesamsta07}) {
            StrategyConfig cfg;
            cfg.seed = i;
            cfg.max_cycles = 200;
            const auto r = run_strategy(sc, cfg, variant);
            for (const auto& e : r.migrations) EXPECT_NE(e.from_node, e.to_node);
            EXPECT_EQ(replay(sc.initial, r.migrations), r.final_assignment);
            EXPECT_EQ(r.cost, transformation_cost(sc.initial, r.final_assignment, sc.space));
            EXPECT_EQ(r.status == RunStatus::Stable, is_stable(sc.space, r.final_assignment));

            const auto again = run_strategy(sc, cfg, variant);
            EXPECT_EQ(again.migrations, r.migrations);
        }
    }
}

TEST(AgentProperties, TargetIsNeverTheCurrentNode) {
    RandomStream gen(9);
    for (int i = 0; i < kCases; ++i) {
        const auto sc = testkit::random_scenario(gen, kWide);
        if (sc.space.task_count() == 0 || sc.space.node_count() < 2) continue;
        const auto f = remaining_table(sc.space, sc.initial);
        RandomStream rng(i);
        const TaskIndex t = gen.below(sc.space.task_count());
        const AgentState a{t, sc.initial[t], gen.below(sc.space.node_count()), gen.below(2) == 1};
        for (int d = 0; d < 50; ++d) {
            const auto target = select_target_node(a, sc.space, f, StrategyConfig{}, AgentVariant::Ijiids08, rng);
            ASSERT_TRUE(target);
            EXPECT_NE(*target, a.current_node);
        }
    }
}

TEST(BaselineProperties, FullscanBoundsEveryStableResult) {
    RandomStream rng(10);
    for (int i = 0; i < 200; ++i) {
        const auto sc = testkit::random_scenario(rng);
        const auto exact = fullscan(sc);
        std::vector<StrategyResult> others{greedy_solve(sc), balance_solve(sc)};
        StrategyConfig cfg;
        cfg.seed = i;
        cfg.max_cycles = 100;
        others.push_back(run_strategy(sc, cfg, AgentVariant::Ijiids08));
        others.push_back(run_strategy(sc, cfg, AgentVariant::Kesamsta07));
        for (const auto& r : others) {
            if (r.status != RunStatus::Stable) continue;
            ASSERT_EQ(exact.status, OptimalStatus::Optimal);
            EXPECT_LE(*exact.cost, r.cost);
            EXPECT_TRUE(is_stable(sc.space, r.final_assignment));
        }
    }
}
