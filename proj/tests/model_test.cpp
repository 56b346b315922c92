#include <gtest/gtest.h>

#include "mrlb/builtin.hpp"
#include "mrlb/model.hpp"
#include "test_support.hpp"

using namespace mrlb;

namespace {

Assignment with_moves(const Scenario& sc, std::initializer_list<std::pair<const char*, const char*>> moves) {
    Assignment mu = sc.initial;
    for (const auto& [task, node] : moves) mu.move(sc.space.task_index(task), sc.space.node_index(node));
    return mu;
}

}  // namespace

TEST(RemainingResources, Test1Node01IsCpuOverloaded) {
    const auto sc = builtin_scenario(1);
    // J01+J02+J03+J04+J06+J07 = (66, 42) against capacity (40, 80)
    EXPECT_EQ(remaining_resources(sc.space, sc.initial, "Node01"), (std::vector<Level>{-26, 38}));
}

TEST(RemainingResources, EmptyNodeKeepsFullCapacity) {
    const auto sc = testkit::tiny({10, 7}, {{3, 1}}, {0});
    EXPECT_EQ(remaining_resources(sc.space, sc.initial, NodeIndex{1}), (std::vector<Level>{7}));
}

TEST(RemainingResources, ExactFitIsZero) {
    const auto space = ProblemSpace::from_names({"cpu", "mem"}, {{"A", {5, 9}}}, {{"t", {5, 9}, 2}});
    EXPECT_EQ(remaining_resources(space, Assignment({0}), "A"), (std::vector<Level>{0, 0}));
}

TEST(RemainingResources, UnknownNodeIsAnInputError) {
    const auto sc = builtin_scenario(1);
    EXPECT_THROW(remaining_resources(sc.space, sc.initial, "Node09"), InputError);
    EXPECT_THROW(remaining_resources(sc.space, sc.initial, NodeIndex{5}), InputError);
}

TEST(Stability, Test1InitialIsOverloaded) {
    const auto sc = builtin_scenario(1);
    EXPECT_FALSE(is_stable(sc.space, sc.initial));
}

TEST(Stability, NoTasksIsStable) {
    const auto space = ProblemSpace::from_names({"cpu"}, {{"A", {0}}}, {});
    EXPECT_TRUE(is_stable(space, Assignment{}));
}

TEST(Stability, Test1WithJ03AndJ06OnNode02IsStable) {
    const auto sc = builtin_scenario(1);
    const auto mu = with_moves(sc, {{"J03", "Node02"}, {"J06", "Node02"}});
    EXPECT_TRUE(is_stable(sc.space, mu));
    EXPECT_EQ(remaining_resources(sc.space, mu, "Node01"), (std::vector<Level>{2, 47}));
    EXPECT_EQ(remaining_resources(sc.space, mu, "Node02"), (std::vector<Level>{7, 8}));
}

TEST(Stability, ZeroCapacityAndZeroRequirementAreLegal) {
    const auto space = ProblemSpace::from_names({"cpu"}, {{"A", {0}}}, {{"t", {0}, 0}});
    EXPECT_TRUE(is_stable(space, Assignment({0})));
}

TEST(TransformationCost, IdenticalAssignmentsCostNothing) {
    const auto sc = builtin_scenario(1);
    EXPECT_EQ(transformation_cost(sc.initial, sc.initial, sc.space), 0);
}

TEST(TransformationCost, Test1OptimalMoveSet) {
    const auto sc = builtin_scenario(1);
    const auto mu = with_moves(sc, {{"J03", "Node02"}, {"J06", "Node02"}});
    EXPECT_EQ(transformation_cost(sc.initial, mu, sc.space), 7);
}

TEST(TransformationCost, Test1AllTasksMoved) {
    const auto sc = builtin_scenario(1);
    std::vector<NodeIndex> flipped;
    for (auto n : sc.initial.raw()) flipped.push_back(1 - n);
    EXPECT_EQ(transformation_cost(sc.initial, Assignment(flipped), sc.space), 45);
}

TEST(TransformationCost, MismatchedTaskSetsAreRejected) {
    const auto sc = builtin_scenario(1);
    EXPECT_THROW(transformation_cost(sc.initial, Assignment({0, 1}), sc.space), InputError);
}

TEST(MaxTransformationCost, BuiltinRows) {
    EXPECT_EQ(max_transformation_cost(builtin_scenario(2).space), 67);
    EXPECT_EQ(max_transformation_cost(builtin_scenario(7).space), 170);
    EXPECT_EQ(max_transformation_cost(ProblemSpace::from_names({"cpu"}, {{"A", {1}}}, {})), 0);
}

TEST(ProblemSpace, RejectsDuplicatesAndBadDimensions) {
    EXPECT_THROW(ProblemSpace::from_names({"cpu"}, {{"A", {1}}, {"A", {2}}}, {}), InputError);
    EXPECT_THROW(ProblemSpace::from_names({"cpu"}, {{"A", {1, 2}}}, {}), InputError);
    EXPECT_THROW(ProblemSpace::from_names({"cpu"}, {{"A", {1}}}, {{"t", {1}, 1}, {"t", {1}, 1}}), InputError);
    EXPECT_THROW(ProblemSpace::from_names({"cpu", "cpu"}, {}, {}), InputError);
    EXPECT_THROW(ProblemSpace::from_names({"cpu"}, {{"A", {-1}}}, {}), InputError);
}

TEST(Assignment, FromPairsNamesTheOffendingTask) {
    const auto sc = builtin_scenario(1);
    std::vector<std::pair<std::string, std::string>> pairs{{"J01", "Node01"}};
    try {
        Assignment::from_pairs(sc.space, pairs);
        FAIL() << "expected an InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("J02"), std::string::npos);
    }
}

TEST(Scenario, RejectsAssignmentToMissingNode) {
    auto space = ProblemSpace::from_names({"cpu"}, {{"A", {1}}}, {{"t", {1}, 1}});
    EXPECT_THROW(Scenario(space, Assignment({3})), InputError);
}
