#ifndef MRLB_TESTS_TEST_SUPPORT_HPP
#define MRLB_TESTS_TEST_SUPPORT_HPP

#include <string>
#include <vector>

#include "mrlb/model.hpp"
#include "mrlb/random.hpp"

namespace mrlb::testkit {

struct InstanceShape {
    std::size_t max_nodes = 3;
    std::size_t max_tasks = 6;
    std::size_t dimension = 2;
    Level max_capacity = 30;
    Level max_requirement = 15;
    Cost max_cost = 10;
};

/// Random scenario with 1..max_nodes nodes and 0..max_tasks tasks.
inline Scenario random_scenario(RandomStream& rng, const InstanceShape& shape = {}) {
    const std::size_t m = 1 + rng.below(shape.max_nodes);
    const std::size_t l = rng.below(shape.max_tasks + 1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < shape.dimension; ++i) names.push_back("r" + std::to_string(i));
    std::vector<NodeSpec> nodes;
    for (std::size_t n = 0; n < m; ++n) {
        NodeSpec node{"N" + std::to_string(n), {}};
        for (std::size_t i = 0; i < shape.dimension; ++i)
            node.capacities.push_back(static_cast<Level>(rng.below(shape.max_capacity + 1)));
        nodes.push_back(std::move(node));
    }
    std::vector<TaskSpec> tasks;
    std::vector<NodeIndex> initial;
    for (std::size_t t = 0; t < l; ++t) {
        TaskSpec task{"T" + std::to_string(t), {}, static_cast<Cost>(rng.below(shape.max_cost + 1))};
        for (std::size_t i = 0; i < shape.dimension; ++i)
            task.requirements.push_back(static_cast<Level>(rng.below(shape.max_requirement + 1)));
        tasks.push_back(std::move(task));
        initial.push_back(rng.below(m));
    }
    return Scenario(ProblemSpace::from_names(names, std::move(nodes), std::move(tasks)),
                    Assignment(std::move(initial)));
}

/// Random assignment for an existing space.
inline Assignment random_assignment(RandomStream& rng, const ProblemSpace& space) {
    std::vector<NodeIndex> v;
    for (std::size_t t = 0; t < space.task_count(); ++t) v.push_back(rng.below(space.node_count()));
    return Assignment(std::move(v));
}

/// Two nodes, one resource; used by small hand-built cases.
inline Scenario tiny(std::vector<Level> capacities, std::vector<std::pair<Level, Cost>> tasks,
                     std::vector<NodeIndex> initial) {
    std::vector<NodeSpec> nodes;
    for (std::size_t n = 0; n < capacities.size(); ++n) nodes.push_back({"N" + std::to_string(n), {capacities[n]}});
    std::vector<TaskSpec> ts;
    for (std::size_t t = 0; t < tasks.size(); ++t)
        ts.push_back({"T" + std::to_string(t), {tasks[t].first}, tasks[t].second});
    return Scenario(ProblemSpace::from_names({"cpu"}, std::move(nodes), std::move(ts)), Assignment(std::move(initial)));
}

}  // namespace mrlb::testkit

#endif  // MRLB_TESTS_TEST_SUPPORT_HPP
