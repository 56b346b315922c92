#ifndef MRLB_BUILTIN_HPP
#define MRLB_BUILTIN_HPP

// The seven reference experiments: eight nodes (cpu, memory), 32 tasks, and
// one initial placement per experiment. Experiment N uses nodes 1..N+1 and
// tasks J01..J(4N+4); nodes outside that range do not exist in the scenario.

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mrlb/model.hpp"

namespace mrlb {

inline constexpr int kBuiltinCount = 7;

namespace detail {

struct NodeRow {
    Level cpu, memory;
};
struct TaskRow {
    Level cpu, memory;
    Cost cost;
};

inline constexpr std::array<NodeRow, 8> kNodes{{
    {40, 80}, {60, 40}, {50, 80}, {20, 50}, {40, 20}, {40, 40}, {30, 50}, {40, 20},
}};

inline constexpr std::array<TaskRow, 32> kTasks{{
    {4, 5, 4},   {14, 7, 5},  {10, 3, 4},  {16, 6, 7},   // J01-J04
    {14, 14, 10}, {18, 6, 3},  {4, 15, 6},  {11, 9, 6},  // J05-J08
    {5, 15, 4},  {7, 11, 4},  {17, 12, 8}, {5, 3, 6},    // J09-J12
    {4, 20, 4},  {2, 18, 5},  {16, 15, 1}, {14, 20, 9},  // J13-J16
    {2, 4, 5},   {9, 4, 5},   {12, 2, 7},  {8, 20, 1},   // J17-J20
    {11, 2, 7},  {20, 6, 2},  {2, 12, 5},  {6, 6, 3},    // J21-J24
    {1, 9, 4},   {3, 9, 10},  {9, 10, 2},  {6, 6, 8},    // J25-J28
    {1, 20, 6},  {7, 4, 5},   {11, 18, 4}, {17, 17, 10}, // J29-J32
}};

// initial placement per experiment: one list of task numbers per node
using Placement = std::vector<std::vector<int>>;

inline const std::array<Placement, 7>& placements() {
    static const std::array<Placement, 7> table{{
        {{1, 2, 3, 4, 6, 7}, {5, 8}},
        {{1, 3, 4, 6, 10, 11}, {2, 8, 9}, {5, 7, 12}},
        {{1, 4, 14, 16}, {8, 11, 12, 15}, {2, 3, 6, 7, 13}, {5, 9, 10}},
        {{1, 3, 4, 5, 9, 10, 17, 18}, {2, 6, 11}, {8, 12, 14, 15}, {7, 16}, {13, 19, 20}},
        {{1, 3, 4, 6, 16, 20}, {8, 9, 17, 18}, {7, 14, 19, 22}, {10, 11, 23, 24}, {2, 13}, {5, 12, 15, 21}},
        {{3, 6, 20, 26, 28},
         {4, 5},
         {1, 17, 21},
         {12, 16, 22, 24, 27},
         {2, 7, 10, 13, 14, 15, 18, 23, 25},
         {8, 11},
         {9, 19}},
        {{1, 4, 16},
         {11, 18, 27, 28},
         {2, 6, 7, 19},
         {5, 9, 10, 17, 24},
         {14, 31},
         {8, 12, 15, 21, 25, 30},
         {3, 13, 20, 22, 26, 29},
         {23, 32}},
    }};
    return table;
}

inline std::string numbered(const char* prefix, int k) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%s%02d", prefix, k);
    return buf;
}

}  // namespace detail

inline std::string builtin_node_id(int k) { return detail::numbered("Node", k); }
inline std::string builtin_task_id(int k) { return detail::numbered("J", k); }

/// The full eight-node, 32-task pool with every task on Node01. Handy as a
/// starting point for custom scenarios.
inline ProblemSpace builtin_pool() {
    std::vector<NodeSpec> nodes;
    for (int k = 1; k <= 8; ++k) {
        const auto& row = detail::kNodes[k - 1];
        nodes.push_back({builtin_node_id(k), {row.cpu, row.memory}});
    }
    std::vector<TaskSpec> tasks;
    for (int k = 1; k <= 32; ++k) {
        const auto& row = detail::kTasks[k - 1];
        tasks.push_back({builtin_task_id(k), {row.cpu, row.memory}, row.cost});
    }
    return ProblemSpace::from_names({"cpu", "memory"}, std::move(nodes), std::move(tasks));
}

/// Reference experiment 1..7 with only its available nodes and used tasks.
inline Scenario builtin_scenario(int test_number) {
    if (test_number < 1 || test_number > kBuiltinCount)
        throw InputError("built-in test number must be in 1.." + std::to_string(kBuiltinCount) + ", got " +
                         std::to_string(test_number));
    const auto& placement = detail::placements()[test_number - 1];

    std::vector<NodeSpec> nodes;
    for (std::size_t n = 0; n < placement.size(); ++n) {
        const auto& row = detail::kNodes[n];
        nodes.push_back({builtin_node_id(static_cast<int>(n) + 1), {row.cpu, row.memory}});
    }
    int max_task = 0;
    for (const auto& list : placement)
        for (int k : list) max_task = std::max(max_task, k);

    std::vector<TaskSpec> tasks;
    std::vector<NodeIndex> initial(static_cast<std::size_t>(max_task), NodeIndex(-1));
    for (int k = 1; k <= max_task; ++k) {
        const auto& row = detail::kTasks[k - 1];
        tasks.push_back({builtin_task_id(k), {row.cpu, row.memory}, row.cost});
    }
    for (std::size_t n = 0; n < placement.size(); ++n)
        for (int k : placement[n]) initial[k - 1] = n;

    auto space = ProblemSpace::from_names({"cpu", "memory"}, std::move(nodes), std::move(tasks));
    return Scenario(std::move(space), Assignment(std::move(initial)));
}

/// Known optimal transformation cost, where one is known (experiments 1-4).
inline std::optional<Cost> builtin_known_optimum(int test_number) {
    switch (test_number) {
        case 1: return 7;
        case 2: return 10;
        case 3: return 12;
        case 4: return 20;
        default: return std::nullopt;
    }
}

}  // namespace mrlb

#endif  // MRLB_BUILTIN_HPP
