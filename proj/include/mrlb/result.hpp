#ifndef MRLB_RESULT_HPP
#define MRLB_RESULT_HPP

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mrlb/model.hpp"

namespace mrlb {

enum class RunStatus { Stable, NoSolution };

inline std::string_view to_string(RunStatus s) {
    return s == RunStatus::Stable ? "stable" : "no-solution";
}

struct MigrationEvent {
    std::uint64_t cycle = 0;
    TaskIndex task = 0;
    NodeIndex from_node = 0;
    NodeIndex to_node = 0;

    friend bool operator==(const MigrationEvent&, const MigrationEvent&) = default;
};

/// Outcome of a heuristic run. `cost` is always transformation_cost(initial, final_assignment).
struct StrategyResult {
    RunStatus status = RunStatus::NoSolution;
    Assignment final_assignment;
    Cost cost = 0;
    std::vector<MigrationEvent> migrations;
    std::uint64_t cycles_run = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Applies a migration log to `initial`; used to audit results.
inline Assignment replay(const Assignment& initial, const std::vector<MigrationEvent>& log) {
    Assignment mu = initial;
    for (const auto& e : log) {
        if (mu.node_of(e.task) != e.from_node)
            throw InputError("migration log is inconsistent at cycle " + std::to_string(e.cycle));
        mu.move(e.task, e.to_node);
    }
    return mu;
}

}  // namespace mrlb

#endif  // MRLB_RESULT_HPP
