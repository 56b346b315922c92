#ifndef MRLB_EXPERIMENT_HPP
#define MRLB_EXPERIMENT_HPP

#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mrlb/agents.hpp"
#include "mrlb/baselines.hpp"
#include "mrlb/model.hpp"

namespace mrlb {

enum class StrategyKind { Fullscan, Ijiids08, Kesamsta07, Greedy, Balance };

inline constexpr StrategyKind kAllStrategies[] = {StrategyKind::Fullscan, StrategyKind::Ijiids08,
                                                  StrategyKind::Kesamsta07, StrategyKind::Greedy,
                                                  StrategyKind::Balance};

inline std::string_view to_string(StrategyKind k) {
    switch (k) {
        case StrategyKind::Fullscan: return "fullscan";
        case StrategyKind::Ijiids08: return "ijiids08";
        case StrategyKind::Kesamsta07: return "kesamsta07";
        case StrategyKind::Greedy: return "greedy";
        case StrategyKind::Balance: return "balance";
    }
    return "?";
}

inline std::optional<StrategyKind> parse_strategy(std::string_view name) {
    for (auto k : kAllStrategies) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

inline bool is_stochastic(StrategyKind k) {
    return k == StrategyKind::Ijiids08 || k == StrategyKind::Kesamsta07;
}

struct ExperimentPlan {
    Scenario scenario;
    std::string name = "scenario";
    std::vector<StrategyKind> strategies;
    unsigned runs_per_stochastic_strategy = 5;
    std::uint64_t base_seed = 42;
    SearchBudget budget{std::chrono::milliseconds{300'000}, std::nullopt};
    SearchBudget fullscan_budget{std::chrono::milliseconds{600'000}, std::nullopt};
    StrategyConfig agent_config;  // seed and timeout are overridden per run; checked by the agent runs
    std::optional<Cost> known_optimal;

    void validate() const {
        if (runs_per_stochastic_strategy < 1) throw ConfigError("runs must be at least 1");
        if (budget.timeout.count() <= 0 || fullscan_budget.timeout.count() <= 0)
            throw ConfigError("timeouts must be positive");
    }
};

/// One execution of one strategy. `status` is "stable" / "no-solution" for
/// heuristics and "optimal" / "infeasible" / "timed-out" for fullscan.
struct RunRecord {
    std::optional<std::uint64_t> seed;
    std::string status;
    bool stable = false;
    std::optional<Cost> cost;
    std::uint64_t migrations = 0;
    std::uint64_t iterations = 0;  // cycles, moves, or search nodes
    std::optional<Assignment> final_assignment;
    std::chrono::nanoseconds elapsed{0};  // not serialised

    friend bool operator==(const RunRecord& a, const RunRecord& b) {
        return a.seed == b.seed && a.status == b.status && a.stable == b.stable && a.cost == b.cost &&
               a.migrations == b.migrations && a.iterations == b.iterations &&
               a.final_assignment == b.final_assignment;
    }
};

struct StrategyOutcome {
    StrategyKind strategy = StrategyKind::Fullscan;
    std::vector<RunRecord> runs;
    std::optional<std::string> error;

    friend bool operator==(const StrategyOutcome&, const StrategyOutcome&) = default;

    std::optional<Cost> best_cost() const {
        std::optional<Cost> best;
        for (const auto& r : runs) {
            if (r.stable && r.cost && (!best || *r.cost < *best)) best = r.cost;
        }
        return best;
    }
};

struct ExperimentReport {
    std::string name;
    Scenario scenario;
    Cost max_cost = 0;
    std::optional<Cost> known_optimal;
    std::vector<StrategyOutcome> outcomes;
    std::chrono::nanoseconds elapsed{0};  // not serialised

    friend bool operator==(const ExperimentReport& a, const ExperimentReport& b) {
        return a.name == b.name && a.scenario == b.scenario && a.max_cost == b.max_cost &&
               a.known_optimal == b.known_optimal && a.outcomes == b.outcomes;
    }
};

namespace detail {

inline RunRecord record_of(const StrategyResult& r, std::optional<std::uint64_t> seed) {
    RunRecord rec;
    rec.seed = seed;
    rec.status = std::string(to_string(r.status));
    rec.stable = r.status == RunStatus::Stable;
    rec.cost = r.cost;
    rec.migrations = r.migrations.size();
    rec.iterations = r.cycles_run;
    rec.final_assignment = r.final_assignment;
    rec.elapsed = r.elapsed;
    return rec;
}

inline RunRecord record_of(const OptimalResult& r) {
    RunRecord rec;
    rec.status = std::string(to_string(r.status));
    rec.stable = r.best.has_value();
    rec.cost = r.cost;
    rec.iterations = r.visited;
    rec.final_assignment = r.best;
    rec.elapsed = r.elapsed;
    return rec;
}

inline StrategyOutcome run_one_strategy(const ExperimentPlan& plan, StrategyKind kind) {
    StrategyOutcome out{kind, {}, std::nullopt};
    // every run works on its own copy of the scenario
    try {
        switch (kind) {
            case StrategyKind::Fullscan: {
                const Scenario copy = plan.scenario;
                out.runs.push_back(record_of(fullscan(copy, plan.fullscan_budget)));
                break;
            }
            case StrategyKind::Greedy: {
                const Scenario copy = plan.scenario;
                out.runs.push_back(record_of(greedy_solve(copy, plan.budget), std::nullopt));
                break;
            }
            case StrategyKind::Balance: {
                const Scenario copy = plan.scenario;
                out.runs.push_back(record_of(balance_solve(copy, plan.budget), std::nullopt));
                break;
            }
            case StrategyKind::Ijiids08:
            case StrategyKind::Kesamsta07: {
                const auto variant =
                    kind == StrategyKind::Ijiids08 ? AgentVariant::Ijiids08 : AgentVariant::Kesamsta07;
                for (unsigned k = 0; k < plan.runs_per_stochastic_strategy; ++k) {
                    const Scenario copy = plan.scenario;
                    StrategyConfig config = plan.agent_config;
                    config.seed = plan.base_seed + k;
                    config.timeout = plan.budget.timeout;
                    out.runs.push_back(record_of(run_strategy(copy, config, variant), config.seed));
                }
                break;
            }
        }
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

}  // namespace detail

/// Runs every planned strategy in declaration order. A failing strategy is
/// recorded in its outcome and does not stop the others.
inline ExperimentReport run_experiment(const ExperimentPlan& plan) {
    plan.validate();
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    report.name = plan.name;
    report.scenario = plan.scenario;
    report.max_cost = max_transformation_cost(plan.scenario.space);
    report.known_optimal = plan.known_optimal;
    for (const auto kind : plan.strategies) report.outcomes.push_back(detail::run_one_strategy(plan, kind));
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace mrlb

#endif  // MRLB_EXPERIMENT_HPP
