#ifndef MRLB_AGENTS_HPP
#define MRLB_AGENTS_HPP

// Agent-based stochastic load balancing.
//
// Every task is an agent. In each cycle every overloaded node asks its agents
// how willing they are to leave, draws one candidate by roulette over the
// exponentially weighted answers, and the candidate then draws a destination
// node the same way from points derived from its requirements and the other
// nodes' remaining resources. Cycles repeat until the system is stable or the
// time/cycle budget runs out.
//
// Two variants share the pipeline:
//   - Ijiids08: cost-aware willingness, a bonus for agents that already moved,
//     and a home-node multiplier when picking the destination.
//   - Kesamsta07: willingness is the agent's demand on the overloaded
//     resources only; no cost term, no return bonus, no home multiplier.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mrlb/model.hpp"
#include "mrlb/random.hpp"
#include "mrlb/result.hpp"
#include "mrlb/selection.hpp"

namespace mrlb {

enum class AgentVariant { Ijiids08, Kesamsta07 };

inline std::string_view to_string(AgentVariant v) {
    return v == AgentVariant::Ijiids08 ? "ijiids08" : "kesamsta07";
}

struct StrategyConfig {
    double result_significance = kDefaultResultSignificance;
    double overload_weight = 1.0;  // alpha
    double cost_weight = 1.0;      // beta
    double return_bonus = 10.0;    // gamma
    std::chrono::milliseconds timeout{300'000};
    std::optional<std::uint64_t> max_cycles;  // nullopt = bounded by timeout only
    std::uint64_t seed = 42;

    void validate() const {
        check_significance(result_significance);
        if (overload_weight < 0 || cost_weight < 0 || return_bonus < 0)
            throw ConfigError("evaluation weights must be non-negative");
        if (timeout.count() <= 0) throw ConfigError("timeout must be positive");
        if (max_cycles && *max_cycles == 0) throw ConfigError("max_cycles must be positive");
    }
};

struct AgentState {
    TaskIndex task = 0;
    NodeIndex current_node = 0;
    NodeIndex home_node = 0;
    bool migrated_before = false;

    friend bool operator==(const AgentState&, const AgentState&) = default;
};

/// Willingness of an agent to leave its overloaded node (higher = more willing):
///   alpha * sum over overloaded i of min(r_i, -f_i)  -  beta * c  +  gamma * [migrated]
inline double agent_evaluation(const AgentState& agent, std::span<const Level> node_remaining,
                               const ProblemSpace& space, const StrategyConfig& config) {
    const auto& task = space.task(agent.task);
    Level relief = 0;
    for (std::size_t i = 0; i < node_remaining.size(); ++i) {
        if (node_remaining[i] < 0) relief += std::min(task.requirements[i], -node_remaining[i]);
    }
    return config.overload_weight * static_cast<double>(relief) -
           config.cost_weight * static_cast<double>(task.migration_cost) +
           (agent.migrated_before ? config.return_bonus : 0.0);
}

/// Requirements-only willingness: sum of r_i over the node's overloaded resources.
inline double kesamsta07_evaluation(const AgentState& agent, std::span<const Level> node_remaining,
                                    const ProblemSpace& space) {
    const auto& task = space.task(agent.task);
    Level demand = 0;
    for (std::size_t i = 0; i < node_remaining.size(); ++i) {
        if (node_remaining[i] < 0) demand += task.requirements[i];
    }
    return static_cast<double>(demand);
}

/// Picks the agent to migrate. `evaluations[k]` belongs to `agents[k]`; a
/// missing evaluation counts as 0.
inline const AgentState& select_candidate(std::span<const AgentState> agents,
                                          std::span<const std::optional<double>> evaluations,
                                          const StrategyConfig& config, RandomStream& rng) {
    if (agents.empty()) throw std::logic_error("overloaded node hosts no agents");
    if (evaluations.size() != agents.size())
        throw std::logic_error("one evaluation slot per agent is required");
    std::vector<double> scores;
    scores.reserve(agents.size());
    for (const auto& e : evaluations) scores.push_back(e.value_or(0.0));
    const auto pct = selection_percentages(scores, config.result_significance);
    return agents[roulette_select(pct, rng)];
}

inline const AgentState& kesamsta07_candidate(std::span<const AgentState> agents,
                                              std::span<const Level> node_remaining,
                                              const ProblemSpace& space, const StrategyConfig& config,
                                              RandomStream& rng) {
    std::vector<std::optional<double>> evaluations;
    evaluations.reserve(agents.size());
    for (const auto& a : agents) evaluations.emplace_back(kesamsta07_evaluation(a, node_remaining, space));
    return select_candidate(agents, evaluations, config, rng);
}

/// p(n) = sum_i r_i * f_i(n), multiplied by max(c, 1) when n is the home node
/// of an agent that has moved before (and the home bias is enabled).
inline double node_points(const TaskSpec& task, NodeIndex candidate_node, std::span<const Level> remaining,
                          NodeIndex current_node, NodeIndex home_node, bool migrated_before,
                          bool home_bias = true) {
    if (candidate_node == current_node)
        throw std::logic_error("the agent's current node is not a migration candidate");
    Level points = 0;
    for (std::size_t i = 0; i < remaining.size(); ++i) points += task.requirements[i] * remaining[i];
    double p = static_cast<double>(points);
    if (home_bias && migrated_before && candidate_node == home_node)
        p *= static_cast<double>(std::max<Cost>(task.migration_cost, 1));
    return p;
}

/// Draws a destination for `agent` among all nodes except its current one.
/// Returns nullopt when no other node exists.
inline std::optional<NodeIndex> select_target_node(const AgentState& agent, const ProblemSpace& space,
                                                   const std::vector<std::vector<Level>>& remaining,
                                                   const StrategyConfig& config, AgentVariant variant,
                                                   RandomStream& rng) {
    if (space.node_count() < 2) return std::nullopt;
    const auto& task = space.task(agent.task);
    std::vector<NodeIndex> candidates;
    std::vector<double> points;
    for (NodeIndex n = 0; n < space.node_count(); ++n) {
        if (n == agent.current_node) continue;
        candidates.push_back(n);
        points.push_back(node_points(task, n, remaining[n], agent.current_node, agent.home_node,
                                     agent.migrated_before, variant == AgentVariant::Ijiids08));
    }
    const auto pct = selection_percentages(points, config.result_significance);
    return candidates[roulette_select(pct, rng)];
}

/// Mutable state of one simulation run.
class AgentSimulation {
public:
    explicit AgentSimulation(const Scenario& scenario)
        : space_(&scenario.space),
          assignment_(scenario.initial),
          remaining_(remaining_table(scenario.space, scenario.initial)) {
        agents_.reserve(scenario.space.task_count());
        for (TaskIndex t = 0; t < scenario.space.task_count(); ++t) {
            const auto n = scenario.initial[t];
            agents_.push_back({t, n, n, false});
        }
    }

    const Assignment& assignment() const noexcept { return assignment_; }
    const std::vector<AgentState>& agents() const noexcept { return agents_; }
    const std::vector<std::vector<Level>>& remaining() const noexcept { return remaining_; }
    std::uint64_t cycle() const noexcept { return cycle_; }

    bool stable() const {
        return std::ranges::none_of(remaining_, [](const auto& row) { return is_overloaded(row); });
    }

    std::vector<NodeIndex> overloaded_nodes() const {
        std::vector<NodeIndex> out;
        for (NodeIndex n = 0; n < remaining_.size(); ++n) {
            if (is_overloaded(remaining_[n])) out.push_back(n);
        }
        return out;
    }

    /// One round: every node overloaded at the start of the round, in
    /// ascending index order, sends one agent away. Statistics are refreshed
    /// after each migration. Returns the migrations performed.
    std::vector<MigrationEvent> run_cycle(const StrategyConfig& config, AgentVariant variant,
                                          RandomStream& rng) {
        std::vector<MigrationEvent> events;
        for (const NodeIndex n : overloaded_nodes()) {
            std::vector<AgentState> local;
            for (const auto& a : agents_) {
                if (a.current_node == n) local.push_back(a);
            }
            const auto& f = remaining_[n];
            const AgentState* chosen = nullptr;
            if (variant == AgentVariant::Ijiids08) {
                std::vector<std::optional<double>> evaluations;
                evaluations.reserve(local.size());
                for (const auto& a : local) evaluations.emplace_back(agent_evaluation(a, f, *space_, config));
                chosen = &select_candidate(local, evaluations, config, rng);
            } else {
                chosen = &kesamsta07_candidate(local, f, *space_, config, rng);
            }
            const auto target = select_target_node(*chosen, *space_, remaining_, config, variant, rng);
            if (!target) break;
            events.push_back({cycle_, chosen->task, n, *target});
            migrate(chosen->task, *target);
        }
        ++cycle_;
        return events;
    }

private:
    void migrate(TaskIndex t, NodeIndex to) {
        auto& agent = agents_[t];
        const auto& r = space_->task(t).requirements;
        for (std::size_t i = 0; i < r.size(); ++i) {
            remaining_[agent.current_node][i] += r[i];
            remaining_[to][i] -= r[i];
        }
        agent.current_node = to;
        agent.migrated_before = true;
        assignment_.move(t, to);
    }

    const ProblemSpace* space_;
    Assignment assignment_;
    std::vector<std::vector<Level>> remaining_;
    std::vector<AgentState> agents_;
    std::uint64_t cycle_ = 0;
};

/// Runs cycles until the system is stable (Stable) or the timeout / cycle
/// budget is exhausted (NoSolution). Deterministic for a given seed unless the
/// wall-clock timeout cuts the run short.
inline StrategyResult run_strategy(const Scenario& scenario, const StrategyConfig& config,
                                   AgentVariant variant) {
    config.validate();
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const auto deadline = start + config.timeout;

    RandomStream rng(config.seed);
    AgentSimulation sim(scenario);
    StrategyResult result;

    while (!sim.stable()) {
        // a single node has nowhere to send its agents
        if (scenario.space.node_count() < 2) break;
        if (config.max_cycles && sim.cycle() >= *config.max_cycles) break;
        if (clock::now() >= deadline) break;
        auto events = sim.run_cycle(config, variant, rng);
        result.migrations.insert(result.migrations.end(), events.begin(), events.end());
    }

    result.status = sim.stable() ? RunStatus::Stable : RunStatus::NoSolution;
    result.final_assignment = sim.assignment();
    result.cost = transformation_cost(scenario.initial, result.final_assignment, scenario.space);
    result.cycles_run = sim.cycle();
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
    return result;
}

}  // namespace mrlb

#endif  // MRLB_AGENTS_HPP
