#ifndef MRLB_BASELINES_HPP
#define MRLB_BASELINES_HPP

// Reference strategies: an exact branch-and-bound search (fullscan), a naive
// enumerator used to cross-check it, and two deterministic move heuristics
// (greedy, balance).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string_view>
#include <vector>

#include "mrlb/model.hpp"
#include "mrlb/result.hpp"

namespace mrlb {

struct SearchBudget {
    std::chrono::milliseconds timeout{600'000};
    std::optional<std::uint64_t> node_visit_limit;
};

enum class OptimalStatus { Optimal, Infeasible, TimedOut };

inline std::string_view to_string(OptimalStatus s) {
    switch (s) {
        case OptimalStatus::Optimal: return "optimal";
        case OptimalStatus::Infeasible: return "infeasible";
        case OptimalStatus::TimedOut: return "timed-out";
    }
    return "?";
}

struct OptimalResult {
    OptimalStatus status = OptimalStatus::Infeasible;
    std::optional<Assignment> best;  // on TimedOut: the incumbent, if any
    std::optional<Cost> cost;
    std::uint64_t visited = 0;
    std::chrono::nanoseconds elapsed{0};
};

namespace detail {

inline constexpr std::uint64_t kClockCheckInterval = 4096;

class FullscanSearch {
public:
    FullscanSearch(const Scenario& scenario, const SearchBudget& budget)
        : space_(scenario.space),
          initial_(scenario.initial),
          budget_(budget),
          deadline_(std::chrono::steady_clock::now() + budget.timeout),
          current_(scenario.initial) {
        order_.resize(space_.task_count());
        std::iota(order_.begin(), order_.end(), TaskIndex{0});
        std::ranges::stable_sort(order_, [&](TaskIndex a, TaskIndex b) {
            return space_.task(a).migration_cost > space_.task(b).migration_cost;
        });
        for (const auto& n : space_.nodes()) free_.push_back(n.capacities);

        // pending_home_[n] = demand of not-yet-placed tasks whose initial node is n
        pending_home_.assign(space_.node_count(), std::vector<Level>(space_.dimension(), 0));
        for (TaskIndex t = 0; t < space_.task_count(); ++t) add_pending(t, +1);
    }

    OptimalResult run() {
        const auto start = std::chrono::steady_clock::now();
        descend(0, 0);
        OptimalResult out;
        out.visited = visited_;
        if (best_) {
            out.best = best_;
            out.cost = best_cost_;
        }
        if (aborted_) {
            out.status = OptimalStatus::TimedOut;
        } else {
            out.status = best_ ? OptimalStatus::Optimal : OptimalStatus::Infeasible;
        }
        out.elapsed = std::chrono::steady_clock::now() - start;
        return out;
    }

private:
    void add_pending(TaskIndex t, int sign) {
        const auto& r = space_.task(t).requirements;
        auto& row = pending_home_[initial_[t]];
        for (std::size_t i = 0; i < r.size(); ++i) row[i] += sign * r[i];
    }

    // A node whose pending home tasks no longer fit must shed at least one of
    // them, so the cheapest such task bounds the remaining cost from below.
    // Home sets of distinct nodes are disjoint, hence the bounds add up.
    Cost lower_bound(std::size_t depth) const {
        Cost bound = 0;
        for (NodeIndex n = 0; n < space_.node_count(); ++n) {
            bool overflows = false;
            for (std::size_t i = 0; i < space_.dimension(); ++i) {
                if (pending_home_[n][i] > free_[n][i]) {
                    overflows = true;
                    break;
                }
            }
            if (!overflows) continue;
            Cost cheapest = std::numeric_limits<Cost>::max();
            for (std::size_t k = depth; k < order_.size(); ++k) {
                const TaskIndex t = order_[k];
                if (initial_[t] == n) cheapest = std::min(cheapest, space_.task(t).migration_cost);
            }
            bound += cheapest;
        }
        return bound;
    }

    bool out_of_budget() {
        if (budget_.node_visit_limit && visited_ >= *budget_.node_visit_limit) return true;
        if (visited_ % kClockCheckInterval == 0 && std::chrono::steady_clock::now() >= deadline_) return true;
        return false;
    }

    bool fits(TaskIndex t, NodeIndex n) const {
        const auto& r = space_.task(t).requirements;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] > free_[n][i]) return false;
        }
        return true;
    }

    void place(TaskIndex t, NodeIndex n, int sign) {
        const auto& r = space_.task(t).requirements;
        for (std::size_t i = 0; i < r.size(); ++i) free_[n][i] -= sign * r[i];
    }

    void descend(std::size_t depth, Cost partial) {
        if (aborted_) return;
        ++visited_;
        if (out_of_budget()) {
            aborted_ = true;
            return;
        }
        if (best_ && partial + lower_bound(depth) >= best_cost_) return;
        if (depth == order_.size()) {
            best_ = current_;
            best_cost_ = partial;
            return;
        }
        const TaskIndex t = order_[depth];
        const NodeIndex home = initial_[t];
        const Cost c = space_.task(t).migration_cost;

        add_pending(t, -1);
        // zero-cost branch first, then every other node in index order
        if (fits(t, home)) {
            place(t, home, +1);
            current_.move(t, home);
            descend(depth + 1, partial);
            place(t, home, -1);
        }
        for (NodeIndex n = 0; n < space_.node_count() && !aborted_; ++n) {
            if (n == home) continue;
            if (best_ && partial + c >= best_cost_) break;
            if (!fits(t, n)) continue;
            place(t, n, +1);
            current_.move(t, n);
            descend(depth + 1, partial + c);
            place(t, n, -1);
        }
        current_.move(t, home);
        add_pending(t, +1);
    }

    const ProblemSpace& space_;
    const Assignment& initial_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point deadline_;

    std::vector<TaskIndex> order_;
    std::vector<std::vector<Level>> free_;
    std::vector<std::vector<Level>> pending_home_;
    Assignment current_;

    std::optional<Assignment> best_;
    Cost best_cost_ = 0;
    std::uint64_t visited_ = 0;
    bool aborted_ = false;
};

}  // namespace detail

/// Exact minimum-cost stable assignment by depth-first branch and bound.
/// Tasks are branched in descending migration cost, initial node first.
inline OptimalResult fullscan(const Scenario& scenario, const SearchBudget& budget = {}) {
    return detail::FullscanSearch(scenario, budget).run();
}

inline constexpr std::uint64_t kOracleLimit = 10'000'000;

/// Unpruned enumeration of all |nodes|^|tasks| assignments. Only for small
/// instances; throws InputError beyond kOracleLimit assignments.
inline OptimalResult oracle_enumerate(const Scenario& scenario) {
    const auto start = std::chrono::steady_clock::now();
    const auto& space = scenario.space;
    const std::size_t m = space.node_count();
    const std::size_t l = space.task_count();

    double size = std::pow(static_cast<double>(m), static_cast<double>(l));
    if (size > static_cast<double>(kOracleLimit))
        throw InputError("instance too large for exhaustive enumeration");

    OptimalResult out;
    if (m == 0 && l > 0) {
        out.status = OptimalStatus::Infeasible;
        return out;
    }
    std::vector<NodeIndex> digits(l, 0);
    while (true) {
        ++out.visited;
        const Assignment mu(digits);
        if (is_stable(space, mu)) {
            const Cost c = transformation_cost(scenario.initial, mu, space);
            if (!out.cost || c < *out.cost) {
                out.cost = c;
                out.best = mu;
            }
        }
        std::size_t k = 0;
        while (k < l && ++digits[k] == m) digits[k++] = 0;
        if (k == l) break;
    }
    out.status = out.best ? OptimalStatus::Optimal : OptimalStatus::Infeasible;
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

namespace detail {

enum class Destination { FirstFit, Balance };

inline Level negative_total(const std::vector<Level>& row) {
    Level s = 0;
    for (Level v : row) s += std::min<Level>(v, 0);
    return s;
}

// post-placement balance: min_i (f_i - r_i) / a_i over resources with a_i > 0
inline double balance_score(const NodeSpec& node, const std::vector<Level>& free, const TaskSpec& task) {
    double score = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < free.size(); ++i) {
        if (node.capacities[i] <= 0) continue;
        score = std::min(score, static_cast<double>(free[i] - task.requirements[i]) /
                                    static_cast<double>(node.capacities[i]));
    }
    return score;
}

inline StrategyResult move_heuristic(const Scenario& scenario, const SearchBudget& budget,
                                     Destination rule) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const auto deadline = start + budget.timeout;
    const auto& space = scenario.space;

    StrategyResult result;
    Assignment mu = scenario.initial;
    auto f = remaining_table(space, mu);

    auto fits = [&](TaskIndex t, NodeIndex n) {
        const auto& r = space.task(t).requirements;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] > f[n][i]) return false;
        }
        return true;
    };

    while (true) {
        std::vector<NodeIndex> overloaded;
        for (NodeIndex n = 0; n < space.node_count(); ++n) {
            if (is_overloaded(f[n])) overloaded.push_back(n);
        }
        if (overloaded.empty()) break;
        if (clock::now() >= deadline) break;

        std::ranges::stable_sort(overloaded, [&](NodeIndex a, NodeIndex b) {
            return negative_total(f[a]) < negative_total(f[b]);
        });

        std::optional<MigrationEvent> move;
        for (const NodeIndex n : overloaded) {
            std::vector<TaskIndex> local;
            for (TaskIndex t = 0; t < mu.size(); ++t) {
                if (mu[t] == n) local.push_back(t);
            }
            auto relief = [&](TaskIndex t) {
                Level s = 0;
                const auto& r = space.task(t).requirements;
                for (std::size_t i = 0; i < r.size(); ++i) {
                    if (f[n][i] < 0) s += std::min(r[i], -f[n][i]);
                }
                return s;
            };
            // cheapest first; among equal costs the one relieving more overload
            std::ranges::stable_sort(local, [&](TaskIndex a, TaskIndex b) {
                const Cost ca = space.task(a).migration_cost, cb = space.task(b).migration_cost;
                if (ca != cb) return ca < cb;
                return relief(a) > relief(b);
            });
            for (const TaskIndex t : local) {
                std::optional<NodeIndex> target;
                double best_score = -std::numeric_limits<double>::infinity();
                for (NodeIndex m = 0; m < space.node_count(); ++m) {
                    if (m == n || !fits(t, m)) continue;
                    if (rule == Destination::FirstFit) {
                        target = m;
                        break;
                    }
                    const double s = balance_score(space.node(m), f[m], space.task(t));
                    if (!target || s > best_score) {
                        target = m;
                        best_score = s;
                    }
                }
                if (target) {
                    move = MigrationEvent{result.cycles_run, t, n, *target};
                    break;
                }
            }
            if (move) break;
        }
        if (!move) break;
        const auto& r = space.task(move->task).requirements;
        for (std::size_t i = 0; i < r.size(); ++i) {
            f[move->from_node][i] += r[i];
            f[move->to_node][i] -= r[i];
        }
        mu.move(move->task, move->to_node);
        result.migrations.push_back(*move);
        ++result.cycles_run;
    }

    const bool stable = std::ranges::none_of(f, [](const auto& row) { return is_overloaded(row); });
    result.status = stable ? RunStatus::Stable : RunStatus::NoSolution;
    result.final_assignment = std::move(mu);
    result.cost = transformation_cost(scenario.initial, result.final_assignment, space);
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
    return result;
}

}  // namespace detail

/// Repeatedly moves the cheapest task that fits elsewhere off the most
/// overloaded node, to the first node (by index) where it fits. Fails fast
/// when no task on any overloaded node fits anywhere.
inline StrategyResult greedy_solve(const Scenario& scenario, const SearchBudget& budget = {}) {
    return detail::move_heuristic(scenario, budget, detail::Destination::FirstFit);
}

/// As greedy_solve, but the destination maximises the post-placement balance
/// score min_i f_i(n)/a_i(n); ties go to the lower node index.
inline StrategyResult balance_solve(const Scenario& scenario, const SearchBudget& budget = {}) {
    return detail::move_heuristic(scenario, budget, detail::Destination::Balance);
}

}  // namespace mrlb

#endif  // MRLB_BASELINES_HPP
