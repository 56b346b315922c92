#ifndef MRLB_MODEL_HPP
#define MRLB_MODEL_HPP

// Problem space, task assignments and the stability / cost formulas of the
// multi-resource load balancing problem.
//
// All levels are exact integers. Remaining resources are signed: a negative
// entry is the overload magnitude on that resource and is never clamped.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mrlb {

using Level = std::int64_t;
using Cost = std::int64_t;
using NodeIndex = std::size_t;
using TaskIndex = std::size_t;

/// Malformed or inconsistent user input (unknown ids, dimension mismatch...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid solver configuration, e.g. a non-positive exponent base.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ResourceKind {
    std::size_t index = 0;
    std::string name;

    friend bool operator==(const ResourceKind&, const ResourceKind&) = default;
};

struct NodeSpec {
    std::string id;
    std::vector<Level> capacities;

    friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

struct TaskSpec {
    std::string id;
    std::vector<Level> requirements;
    Cost migration_cost = 0;

    friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

/// The static part of the problem: resource kinds, nodes and tasks.
class ProblemSpace {
public:
    ProblemSpace() = default;

    /// Throws InputError when ids collide or vector dimensions disagree.
    ProblemSpace(std::vector<ResourceKind> resources, std::vector<NodeSpec> nodes,
                 std::vector<TaskSpec> tasks)
        : resources_(std::move(resources)), nodes_(std::move(nodes)), tasks_(std::move(tasks)) {
        validate();
    }

    /// Convenience constructor naming resources in order.
    static ProblemSpace from_names(const std::vector<std::string>& resource_names,
                                   std::vector<NodeSpec> nodes, std::vector<TaskSpec> tasks) {
        std::vector<ResourceKind> kinds;
        kinds.reserve(resource_names.size());
        for (std::size_t i = 0; i < resource_names.size(); ++i) {
            kinds.push_back({i, resource_names[i]});
        }
        return ProblemSpace(std::move(kinds), std::move(nodes), std::move(tasks));
    }

    const std::vector<ResourceKind>& resources() const noexcept { return resources_; }
    const std::vector<NodeSpec>& nodes() const noexcept { return nodes_; }
    const std::vector<TaskSpec>& tasks() const noexcept { return tasks_; }

    std::size_t dimension() const noexcept { return resources_.size(); }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t task_count() const noexcept { return tasks_.size(); }

    const NodeSpec& node(NodeIndex n) const { return nodes_.at(n); }
    const TaskSpec& task(TaskIndex t) const { return tasks_.at(t); }

    std::optional<NodeIndex> find_node(std::string_view id) const {
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i].id == id) return i;
        }
        return std::nullopt;
    }

    std::optional<TaskIndex> find_task(std::string_view id) const {
        for (std::size_t i = 0; i < tasks_.size(); ++i) {
            if (tasks_[i].id == id) return i;
        }
        return std::nullopt;
    }

    NodeIndex node_index(std::string_view id) const {
        if (auto n = find_node(id)) return *n;
        throw InputError("unknown node id '" + std::string(id) + "'");
    }

    TaskIndex task_index(std::string_view id) const {
        if (auto t = find_task(id)) return *t;
        throw InputError("unknown task id '" + std::string(id) + "'");
    }

    friend bool operator==(const ProblemSpace&, const ProblemSpace&) = default;

private:
    void validate() const {
        std::unordered_set<std::string> seen;
        for (std::size_t i = 0; i < resources_.size(); ++i) {
            const auto& r = resources_[i];
            if (r.index != i) throw InputError("resource indices must be contiguous from 0");
            if (r.name.empty()) throw InputError("resource name must be non-empty");
            if (!seen.insert(r.name).second) throw InputError("duplicate resource '" + r.name + "'");
        }
        seen.clear();
        for (const auto& n : nodes_) {
            if (!seen.insert(n.id).second) throw InputError("duplicate node id '" + n.id + "'");
            if (n.capacities.size() != dimension())
                throw InputError("node '" + n.id + "' has wrong number of capacities");
            if (std::ranges::any_of(n.capacities, [](Level v) { return v < 0; }))
                throw InputError("node '" + n.id + "' has a negative capacity");
        }
        seen.clear();
        for (const auto& t : tasks_) {
            if (!seen.insert(t.id).second) throw InputError("duplicate task id '" + t.id + "'");
            if (t.requirements.size() != dimension())
                throw InputError("task '" + t.id + "' has wrong number of requirements");
            if (std::ranges::any_of(t.requirements, [](Level v) { return v < 0; }))
                throw InputError("task '" + t.id + "' has a negative requirement");
            if (t.migration_cost < 0)
                throw InputError("task '" + t.id + "' has a negative migration cost");
        }
    }

    std::vector<ResourceKind> resources_;
    std::vector<NodeSpec> nodes_;
    std::vector<TaskSpec> tasks_;
};

/// Total mapping task -> node, stored by index in task declaration order.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::vector<NodeIndex> node_of_task) : node_of_(std::move(node_of_task)) {}

    NodeIndex operator[](TaskIndex t) const { return node_of_[t]; }
    NodeIndex node_of(TaskIndex t) const { return node_of_.at(t); }
    void move(TaskIndex t, NodeIndex n) { node_of_.at(t) = n; }

    std::size_t size() const noexcept { return node_of_.size(); }
    std::span<const NodeIndex> raw() const noexcept { return node_of_; }

    /// Builds an assignment from (task id, node id) pairs; every task exactly once.
    static Assignment from_pairs(const ProblemSpace& space,
                                 std::span<const std::pair<std::string, std::string>> pairs) {
        std::vector<std::optional<NodeIndex>> slots(space.task_count());
        for (const auto& [task_id, node_id] : pairs) {
            const auto t = space.task_index(task_id);
            const auto n = space.node_index(node_id);
            if (slots[t]) throw InputError("task '" + task_id + "' assigned more than once");
            slots[t] = n;
        }
        std::vector<NodeIndex> out;
        out.reserve(slots.size());
        for (std::size_t t = 0; t < slots.size(); ++t) {
            if (!slots[t]) throw InputError("task '" + space.task(t).id + "' is not assigned");
            out.push_back(*slots[t]);
        }
        return Assignment(std::move(out));
    }

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<NodeIndex> node_of_;
};

inline void validate_assignment(const ProblemSpace& space, const Assignment& mu) {
    if (mu.size() != space.task_count())
        throw InputError("assignment covers " + std::to_string(mu.size()) + " tasks, space has " +
                         std::to_string(space.task_count()));
    for (std::size_t t = 0; t < mu.size(); ++t) {
        if (mu[t] >= space.node_count())
            throw InputError("task '" + space.task(t).id + "' assigned to a nonexistent node");
    }
}

/// A problem space together with its initial assignment.
struct Scenario {
    ProblemSpace space;
    Assignment initial;

    Scenario() = default;
    Scenario(ProblemSpace s, Assignment mu0) : space(std::move(s)), initial(std::move(mu0)) {
        validate_assignment(space, initial);
    }

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// f(n) = a(n) - sum of r(t) over tasks on n. Entries may be negative.
inline std::vector<Level> remaining_resources(const ProblemSpace& space, const Assignment& mu,
                                              NodeIndex node) {
    if (node >= space.node_count()) throw InputError("unknown node index " + std::to_string(node));
    std::vector<Level> f = space.node(node).capacities;
    for (std::size_t t = 0; t < mu.size(); ++t) {
        if (mu[t] != node) continue;
        const auto& r = space.task(t).requirements;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] -= r[i];
    }
    return f;
}

inline std::vector<Level> remaining_resources(const ProblemSpace& space, const Assignment& mu,
                                              std::string_view node_id) {
    return remaining_resources(space, mu, space.node_index(node_id));
}

/// Remaining resources of every node, row-major [node][resource].
inline std::vector<std::vector<Level>> remaining_table(const ProblemSpace& space, const Assignment& mu) {
    std::vector<std::vector<Level>> f;
    f.reserve(space.node_count());
    for (const auto& n : space.nodes()) f.push_back(n.capacities);
    for (std::size_t t = 0; t < mu.size(); ++t) {
        const auto& r = space.task(t).requirements;
        auto& row = f[mu[t]];
        for (std::size_t i = 0; i < row.size(); ++i) row[i] -= r[i];
    }
    return f;
}

inline bool is_overloaded(std::span<const Level> remaining) {
    return std::ranges::any_of(remaining, [](Level v) { return v < 0; });
}

/// Stable iff no node has a negative remainder on any resource.
inline bool is_stable(const ProblemSpace& space, const Assignment& mu) {
    validate_assignment(space, mu);
    for (const auto& row : remaining_table(space, mu)) {
        if (is_overloaded(row)) return false;
    }
    return true;
}

/// Sum of c(t) over tasks whose final node differs from the initial one.
inline Cost transformation_cost(const Assignment& initial, const Assignment& final_assignment,
                                const ProblemSpace& space) {
    if (initial.size() != space.task_count() || final_assignment.size() != space.task_count())
        throw InputError("assignments do not cover the same task set");
    Cost total = 0;
    for (std::size_t t = 0; t < initial.size(); ++t) {
        if (initial[t] != final_assignment[t]) total += space.task(t).migration_cost;
    }
    return total;
}

inline Cost max_transformation_cost(const ProblemSpace& space) {
    return std::accumulate(space.tasks().begin(), space.tasks().end(), Cost{0},
                           [](Cost acc, const TaskSpec& t) { return acc + t.migration_cost; });
}

}  // namespace mrlb

#endif  // MRLB_MODEL_HPP
