#ifndef MRLB_SCENARIO_IO_HPP
#define MRLB_SCENARIO_IO_HPP

// Line-oriented scenario format:
//
//   # comment
//   resources cpu memory
//   node Node01 40 80
//   task J01 4 5 4            (requirements..., migration cost)
//   assign J01 Node01
//
// Resources come first; nodes and tasks must be declared before an `assign`
// refers to them; every task is assigned exactly once.

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mrlb/model.hpp"

namespace mrlb {

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t begin = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > begin) words.push_back(line.substr(begin, i - begin));
    }
    return words;
}

inline Level parse_level(std::string_view word, std::size_t line_no) {
    Level value = 0;
    const auto* end = word.data() + word.size();
    const auto [ptr, ec] = std::from_chars(word.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(word) + "'");
    if (value < 0) throw ParseError(line_no, "negative value '" + std::string(word) + "'");
    return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto words = split_words(line);
        if (!words.empty()) fn(line_no, words);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

}  // namespace detail

inline Scenario parse_scenario(std::string_view text) {
    std::optional<std::vector<std::string>> resources;
    std::vector<NodeSpec> nodes;
    std::vector<TaskSpec> tasks;
    std::vector<std::pair<std::string, std::string>> assigns;

    auto find_node = [&](std::string_view id) {
        for (const auto& n : nodes) if (n.id == id) return true;
        return false;
    };
    auto find_task = [&](std::string_view id) {
        for (const auto& t : tasks) if (t.id == id) return true;
        return false;
    };

    detail::for_each_line(text, [&](std::size_t ln, const std::vector<std::string_view>& w) {
        const auto directive = w[0];
        if (directive == "resources") {
            if (resources) throw ParseError(ln, "resources declared twice");
            if (w.size() < 2) throw ParseError(ln, "resources needs at least one name");
            resources.emplace();
            for (std::size_t i = 1; i < w.size(); ++i) {
                std::string name(w[i]);
                for (const auto& r : *resources)
                    if (r == name) throw ParseError(ln, "duplicate resource '" + name + "'");
                resources->push_back(std::move(name));
            }
            return;
        }
        if (!resources) throw ParseError(ln, "'" + std::string(directive) + "' before resources declaration");
        const std::size_t d = resources->size();
        if (directive == "node") {
            if (w.size() != 2 + d)
                throw ParseError(ln, "node expects an id and " + std::to_string(d) + " capacities");
            NodeSpec n{std::string(w[1]), {}};
            if (find_node(n.id)) throw ParseError(ln, "duplicate node id '" + n.id + "'");
            for (std::size_t i = 0; i < d; ++i) n.capacities.push_back(detail::parse_level(w[2 + i], ln));
            nodes.push_back(std::move(n));
        } else if (directive == "task") {
            if (w.size() != 3 + d)
                throw ParseError(ln, "task expects an id, " + std::to_string(d) + " requirements and a cost");
            TaskSpec t{std::string(w[1]), {}, 0};
            if (find_task(t.id)) throw ParseError(ln, "duplicate task id '" + t.id + "'");
            for (std::size_t i = 0; i < d; ++i) t.requirements.push_back(detail::parse_level(w[2 + i], ln));
            t.migration_cost = detail::parse_level(w[2 + d], ln);
            tasks.push_back(std::move(t));
        } else if (directive == "assign") {
            if (w.size() != 3) throw ParseError(ln, "assign expects a task id and a node id");
            std::string task(w[1]), node(w[2]);
            if (!find_task(task)) throw ParseError(ln, "unknown task id '" + task + "'");
            if (!find_node(node)) throw ParseError(ln, "unknown node id '" + node + "'");
            for (const auto& [t, _] : assigns)
                if (t == task) throw ParseError(ln, "task '" + task + "' assigned more than once");
            assigns.emplace_back(std::move(task), std::move(node));
        } else {
            throw ParseError(ln, "unknown directive '" + std::string(directive) + "'");
        }
    });

    if (!resources) throw InputError("no resources declared");
    auto space = ProblemSpace::from_names(*resources, std::move(nodes), std::move(tasks));
    auto initial = Assignment::from_pairs(space, assigns);
    return Scenario(std::move(space), std::move(initial));
}

/// Parses an assignment-only document (`assign <task> <node>` lines) against `space`.
inline Assignment parse_assignment(std::string_view text, const ProblemSpace& space) {
    std::vector<std::pair<std::string, std::string>> pairs;
    detail::for_each_line(text, [&](std::size_t ln, const std::vector<std::string_view>& w) {
        if (w[0] != "assign" || w.size() != 3) throw ParseError(ln, "expected 'assign <task-id> <node-id>'");
        std::string task(w[1]), node(w[2]);
        if (!space.find_task(task)) throw ParseError(ln, "unknown task id '" + task + "'");
        if (!space.find_node(node)) throw ParseError(ln, "unknown node id '" + node + "'");
        for (const auto& [t, _] : pairs)
            if (t == task) throw ParseError(ln, "task '" + task + "' assigned more than once");
        pairs.emplace_back(std::move(task), std::move(node));
    });
    return Assignment::from_pairs(space, pairs);
}

inline std::string serialize_assignment(const ProblemSpace& space, const Assignment& mu) {
    std::ostringstream out;
    for (TaskIndex t = 0; t < mu.size(); ++t) {
        out << "assign " << space.task(t).id << ' ' << space.node(mu[t]).id << '\n';
    }
    return out.str();
}

inline std::string serialize_scenario(const Scenario& scenario) {
    const auto& space = scenario.space;
    std::ostringstream out;
    out << "resources";
    for (const auto& r : space.resources()) out << ' ' << r.name;
    out << '\n';
    for (const auto& n : space.nodes()) {
        out << "node " << n.id;
        for (Level v : n.capacities) out << ' ' << v;
        out << '\n';
    }
    for (const auto& t : space.tasks()) {
        out << "task " << t.id;
        for (Level v : t.requirements) out << ' ' << v;
        out << ' ' << t.migration_cost << '\n';
    }
    out << serialize_assignment(space, scenario.initial);
    return out.str();
}

}  // namespace mrlb

#endif  // MRLB_SCENARIO_IO_HPP
