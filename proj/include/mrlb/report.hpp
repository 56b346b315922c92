#ifndef MRLB_REPORT_HPP
#define MRLB_REPORT_HPP

// Text and JSON renderings of an ExperimentReport. The table has two parts:
// the initial configuration (overloaded nodes marked with '*') and the
// experiment results, one row per strategy. JSON keys are emitted in a fixed
// order and omit wall-clock timings, so equal inputs give identical bytes.

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mrlb/experiment.hpp"
#include "mrlb/scenario_io.hpp"

namespace mrlb {

enum class ReportFormat { Table, Json };

inline constexpr std::string_view kMaxCostLabel = "Highest possible migration cost (all tasks migrated)";

namespace detail {

inline std::string strategy_label(StrategyKind k) {
    switch (k) {
        case StrategyKind::Fullscan: return "FULLSCAN strategy (optimal cost)";
        case StrategyKind::Ijiids08: return "IJIIDS08 strategy";
        case StrategyKind::Kesamsta07: return "KESAMSTA07 strategy";
        case StrategyKind::Greedy: return "GREEDY strategy";
        case StrategyKind::Balance: return "BALANCE strategy";
    }
    return "?";
}

inline std::string run_cell(const RunRecord& r) {
    if (r.status == "timed-out") {
        return r.cost ? "(timed out; best found " + std::to_string(*r.cost) + ")" : "(timed out)";
    }
    if (r.status == "infeasible") return "(no stable configuration exists)";
    if (!r.stable) return "(no solution)";
    return std::to_string(*r.cost);
}

inline std::string outcome_cell(const StrategyOutcome& o) {
    if (o.error) return "(error: " + *o.error + ")";
    std::string cell;
    for (std::size_t k = 0; k < o.runs.size(); ++k) {
        if (k) cell += ", ";
        cell += run_cell(o.runs[k]);
    }
    return cell;
}

inline std::string format_seconds(std::chrono::nanoseconds ns) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << std::chrono::duration<double>(ns).count() << " s";
    return out.str();
}

inline void write_rows(std::ostringstream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [left, _] : rows) width = std::max(width, left.size());
    for (const auto& [left, right] : rows) {
        out << "  " << left << std::string(width - left.size() + 3, ' ') << right << '\n';
    }
}

}  // namespace detail

inline std::string render_table(const ExperimentReport& report, bool with_timings = true) {
    std::ostringstream out;
    const auto& space = report.scenario.space;
    out << "Scenario: " << report.name << "\n\n";

    out << "Initial configuration\n";
    std::vector<std::pair<std::string, std::string>> rows{{"Node name", "Tasks"}};
    const auto remaining = remaining_table(space, report.scenario.initial);
    for (NodeIndex n = 0; n < space.node_count(); ++n) {
        std::string tasks;
        for (TaskIndex t = 0; t < space.task_count(); ++t) {
            if (report.scenario.initial[t] != n) continue;
            if (!tasks.empty()) tasks += ", ";
            tasks += space.task(t).id;
        }
        if (tasks.empty()) tasks = "(none)";
        rows.emplace_back(space.node(n).id + (is_overloaded(remaining[n]) ? " *" : ""), tasks);
    }
    detail::write_rows(out, rows);
    out << "  (* overloaded)\n\n";

    out << "Experiment results\n";
    rows = {{"Strategy name", "System transformation cost"}};
    rows.emplace_back(std::string(kMaxCostLabel), std::to_string(report.max_cost));
    if (report.known_optimal) rows.emplace_back("Known optimal cost", std::to_string(*report.known_optimal));
    for (const auto& o : report.outcomes) rows.emplace_back(detail::strategy_label(o.strategy), detail::outcome_cell(o));
    detail::write_rows(out, rows);

    if (with_timings && !report.outcomes.empty()) {
        out << "\nTimings\n";
        rows.clear();
        for (const auto& o : report.outcomes) {
            std::chrono::nanoseconds total{0};
            for (const auto& r : o.runs) total += r.elapsed;
            rows.emplace_back(std::string(to_string(o.strategy)), detail::format_seconds(total));
        }
        detail::write_rows(out, rows);
    }
    return out.str();
}

inline nlohmann::ordered_json report_to_json(const ExperimentReport& report) {
    using nlohmann::ordered_json;
    const auto& space = report.scenario.space;
    ordered_json j;
    j["name"] = report.name;
    j["max_cost"] = report.max_cost;
    j["known_optimal"] = report.known_optimal ? ordered_json(*report.known_optimal) : ordered_json(nullptr);
    j["scenario"] = serialize_scenario(report.scenario);

    ordered_json strategies = ordered_json::array();
    for (const auto& o : report.outcomes) {
        ordered_json s;
        s["strategy"] = to_string(o.strategy);
        s["error"] = o.error ? ordered_json(*o.error) : ordered_json(nullptr);
        const auto best = o.best_cost();
        s["best_cost"] = best ? ordered_json(*best) : ordered_json(nullptr);
        ordered_json runs = ordered_json::array();
        for (const auto& r : o.runs) {
            ordered_json jr;
            jr["seed"] = r.seed ? ordered_json(*r.seed) : ordered_json(nullptr);
            jr["status"] = r.status;
            jr["stable"] = r.stable;
            jr["cost"] = r.cost ? ordered_json(*r.cost) : ordered_json(nullptr);
            jr["migrations"] = r.migrations;
            jr["iterations"] = r.iterations;
            if (r.final_assignment) {
                ordered_json fin = ordered_json::object();
                for (TaskIndex t = 0; t < r.final_assignment->size(); ++t)
                    fin[space.task(t).id] = space.node((*r.final_assignment)[t]).id;
                jr["final"] = std::move(fin);
            } else {
                jr["final"] = nullptr;
            }
            runs.push_back(std::move(jr));
        }
        s["runs"] = std::move(runs);
        strategies.push_back(std::move(s));
    }
    j["strategies"] = std::move(strategies);
    return j;
}

inline std::string render_json(const ExperimentReport& report) { return report_to_json(report).dump(2) + "\n"; }

inline std::string render_report(const ExperimentReport& report, ReportFormat format) {
    return format == ReportFormat::Json ? render_json(report) : render_table(report);
}

/// Inverse of render_json (timings are not part of the document).
inline ExperimentReport report_from_json(std::string_view text) {
    const auto j = nlohmann::json::parse(text);
    ExperimentReport report;
    report.name = j.at("name").get<std::string>();
    report.max_cost = j.at("max_cost").get<Cost>();
    if (!j.at("known_optimal").is_null()) report.known_optimal = j.at("known_optimal").get<Cost>();
    report.scenario = parse_scenario(j.at("scenario").get<std::string>());
    const auto& space = report.scenario.space;

    for (const auto& s : j.at("strategies")) {
        StrategyOutcome o;
        const auto name = s.at("strategy").get<std::string>();
        const auto kind = parse_strategy(name);
        if (!kind) throw InputError("unknown strategy '" + name + "' in report");
        o.strategy = *kind;
        if (!s.at("error").is_null()) o.error = s.at("error").get<std::string>();
        for (const auto& jr : s.at("runs")) {
            RunRecord r;
            if (!jr.at("seed").is_null()) r.seed = jr.at("seed").get<std::uint64_t>();
            r.status = jr.at("status").get<std::string>();
            r.stable = jr.at("stable").get<bool>();
            if (!jr.at("cost").is_null()) r.cost = jr.at("cost").get<Cost>();
            r.migrations = jr.at("migrations").get<std::uint64_t>();
            r.iterations = jr.at("iterations").get<std::uint64_t>();
            if (!jr.at("final").is_null()) {
                std::vector<std::pair<std::string, std::string>> pairs;
                for (const auto& [task, node] : jr.at("final").items()) pairs.emplace_back(task, node.get<std::string>());
                r.final_assignment = Assignment::from_pairs(space, pairs);
            }
            o.runs.push_back(std::move(r));
        }
        report.outcomes.push_back(std::move(o));
    }
    return report;
}

}  // namespace mrlb

#endif  // MRLB_REPORT_HPP
