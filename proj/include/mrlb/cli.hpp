#ifndef MRLB_CLI_HPP
#define MRLB_CLI_HPP

// Subcommand bodies for the `mrlb` tool. Each takes already-parsed options,
// writes to the given streams and returns the process exit code:
//   0  success (stable solution found / assignment stable)
//   1  no stable solution / assignment overloaded
//   2  input or usage error
//   3  oracle and fullscan disagree (oracle subcommand only)

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mrlb/builtin.hpp"
#include "mrlb/experiment.hpp"
#include "mrlb/report.hpp"
#include "mrlb/scenario_io.hpp"

namespace mrlb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoSolution = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitMismatch = 3;

struct Options {
    std::string scenario_path;
    std::string assignment_path;
    std::vector<std::string> strategies;
    std::uint64_t seed = 42;
    bool entropy_seed = false;
    unsigned runs = 5;
    double timeout_seconds = 300;
    double fullscan_timeout_seconds = 600;
    std::string format = "table";
    int test = 0;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::vector<StrategyKind> resolve_strategies(const std::vector<std::string>& names,
                                                    std::vector<StrategyKind> fallback) {
    if (names.empty()) return fallback;
    std::vector<StrategyKind> out;
    for (const auto& raw : names) {
        // accept both repeated flags and comma-separated lists
        std::stringstream ss(raw);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (name.empty()) continue;
            if (name == "all") {
                out.insert(out.end(), std::begin(kAllStrategies), std::end(kAllStrategies));
                continue;
            }
            const auto k = parse_strategy(name);
            if (!k) throw ConfigError("unknown strategy '" + name + "'");
            out.push_back(*k);
        }
    }
    if (out.empty()) throw ConfigError("no strategy given");
    return out;
}

inline std::chrono::milliseconds to_millis(double seconds, const char* flag) {
    if (!(seconds > 0) || !std::isfinite(seconds))
        throw ConfigError(std::string(flag) + " must be a positive number of seconds");
    return std::chrono::milliseconds(static_cast<std::int64_t>(std::ceil(seconds * 1000.0)));
}

inline ReportFormat parse_format(const std::string& f) {
    if (f == "table") return ReportFormat::Table;
    if (f == "json") return ReportFormat::Json;
    throw ConfigError("format must be 'table' or 'json', got '" + f + "'");
}

inline ExperimentPlan make_plan(const Options& opt, Scenario scenario, std::vector<StrategyKind> fallback) {
    ExperimentPlan plan;
    plan.scenario = std::move(scenario);
    plan.strategies = resolve_strategies(opt.strategies, std::move(fallback));
    if (opt.runs < 1) throw ConfigError("--runs must be at least 1");
    plan.runs_per_stochastic_strategy = opt.runs;
    plan.base_seed = opt.entropy_seed ? std::random_device{}() : opt.seed;
    plan.budget.timeout = to_millis(opt.timeout_seconds, "--timeout");
    plan.fullscan_budget.timeout = to_millis(opt.fullscan_timeout_seconds, "--fullscan-timeout");
    return plan;
}

inline int exit_code_of(const ExperimentReport& report) {
    for (const auto& o : report.outcomes)
        for (const auto& r : o.runs)
            if (r.stable) return kExitOk;
    return kExitNoSolution;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << '\n';
    }
    return kExitInputError;
}

inline int cmd_solve(const Options& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto format = parse_format(opt.format);
        if (opt.scenario_path.empty()) throw ConfigError("--scenario is required");
        auto plan = make_plan(opt, parse_scenario(read_file(opt.scenario_path)), {StrategyKind::Ijiids08});
        plan.name = opt.scenario_path;
        const auto report = run_experiment(plan);
        out << render_report(report, format);
        return exit_code_of(report);
    });
}

inline int cmd_paper(const Options& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto format = parse_format(opt.format);
        auto plan = make_plan(opt, builtin_scenario(opt.test),
                              {std::begin(kAllStrategies), std::end(kAllStrategies)});
        plan.name = "test-" + std::to_string(opt.test);
        plan.known_optimal = builtin_known_optimum(opt.test);
        const auto report = run_experiment(plan);
        out << render_report(report, format);
        return exit_code_of(report);
    });
}

inline int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opt.scenario_path.empty() || opt.assignment_path.empty())
            throw ConfigError("--scenario and --assignment are required");
        const auto scenario = parse_scenario(read_file(opt.scenario_path));
        const auto& space = scenario.space;
        const auto mu = parse_assignment(read_file(opt.assignment_path), space);
        const auto f = remaining_table(space, mu);
        const bool stable = is_stable(space, mu);

        out << (stable ? "stable" : "overloaded") << '\n';
        for (NodeIndex n = 0; n < space.node_count(); ++n) {
            out << "  " << space.node(n).id;
            for (std::size_t i = 0; i < space.dimension(); ++i)
                out << ' ' << space.resources()[i].name << '=' << f[n][i];
            if (is_overloaded(f[n])) out << "  (overloaded)";
            out << '\n';
        }
        out << "transformation cost: " << transformation_cost(scenario.initial, mu, space) << " of "
            << max_transformation_cost(space) << '\n';
        return stable ? kExitOk : kExitNoSolution;
    });
}

inline int cmd_oracle(const Options& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opt.scenario_path.empty()) throw ConfigError("--scenario is required");
        const auto scenario = parse_scenario(read_file(opt.scenario_path));
        const auto oracle = oracle_enumerate(scenario);
        SearchBudget budget;
        budget.timeout = to_millis(opt.fullscan_timeout_seconds, "--fullscan-timeout");
        const auto search = fullscan(scenario, budget);

        auto show = [&](const char* label, const OptimalResult& r) {
            out << label << ": " << to_string(r.status);
            if (r.cost) out << " cost " << *r.cost;
            out << " (" << r.visited << " assignments/nodes visited)\n";
        };
        show("oracle  ", oracle);
        show("fullscan", search);
        if (search.status == OptimalStatus::TimedOut) return kExitNoSolution;
        if (oracle.status != search.status || oracle.cost != search.cost) {
            out << "MISMATCH\n";
            return kExitMismatch;
        }
        if (oracle.best) out << serialize_assignment(scenario.space, *oracle.best);
        return oracle.status == OptimalStatus::Optimal ? kExitOk : kExitNoSolution;
    });
}

}  // namespace mrlb::cli

#endif  // MRLB_CLI_HPP
