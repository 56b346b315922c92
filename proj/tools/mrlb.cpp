#include <iostream>

#include "CLI11.hpp"
#include "mrlb/cli.hpp"

int main(int argc, char** argv) {
    namespace cli = mrlb::cli;
    CLI::App app{"Multi-resource load balancing: agent-based strategy and baselines"};
    app.require_subcommand(1);

    cli::Options opt;
    auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("-s,--strategy,--strategies", opt.strategies,
                        "fullscan, ijiids08, kesamsta07, greedy, balance or all (comma separated)");
        sub->add_option("--seed", opt.seed, "base seed; run k uses seed+k")->capture_default_str();
        sub->add_flag("--random-seed", opt.entropy_seed, "draw the base seed from the system entropy source");
        sub->add_option("--runs", opt.runs, "runs per stochastic strategy")->capture_default_str();
        sub->add_option("--timeout", opt.timeout_seconds, "per-run budget in seconds")->capture_default_str();
        sub->add_option("--fullscan-timeout", opt.fullscan_timeout_seconds, "fullscan budget in seconds")
            ->capture_default_str();
        sub->add_option("--format", opt.format, "table or json")->capture_default_str();
    };

    auto* solve = app.add_subcommand("solve", "run strategies on a scenario file");
    solve->add_option("--scenario", opt.scenario_path, "scenario file")->required();
    add_run_flags(solve);

    auto* verify = app.add_subcommand("verify", "check an assignment against a scenario");
    verify->add_option("--scenario", opt.scenario_path, "scenario file")->required();
    verify->add_option("--assignment", opt.assignment_path, "assignment file")->required();

    auto* paper = app.add_subcommand("paper", "run one of the seven built-in experiments");
    paper->add_option("--test", opt.test, "experiment number 1..7")->required();
    add_run_flags(paper);

    auto* oracle = app.add_subcommand("oracle", "exhaustive enumeration cross-checked against fullscan");
    oracle->add_option("--scenario", opt.scenario_path, "scenario file")->required();
    oracle->add_option("--fullscan-timeout", opt.fullscan_timeout_seconds, "fullscan budget in seconds")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return cli::kExitInputError;
    }

    if (solve->parsed()) return cli::cmd_solve(opt, std::cout, std::cerr);
    if (verify->parsed()) return cli::cmd_verify(opt, std::cout, std::cerr);
    if (paper->parsed()) return cli::cmd_paper(opt, std::cout, std::cerr);
    return cli::cmd_oracle(opt, std::cout, std::cerr);
}
