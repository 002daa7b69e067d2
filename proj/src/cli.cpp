#include "lifecycle/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <variant>

#include <CLI11.hpp>

#include "lifecycle/growth.hpp"
#include "lifecycle/io.hpp"

namespace lifecycle {

namespace {

// Maps to exit code 3.
struct UsageError : Error {
    using Error::Error;
};

RenderOptions options_from_env() {
    RenderOptions options;
    if (const char* env = std::getenv("LCSOLVE_PRECISION")) {
        char* end = nullptr;
        const long digits = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && digits >= 0 && digits <= 17) {
            options.precision = static_cast<int>(digits);
        }
    }
    return options;
}

const ControlledMarkovProblem& expect_mdp(const LoadedModel& loaded, const char* command) {
    const auto* problem = std::get_if<ControlledMarkovProblem>(&loaded.model);
    if (problem == nullptr) {
        throw UsageError(std::string(command) + " expects an \"mdp\" model file");
    }
    return *problem;
}

const TreeNode& expect_tree(const LoadedModel& loaded) {
    const auto* tree = std::get_if<TreeNode>(&loaded.model);
    if (tree == nullptr) {
        throw UsageError("tree expects a \"tree\" model file");
    }
    return *tree;
}

const StagedModel& expect_staged(const LoadedModel& loaded) {
    const auto* staged = std::get_if<StagedModel>(&loaded.model);
    if (staged == nullptr) {
        throw UsageError("stages expects a \"staged\" model file");
    }
    return *staged;
}

PolicyVector policy_from_flag(const std::string& text, const ControlledMarkovProblem& problem) {
    PolicyVector policy;
    try {
        policy = parse_policy(text);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    if (policy.size() != problem.num_states()) {
        throw UsageError("policy lists " + std::to_string(policy.size()) + " choices for " +
                         std::to_string(problem.num_states()) + " states");
    }
    for (std::size_t i = 0; i < policy.size(); ++i) {
        if (policy[i] >= problem.actions[i].size()) {
            throw UsageError("policy chooses action " + std::to_string(policy[i] + 1) +
                             " in state " + std::to_string(i + 1) + " which has only " +
                             std::to_string(problem.actions[i].size()) + " actions");
        }
    }
    return policy;
}

std::size_t reference_from_flag(std::size_t one_based, const ControlledMarkovProblem& problem) {
    if (one_based == 0 || one_based > problem.num_states()) {
        throw UsageError("reference state must be between 1 and " +
                         std::to_string(problem.num_states()));
    }
    return one_based - 1;
}

void print_warnings(const LoadedModel& loaded, std::ostream& err) {
    for (const auto& warning : loaded.warnings) {
        err << "warning: " << warning << "\n";
    }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"solvers for staged, tree and Markov decision models"};
    app.name("lcsolve");
    app.require_subcommand(1);

    std::string file;
    std::string policy_text;
    std::string initial_policy_text;
    std::size_t reference_state = 0;  // 1-based; 0 means "last state"
    std::size_t max_iterations = 1000;
    std::size_t steps = 0;
    std::size_t start_state = 1;  // 1-based
    std::uint64_t seed = 0;
    double t_value = 0.0;
    double x_value = 0.0;
    double epsilon = 1e-12;
    bool with_trace = false;
    bool as_json = false;

    auto* validate = app.add_subcommand("validate", "parse and validate a model file");
    validate->add_option("file", file, "model file")->required();

    auto* solve = app.add_subcommand("solve", "run policy iteration on an mdp file");
    solve->add_option("file", file, "model file")->required();
    solve->add_option("--initial-policy", initial_policy_text,
                      "comma-separated 1-based action indices (default: all first actions)");
    solve->add_option("--reference-state", reference_state,
                      "1-based state whose relative value is pinned to zero (default: last)");
    solve->add_option("--max-iterations", max_iterations, "iteration limit");
    solve->add_flag("--trace", with_trace, "include improvement tables");
    solve->add_flag("--json", as_json, "machine-readable output");

    auto* enumerate = app.add_subcommand("enumerate", "evaluate every policy by brute force");
    enumerate->add_option("file", file, "model file")->required();
    enumerate->add_flag("--json", as_json, "machine-readable output");

    auto* simulate_cmd = app.add_subcommand("simulate", "run a seeded chain simulation");
    simulate_cmd->add_option("file", file, "model file")->required();
    simulate_cmd->add_option("--policy", policy_text, "comma-separated 1-based action indices")
        ->required();
    simulate_cmd->add_option("--steps", steps, "number of transitions")->required();
    simulate_cmd->add_option("--seed", seed, "random seed")->required();
    simulate_cmd->add_option("--start", start_state, "1-based start state (default 1)");
    simulate_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* tree_cmd = app.add_subcommand("tree", "roll back a decision tree");
    tree_cmd->add_option("file", file, "model file")->required();
    tree_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* stages_cmd = app.add_subcommand("stages", "backward induction on a staged model");
    stages_cmd->add_option("file", file, "model file")->required();
    stages_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* classify = app.add_subcommand("classify", "growth classification from time and value");
    classify->add_option("--t", t_value, "time, must be positive")->required();
    classify->add_option("--x", x_value, "stock-price growth value")->required();
    classify->add_option("--epsilon", epsilon, "stability tolerance (default 1e-12)");
    classify->add_flag("--json", as_json, "machine-readable output");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    const RenderOptions options = options_from_env();
    try {
        if (app.got_subcommand(validate)) {
            const auto loaded = parse_problem_file(file);
            print_warnings(loaded, err);
            if (const auto* problem = std::get_if<ControlledMarkovProblem>(&loaded.model)) {
                std::size_t action_count = 0;
                for (const auto& list : problem->actions) {
                    action_count += list.size();
                }
                out << "ok: mdp with " << problem->num_states() << " states, " << action_count
                    << " actions\n";
            } else if (std::get_if<TreeNode>(&loaded.model) != nullptr) {
                out << "ok: tree\n";
            } else {
                const auto& staged = std::get<StagedModel>(loaded.model);
                out << "ok: staged with " << staged.num_stages() << " stages\n";
            }
            if (!loaded.warnings.empty()) {
                out << "warnings: " << loaded.warnings.size() << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(solve)) {
            const auto loaded = parse_problem_file(file);
            const auto& problem = expect_mdp(loaded, "solve");
            PolicyVector initial(problem.num_states(), 0);
            if (!initial_policy_text.empty()) {
                initial = policy_from_flag(initial_policy_text, problem);
            }
            const std::size_t reference =
                reference_state == 0 ? problem.num_states() - 1
                                     : reference_from_flag(reference_state, problem);
            const auto trace = policy_iteration(problem, initial, reference, max_iterations);
            if (as_json) {
                out << trace_to_json(problem, trace).dump(2) << "\n";
            } else {
                out << render_trace_human(problem, trace, options, with_trace);
            }
            return 0;
        }

        if (app.got_subcommand(enumerate)) {
            const auto loaded = parse_problem_file(file);
            const auto& problem = expect_mdp(loaded, "enumerate");
            const auto result = exhaustive_gain_max(problem);
            if (as_json) {
                out << enumeration_to_json(result).dump(2) << "\n";
            } else {
                out << render_enumeration_human(result, options);
            }
            return 0;
        }

        if (app.got_subcommand(simulate_cmd)) {
            const auto loaded = parse_problem_file(file);
            const auto& problem = expect_mdp(loaded, "simulate");
            const auto policy = policy_from_flag(policy_text, problem);
            if (start_state == 0 || start_state > problem.num_states()) {
                throw UsageError("start state must be between 1 and " +
                                 std::to_string(problem.num_states()));
            }
            if (steps < 1) {
                throw UsageError("steps must be at least 1");
            }
            const auto report = simulate(problem, policy, start_state - 1, steps, seed);
            if (as_json) {
                out << simulation_to_json(problem, report).dump(2) << "\n";
            } else {
                out << render_simulation_human(problem, report, options);
            }
            return 0;
        }

        if (app.got_subcommand(tree_cmd)) {
            const auto loaded = parse_problem_file(file);
            const auto& tree = expect_tree(loaded);
            const auto rolled = rollback(tree);
            if (as_json) {
                out << rolled_tree_to_json(tree, rolled).dump(2) << "\n";
            } else {
                out << render_rolled_tree_human(tree, rolled, options);
            }
            return 0;
        }

        if (app.got_subcommand(stages_cmd)) {
            const auto loaded = parse_problem_file(file);
            print_warnings(loaded, err);
            const auto& staged = expect_staged(loaded);
            const auto values = backward_induction(staged);
            const double initial_value = evaluate_initial(staged, values);
            if (as_json) {
                out << stage_values_to_json(staged, values, initial_value).dump(2) << "\n";
            } else {
                out << render_stage_values_human(staged, values, initial_value, options);
            }
            return 0;
        }

        if (app.got_subcommand(classify)) {
            const auto indicators = classify_growth(t_value, x_value, epsilon);
            if (as_json) {
                nlohmann::ordered_json doc;
                doc["kind"] = "growth-report";
                doc["t"] = indicators.t;
                doc["x"] = indicators.x;
                doc["rate"] = indicators.rate;
                doc["acceleration"] = indicators.acceleration;
                doc["state"] = to_string(indicators.state);
                out << doc.dump(2) << "\n";
            } else {
                out << "t: " << format_number(indicators.t, options) << "\n"
                    << "x: " << format_number(indicators.x, options) << "\n"
                    << "rate: " << format_number(indicators.rate, options) << "\n"
                    << "acceleration: " << format_number(indicators.acceleration, options) << "\n"
                    << "state: " << to_string(indicators.state) << "\n";
            }
            return 0;
        }

        err << "error: no subcommand\n";
        return 3;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const MultichainSuspected& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonUniqueStationary& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SingularMatrix& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const MaxIterationsExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        // ParseError, ValidationError, NonPositiveTime, TooManyPolicies.
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lifecycle
