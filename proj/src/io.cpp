#include "lifecycle/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace lifecycle {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& member(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) {
        throw ParseError(path + ": expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(path + ": missing field '" + key + "'");
    }
    return *it;
}

double number_at(const json& value, const std::string& path) {
    if (!value.is_number()) {
        throw ParseError(path + ": expected a number");
    }
    return value.get<double>();
}

std::string string_at(const json& value, const std::string& path) {
    if (!value.is_string()) {
        throw ParseError(path + ": expected a string");
    }
    return value.get<std::string>();
}

const json& array_at(const json& value, const std::string& path) {
    if (!value.is_array()) {
        throw ParseError(path + ": expected an array");
    }
    return value;
}

std::vector<double> number_list(const json& value, const std::string& path) {
    const auto& arr = array_at(value, path);
    std::vector<double> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(number_at(arr[i], path + "[" + std::to_string(i + 1) + "]"));
    }
    return out;
}

ControlledMarkovProblem parse_mdp(const json& doc, const std::string& origin) {
    ControlledMarkovProblem problem;
    const auto& states = array_at(member(doc, "states", origin), origin + ": states");
    for (std::size_t i = 0; i < states.size(); ++i) {
        problem.state_labels.push_back(
            string_at(states[i], origin + ": states[" + std::to_string(i + 1) + "]"));
    }
    const auto& actions = array_at(member(doc, "actions", origin), origin + ": actions");
    if (actions.size() != states.size()) {
        throw ParseError(origin + ": actions lists " + std::to_string(actions.size()) +
                         " states but 'states' lists " + std::to_string(states.size()));
    }
    for (std::size_t i = 0; i < actions.size(); ++i) {
        const std::string state_path = origin + ": actions[" + std::to_string(i + 1) + "]";
        const auto& list = array_at(actions[i], state_path);
        std::vector<ActionSpec> specs;
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string path = state_path + "[" + std::to_string(k + 1) + "]";
            const auto& entry = list[k];
            ActionSpec spec;
            if (entry.is_object() && entry.contains("label")) {
                spec.label = string_at(entry["label"], path + ".label");
            }
            spec.p = number_list(member(entry, "p", path), path + ".p");
            spec.r = number_list(member(entry, "r", path), path + ".r");
            specs.push_back(std::move(spec));
        }
        problem.actions.push_back(std::move(specs));
    }
    return validate_problem(std::move(problem));
}

TreeNode parse_tree_node(const json& value, const std::string& path) {
    const std::string type = string_at(member(value, "type", path), path + ".type");
    if (type == "terminal") {
        return make_terminal(number_at(member(value, "payoff", path), path + ".payoff"));
    }
    if (type == "chance") {
        const auto& branches = array_at(member(value, "branches", path), path + ".branches");
        std::vector<double> probabilities;
        std::vector<TreeNode> children;
        for (std::size_t b = 0; b < branches.size(); ++b) {
            const std::string branch_path = path + ".branches[" + std::to_string(b + 1) + "]";
            probabilities.push_back(number_at(member(branches[b], "probability", branch_path),
                                              branch_path + ".probability"));
            children.push_back(
                parse_tree_node(member(branches[b], "node", branch_path), branch_path + ".node"));
        }
        return make_chance(std::move(probabilities), std::move(children));
    }
    if (type == "decision") {
        const auto& branches = array_at(member(value, "branches", path), path + ".branches");
        std::vector<std::string> labels;
        std::vector<double> adjustments;
        std::vector<TreeNode> children;
        for (std::size_t b = 0; b < branches.size(); ++b) {
            const std::string branch_path = path + ".branches[" + std::to_string(b + 1) + "]";
            labels.push_back(
                string_at(member(branches[b], "label", branch_path), branch_path + ".label"));
            adjustments.push_back(number_at(member(branches[b], "adjustment", branch_path),
                                            branch_path + ".adjustment"));
            children.push_back(
                parse_tree_node(member(branches[b], "node", branch_path), branch_path + ".node"));
        }
        return make_decision(std::move(labels), std::move(adjustments), std::move(children));
    }
    throw ParseError(path + ".type: unknown node type '" + type + "'");
}

TreeNode parse_tree(const json& doc, const std::string& origin) {
    return validate_tree(parse_tree_node(member(doc, "root", origin), origin + ": root"));
}

StagedModel parse_staged(const json& doc, const std::string& origin) {
    StagedModel model;
    if (doc.contains("allow_substochastic")) {
        const auto& flag = doc["allow_substochastic"];
        if (!flag.is_boolean()) {
            throw ParseError(origin + ": allow_substochastic: expected a boolean");
        }
        model.allow_substochastic = flag.get<bool>();
    }

    const auto& stages = array_at(member(doc, "stages", origin), origin + ": stages");
    if (stages.empty()) {
        throw ParseError(origin + ": stages: must not be empty");
    }

    // First pass: collect per-stage labels so distributions can be resolved
    // against the following stage.
    std::vector<std::vector<std::string>> labels(stages.size());
    std::vector<std::unordered_map<std::string, std::size_t>> index(stages.size());
    for (std::size_t t = 0; t < stages.size(); ++t) {
        const std::string stage_path = origin + ": stages[" + std::to_string(t + 1) + "]";
        const auto& states = array_at(member(stages[t], "states", stage_path), stage_path + ".states");
        for (std::size_t s = 0; s < states.size(); ++s) {
            const std::string state_path = stage_path + ".states[" + std::to_string(s + 1) + "]";
            std::string label = string_at(member(states[s], "label", state_path), state_path + ".label");
            if (!index[t].emplace(label, s).second) {
                throw ParseError(state_path + ".label: duplicate state label '" + label + "'");
            }
            labels[t].push_back(std::move(label));
        }
    }

    model.stages.resize(stages.size());
    for (std::size_t t = 0; t < stages.size(); ++t) {
        const bool final_stage = (t + 1 == stages.size());
        const std::string stage_path = origin + ": stages[" + std::to_string(t + 1) + "]";
        const auto& states = stages[t]["states"];
        for (std::size_t s = 0; s < states.size(); ++s) {
            const std::string state_path = stage_path + ".states[" + std::to_string(s + 1) + "]";
            const auto& entry = states[s];
            StagedState state;
            state.label = labels[t][s];
            if (entry.contains("terminal_reward")) {
                state.terminal_reward =
                    number_at(entry["terminal_reward"], state_path + ".terminal_reward");
            }
            if (entry.contains("controls")) {
                const auto& controls = array_at(entry["controls"], state_path + ".controls");
                for (std::size_t c = 0; c < controls.size(); ++c) {
                    const std::string control_path =
                        state_path + ".controls[" + std::to_string(c + 1) + "]";
                    const auto& control_entry = controls[c];
                    StagedControl control;
                    if (control_entry.is_object() && control_entry.contains("label")) {
                        control.label = string_at(control_entry["label"], control_path + ".label");
                    }
                    control.reward =
                        number_at(member(control_entry, "reward", control_path), control_path + ".reward");
                    const auto& dist = member(control_entry, "dist", control_path);
                    if (!dist.is_object()) {
                        throw ParseError(control_path + ".dist: expected an object");
                    }
                    if (final_stage) {
                        throw ParseError(control_path + ": final-stage state cannot have controls");
                    }
                    control.dist.assign(labels[t + 1].size(), 0.0);
                    for (const auto& [key, value] : dist.items()) {
                        const auto it = index[t + 1].find(key);
                        if (it == index[t + 1].end()) {
                            throw ParseError(control_path + ".dist: unknown next-stage state '" +
                                             key + "'");
                        }
                        control.dist[it->second] =
                            number_at(value, control_path + ".dist." + key);
                    }
                    state.controls.push_back(std::move(control));
                }
            }
            model.stages[t].push_back(std::move(state));
        }
    }

    const auto& mu = member(doc, "initial_distribution", origin);
    if (!mu.is_object()) {
        throw ParseError(origin + ": initial_distribution: expected an object");
    }
    model.initial_distribution.assign(labels.front().size(), 0.0);
    for (const auto& [key, value] : mu.items()) {
        const auto it = index.front().find(key);
        if (it == index.front().end()) {
            throw ParseError(origin + ": initial_distribution: unknown state '" + key + "'");
        }
        model.initial_distribution[it->second] =
            number_at(value, origin + ": initial_distribution." + key);
    }
    return validate_staged(std::move(model));
}

}  // namespace

LoadedModel parse_problem_text(std::string_view text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    const std::string kind = string_at(member(doc, "kind", origin), origin + ": kind");

    LoadedModel loaded;
    if (kind == "mdp") {
        loaded.model = parse_mdp(doc, origin);
    } else if (kind == "tree") {
        loaded.model = parse_tree(doc, origin);
    } else if (kind == "staged") {
        auto model = parse_staged(doc, origin);
        loaded.warnings = substochastic_warnings(model);
        loaded.model = std::move(model);
    } else {
        throw ParseError(origin + ": kind: expected \"mdp\", \"tree\" or \"staged\", got \"" +
                         kind + "\"");
    }
    return loaded;
}

LoadedModel parse_problem_file(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) {
        throw ParseError(path.string() + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_problem_text(buffer.str(), path.filename().string());
}

nlohmann::ordered_json to_json(const ControlledMarkovProblem& problem) {
    ordered_json doc;
    doc["kind"] = "mdp";
    doc["states"] = problem.state_labels;
    ordered_json actions = ordered_json::array();
    for (const auto& list : problem.actions) {
        ordered_json state_actions = ordered_json::array();
        for (const auto& act : list) {
            ordered_json entry;
            entry["label"] = act.label;
            entry["p"] = act.p;
            entry["r"] = act.r;
            state_actions.push_back(std::move(entry));
        }
        actions.push_back(std::move(state_actions));
    }
    doc["actions"] = std::move(actions);
    return doc;
}

namespace {

ordered_json tree_node_to_json(const TreeNode& node) {
    ordered_json entry;
    switch (node.kind) {
        case TreeNode::Kind::Terminal:
            entry["type"] = "terminal";
            entry["payoff"] = node.payoff;
            break;
        case TreeNode::Kind::Chance: {
            entry["type"] = "chance";
            ordered_json branches = ordered_json::array();
            for (std::size_t b = 0; b < node.children.size(); ++b) {
                ordered_json branch;
                branch["probability"] = node.probabilities[b];
                branch["node"] = tree_node_to_json(node.children[b]);
                branches.push_back(std::move(branch));
            }
            entry["branches"] = std::move(branches);
            break;
        }
        case TreeNode::Kind::Decision: {
            entry["type"] = "decision";
            ordered_json branches = ordered_json::array();
            for (std::size_t b = 0; b < node.children.size(); ++b) {
                ordered_json branch;
                branch["label"] = node.labels[b];
                branch["adjustment"] = node.cash_adjustments[b];
                branch["node"] = tree_node_to_json(node.children[b]);
                branches.push_back(std::move(branch));
            }
            entry["branches"] = std::move(branches);
            break;
        }
    }
    return entry;
}

}  // namespace

nlohmann::ordered_json to_json(const TreeNode& root) {
    ordered_json doc;
    doc["kind"] = "tree";
    doc["root"] = tree_node_to_json(root);
    return doc;
}

nlohmann::ordered_json to_json(const StagedModel& model) {
    ordered_json doc;
    doc["kind"] = "staged";
    if (model.allow_substochastic) {
        doc["allow_substochastic"] = true;
    }
    ordered_json stages = ordered_json::array();
    for (std::size_t t = 0; t < model.stages.size(); ++t) {
        const bool final_stage = (t + 1 == model.stages.size());
        ordered_json states = ordered_json::array();
        for (const auto& state : model.stages[t]) {
            ordered_json entry;
            entry["label"] = state.label;
            if (final_stage) {
                entry["terminal_reward"] = state.terminal_reward;
            } else {
                ordered_json controls = ordered_json::array();
                for (const auto& control : state.controls) {
                    ordered_json control_entry;
                    control_entry["label"] = control.label;
                    control_entry["reward"] = control.reward;
                    ordered_json dist;
                    for (std::size_t j = 0; j < control.dist.size(); ++j) {
                        dist[model.stages[t + 1][j].label] = control.dist[j];
                    }
                    control_entry["dist"] = std::move(dist);
                    controls.push_back(std::move(control_entry));
                }
                entry["controls"] = std::move(controls);
            }
            states.push_back(std::move(entry));
        }
        ordered_json stage;
        stage["states"] = std::move(states);
        stages.push_back(std::move(stage));
    }
    doc["stages"] = std::move(stages);
    ordered_json mu;
    for (std::size_t i = 0; i < model.initial_distribution.size(); ++i) {
        mu[model.stages.front()[i].label] = model.initial_distribution[i];
    }
    doc["initial_distribution"] = std::move(mu);
    return doc;
}

std::string render_problem(const ProblemModel& model) {
    const auto doc = std::visit([](const auto& value) { return to_json(value); }, model);
    return doc.dump(2) + "\n";
}

std::string format_number(double value, const RenderOptions& options) {
    if (value == 0.0) {
        value = 0.0;  // normalize -0
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", options.precision, value);
    return buffer;
}

std::string format_policy(const PolicyVector& policy) {
    std::string text;
    for (std::size_t i = 0; i < policy.size(); ++i) {
        if (i > 0) {
            text += ',';
        }
        text += std::to_string(policy[i] + 1);
    }
    return text;
}

PolicyVector parse_policy(std::string_view text) {
    PolicyVector policy;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string token(text.substr(start, end - start));
        std::size_t consumed = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(token, &consumed);
        } catch (const std::exception&) {
            throw ParseError("policy entry '" + token + "' is not a positive integer");
        }
        if (consumed != token.size() || value == 0) {
            throw ParseError("policy entry '" + token + "' is not a positive integer (1-based)");
        }
        policy.push_back(static_cast<std::size_t>(value - 1));
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    if (policy.empty()) {
        throw ParseError("policy is empty");
    }
    return policy;
}

std::string render_improvement_table(const ImprovementTable& table, const RenderOptions& options) {
    std::string out = "  state  action      test value\n";
    char line[128];
    for (std::size_t i = 0; i < table.test_values.size(); ++i) {
        for (std::size_t k = 0; k < table.test_values[i].size(); ++k) {
            const std::string value = format_number(table.test_values[i][k], options);
            std::snprintf(line, sizeof(line), "  %5zu  %6zu  %15s%s\n", i + 1, k + 1,
                          value.c_str(), table.chosen[i] == k ? "  +" : "");
            out += line;
        }
    }
    return out;
}

std::string render_trace_human(const ControlledMarkovProblem& problem,
                               const IterationTrace& trace,
                               const RenderOptions& options,
                               bool include_tables) {
    std::string out;
    out += "states: " + std::to_string(problem.num_states()) + "\n";
    if (!trace.steps.empty()) {
        out += "reference state: " +
               std::to_string(trace.steps.front().solution.reference_state + 1) + "\n";
    }
    for (std::size_t step = 0; step < trace.steps.size(); ++step) {
        const auto& entry = trace.steps[step];
        out += "iteration " + std::to_string(step + 1) + "\n";
        out += "  policy: " + format_policy(entry.policy) + "\n";
        out += "  gain: " + format_number(entry.solution.gain, options) + "\n";
        out += "  v:";
        for (double value : entry.solution.v) {
            out += " " + format_number(value, options);
        }
        out += "\n";
        if (include_tables) {
            out += render_improvement_table(entry.improvement, options);
        }
    }
    if (trace.steps.empty()) {
        return out;
    }
    out += "converged after " + std::to_string(trace.steps.size()) + " iteration" +
           (trace.steps.size() == 1 ? "" : "s") + "\n";
    out += "final policy: " + format_policy(trace.final_policy) + "\n";
    out += "final gain: " + format_number(trace.steps.back().solution.gain, options) + "\n";
    out += "final actions:\n";
    for (std::size_t i = 0; i < trace.final_policy.size(); ++i) {
        const auto& act = problem.actions[i][trace.final_policy[i]];
        out += "  " + problem.state_labels[i] + ": " +
               (act.label.empty() ? "action " + std::to_string(trace.final_policy[i] + 1)
                                  : act.label) +
               "\n";
    }
    return out;
}

namespace {

ordered_json policy_to_json(const PolicyVector& policy) {
    ordered_json arr = ordered_json::array();
    for (std::size_t choice : policy) {
        arr.push_back(choice + 1);
    }
    return arr;
}

}  // namespace

nlohmann::ordered_json trace_to_json(const ControlledMarkovProblem& problem,
                                     const IterationTrace& trace) {
    ordered_json doc;
    doc["kind"] = "solve-report";
    doc["states"] = problem.num_states();
    if (!trace.steps.empty()) {
        doc["reference_state"] = trace.steps.front().solution.reference_state + 1;
    }
    ordered_json iterations = ordered_json::array();
    for (const auto& step : trace.steps) {
        ordered_json entry;
        entry["policy"] = policy_to_json(step.policy);
        entry["gain"] = step.solution.gain;
        entry["v"] = step.solution.v;
        entry["q"] = policy_matrices(problem, step.policy).q;
        entry["test_values"] = step.improvement.test_values;
        entry["chosen"] = policy_to_json(step.improvement.chosen);
        iterations.push_back(std::move(entry));
    }
    doc["iterations"] = std::move(iterations);
    doc["final_policy"] = policy_to_json(trace.final_policy);
    if (!trace.steps.empty()) {
        doc["final_gain"] = trace.steps.back().solution.gain;
    }
    ordered_json actions = ordered_json::array();
    for (std::size_t i = 0; i < trace.final_policy.size(); ++i) {
        actions.push_back(problem.actions[i][trace.final_policy[i]].label);
    }
    doc["final_actions"] = std::move(actions);
    return doc;
}

std::string render_enumeration_human(const EnumerationResult& result,
                                     const RenderOptions& options) {
    std::string out;
    out += "policies total: " + std::to_string(result.total_policies) + "\n";
    out += "policies evaluated: " + std::to_string(result.policies_evaluated()) + "\n";
    out += "multichain skipped: " + std::to_string(result.skipped.size()) + "\n";
    out += "best policy: " + format_policy(result.best_policy) + "\n";
    out += "best gain: " + format_number(result.best_gain, options) + "\n";
    return out;
}

nlohmann::ordered_json enumeration_to_json(const EnumerationResult& result) {
    ordered_json doc;
    doc["kind"] = "enumeration-report";
    doc["total_policies"] = result.total_policies;
    doc["policies_evaluated"] = result.policies_evaluated();
    doc["best_policy"] = policy_to_json(result.best_policy);
    doc["best_gain"] = result.best_gain;
    ordered_json skipped = ordered_json::array();
    for (const auto& policy : result.skipped) {
        skipped.push_back(policy_to_json(policy));
    }
    doc["skipped"] = std::move(skipped);
    if (result.per_policy) {
        ordered_json listing = ordered_json::array();
        for (const auto& [policy, gain] : *result.per_policy) {
            ordered_json entry;
            entry["policy"] = policy_to_json(policy);
            entry["gain"] = gain;
            listing.push_back(std::move(entry));
        }
        doc["per_policy"] = std::move(listing);
    }
    return doc;
}

std::string render_simulation_human(const ControlledMarkovProblem& problem,
                                    const SimulationReport& report,
                                    const RenderOptions& options) {
    std::string out;
    out += "seed: " + std::to_string(report.seed) + "\n";
    out += "steps: " + std::to_string(report.steps) + "\n";
    out += "start state: " + std::to_string(report.start_state + 1) + " (" +
           problem.state_labels[report.start_state] + ")\n";
    out += "total reward: " + format_number(report.total_reward, options) + "\n";
    out += "empirical gain: " + format_number(report.empirical_gain, options) + "\n";
    out += "visit frequencies:";
    for (std::size_t i = 0; i < report.state_visit_frequencies.size(); ++i) {
        out += " " + problem.state_labels[i] + "=" +
               format_number(report.state_visit_frequencies[i], options);
    }
    out += "\n";
    return out;
}

nlohmann::ordered_json simulation_to_json(const ControlledMarkovProblem& problem,
                                          const SimulationReport& report) {
    ordered_json doc;
    doc["kind"] = "simulation-report";
    doc["seed"] = report.seed;
    doc["steps"] = report.steps;
    doc["start_state"] = report.start_state + 1;
    doc["start_state_label"] = problem.state_labels[report.start_state];
    doc["total_reward"] = report.total_reward;
    doc["empirical_gain"] = report.empirical_gain;
    doc["state_visit_frequencies"] = report.state_visit_frequencies;
    return doc;
}

namespace {

void render_rolled_node(const TreeNode& node, const RolledBackNode& rolled,
                        std::size_t indent, const RenderOptions& options, std::string& out) {
    const std::string pad(indent, ' ');
    switch (node.kind) {
        case TreeNode::Kind::Terminal:
            out += pad + "terminal  value=" + format_number(rolled.value, options) + "\n";
            return;
        case TreeNode::Kind::Chance:
            out += pad + "chance  value=" + format_number(rolled.value, options) + "\n";
            for (std::size_t b = 0; b < node.children.size(); ++b) {
                out += pad + "  [p=" + format_number(node.probabilities[b], options) + "]\n";
                render_rolled_node(node.children[b], rolled.children[b], indent + 4, options, out);
            }
            return;
        case TreeNode::Kind::Decision:
            out += pad + "decision  value=" + format_number(rolled.value, options) +
                   "  best=" + node.labels[rolled.best_branch] + "\n";
            for (std::size_t b = 0; b < node.children.size(); ++b) {
                const double branch_value =
                    node.cash_adjustments[b] + rolled.children[b].value;
                out += pad + "  [" + node.labels[b] +
                       "  cash=" + format_number(node.cash_adjustments[b], options) +
                       "  value=" + format_number(branch_value, options) +
                       (b == rolled.best_branch ? "  +" : "") + "]\n";
                render_rolled_node(node.children[b], rolled.children[b], indent + 4, options, out);
            }
            return;
    }
}

ordered_json rolled_node_to_json(const TreeNode& node, const RolledBackNode& rolled) {
    ordered_json entry;
    switch (node.kind) {
        case TreeNode::Kind::Terminal:
            entry["type"] = "terminal";
            entry["value"] = rolled.value;
            break;
        case TreeNode::Kind::Chance: {
            entry["type"] = "chance";
            entry["value"] = rolled.value;
            ordered_json branches = ordered_json::array();
            for (std::size_t b = 0; b < node.children.size(); ++b) {
                ordered_json branch;
                branch["probability"] = node.probabilities[b];
                branch["node"] = rolled_node_to_json(node.children[b], rolled.children[b]);
                branches.push_back(std::move(branch));
            }
            entry["branches"] = std::move(branches);
            break;
        }
        case TreeNode::Kind::Decision: {
            entry["type"] = "decision";
            entry["value"] = rolled.value;
            entry["best_branch"] = rolled.best_branch + 1;
            entry["best_label"] = node.labels[rolled.best_branch];
            ordered_json branches = ordered_json::array();
            for (std::size_t b = 0; b < node.children.size(); ++b) {
                ordered_json branch;
                branch["label"] = node.labels[b];
                branch["adjustment"] = node.cash_adjustments[b];
                branch["value"] = node.cash_adjustments[b] + rolled.children[b].value;
                branch["node"] = rolled_node_to_json(node.children[b], rolled.children[b]);
                branches.push_back(std::move(branch));
            }
            entry["branches"] = std::move(branches);
            break;
        }
    }
    return entry;
}

}  // namespace

std::string render_rolled_tree_human(const TreeNode& tree, const RolledBackNode& rolled,
                                     const RenderOptions& options) {
    std::string out = "rollback value: " + format_number(rolled.value, options) + "\n";
    render_rolled_node(tree, rolled, 0, options, out);
    return out;
}

nlohmann::ordered_json rolled_tree_to_json(const TreeNode& tree, const RolledBackNode& rolled) {
    ordered_json doc;
    doc["kind"] = "tree-report";
    doc["value"] = rolled.value;
    doc["root"] = rolled_node_to_json(tree, rolled);
    return doc;
}

std::string render_stage_values_human(const StagedModel& model, const StageValues& values,
                                      double initial_value, const RenderOptions& options) {
    std::string out;
    for (std::size_t t = 0; t < model.stages.size(); ++t) {
        const bool final_stage = (t + 1 == model.stages.size());
        out += "stage " + std::to_string(t) + (final_stage ? " (terminal)" : "") + "\n";
        for (std::size_t s = 0; s < model.stages[t].size(); ++s) {
            const auto& state = model.stages[t][s];
            out += "  " + state.label + ": value=" + format_number(values.value[t][s], options);
            if (!final_stage) {
                const std::size_t best = values.optimal_control[t][s];
                const auto& control = state.controls[best];
                out += "  control=" +
                       (control.label.empty() ? "#" + std::to_string(best + 1) : control.label);
                out += "  candidates:";
                for (std::size_t c = 0; c < values.control_values[t][s].size(); ++c) {
                    const auto& candidate = state.controls[c];
                    out += " " + (candidate.label.empty() ? "#" + std::to_string(c + 1)
                                                          : candidate.label) +
                           "=" + format_number(values.control_values[t][s][c], options);
                }
            }
            out += "\n";
        }
    }
    out += "initial value: " + format_number(initial_value, options) + "\n";
    return out;
}

nlohmann::ordered_json stage_values_to_json(const StagedModel& model, const StageValues& values,
                                            double initial_value) {
    ordered_json doc;
    doc["kind"] = "stages-report";
    ordered_json stages = ordered_json::array();
    for (std::size_t t = 0; t < model.stages.size(); ++t) {
        const bool final_stage = (t + 1 == model.stages.size());
        ordered_json states = ordered_json::array();
        for (std::size_t s = 0; s < model.stages[t].size(); ++s) {
            const auto& state = model.stages[t][s];
            ordered_json entry;
            entry["label"] = state.label;
            entry["value"] = values.value[t][s];
            if (!final_stage) {
                entry["optimal_control"] = values.optimal_control[t][s] + 1;
                entry["optimal_control_label"] =
                    state.controls[values.optimal_control[t][s]].label;
                entry["control_values"] = values.control_values[t][s];
            }
            states.push_back(std::move(entry));
        }
        ordered_json stage;
        stage["states"] = std::move(states);
        stages.push_back(std::move(stage));
    }
    doc["stages"] = std::move(stages);
    doc["initial_value"] = initial_value;
    return doc;
}

}  // namespace lifecycle
