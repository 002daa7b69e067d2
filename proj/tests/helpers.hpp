#pragma once

#include <random>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "lifecycle/io.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(LIFECYCLE_DATA_DIR) + "/" + name;
}

inline lifecycle::ControlledMarkovProblem load_dealership() {
    auto loaded = lifecycle::parse_problem_file(data_path("dealership.mdp"));
    return std::get<lifecycle::ControlledMarkovProblem>(loaded.model);
}

inline lifecycle::TreeNode load_product_launch() {
    auto loaded = lifecycle::parse_problem_file(data_path("product-launch.tree"));
    return std::get<lifecycle::TreeNode>(loaded.model);
}

inline lifecycle::StagedModel load_staged_example() {
    auto loaded = lifecycle::parse_problem_file(data_path("staged-example.staged"));
    return std::get<lifecycle::StagedModel>(loaded.model);
}

inline lifecycle::StagedModel load_deterministic_example() {
    auto loaded = lifecycle::parse_problem_file(data_path("deterministic-example.staged"));
    return std::get<lifecycle::StagedModel>(loaded.model);
}

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Strictly positive transition rows make every chain irreducible, so random
// problems never trip the multichain guards.
inline lifecycle::ControlledMarkovProblem random_problem(std::mt19937_64& rng,
                                                         std::size_t max_states = 5,
                                                         std::size_t max_actions = 4) {
    const std::size_t n = 2 + rng() % (max_states - 1);
    lifecycle::ControlledMarkovProblem problem;
    for (std::size_t i = 0; i < n; ++i) {
        problem.state_labels.push_back("s" + std::to_string(i + 1));
    }
    problem.actions.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t count = 1 + rng() % max_actions;
        for (std::size_t k = 0; k < count; ++k) {
            lifecycle::ActionSpec spec;
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double weight = 0.05 + uniform01(rng);
                spec.p.push_back(weight);
                sum += weight;
            }
            for (double& value : spec.p) {
                value /= sum;
            }
            for (std::size_t j = 0; j < n; ++j) {
                spec.r.push_back(static_cast<double>(static_cast<int>(rng() % 1001) - 500));
            }
            problem.actions[i].push_back(std::move(spec));
        }
    }
    return lifecycle::validate_problem(std::move(problem));
}

inline lifecycle::TreeNode random_tree(std::mt19937_64& rng, int depth, int& decision_budget) {
    const double roll = uniform01(rng);
    const bool leaf = depth >= 3 || roll < 0.25 + 0.25 * depth;
    if (leaf) {
        return lifecycle::make_terminal(static_cast<double>(static_cast<int>(rng() % 201) - 100));
    }
    const std::size_t branches = 2 + rng() % 2;
    if (decision_budget > 0 && roll > 0.6) {
        --decision_budget;
        std::vector<std::string> labels;
        std::vector<double> adjustments;
        std::vector<lifecycle::TreeNode> children;
        for (std::size_t b = 0; b < branches; ++b) {
            labels.push_back("b" + std::to_string(b + 1));
            adjustments.push_back(static_cast<double>(static_cast<int>(rng() % 101) - 50));
            children.push_back(random_tree(rng, depth + 1, decision_budget));
        }
        return lifecycle::make_decision(std::move(labels), std::move(adjustments),
                                        std::move(children));
    }
    std::vector<double> probabilities;
    std::vector<lifecycle::TreeNode> children;
    double sum = 0.0;
    for (std::size_t b = 0; b < branches; ++b) {
        const double weight = 0.1 + uniform01(rng);
        probabilities.push_back(weight);
        sum += weight;
    }
    for (double& value : probabilities) {
        value /= sum;
    }
    for (std::size_t b = 0; b < branches; ++b) {
        children.push_back(random_tree(rng, depth + 1, decision_budget));
    }
    return lifecycle::make_chance(std::move(probabilities), std::move(children));
}

// Root is always a decision node; at most decision_budget decisions overall.
inline lifecycle::TreeNode random_decision_tree(std::mt19937_64& rng, int decision_budget) {
    int budget = decision_budget - 1;
    const std::size_t branches = 2 + rng() % 2;
    std::vector<std::string> labels;
    std::vector<double> adjustments;
    std::vector<lifecycle::TreeNode> children;
    for (std::size_t b = 0; b < branches; ++b) {
        labels.push_back("b" + std::to_string(b + 1));
        adjustments.push_back(static_cast<double>(static_cast<int>(rng() % 101) - 50));
        children.push_back(random_tree(rng, 1, budget));
    }
    return lifecycle::make_decision(std::move(labels), std::move(adjustments), std::move(children));
}

// --- independent oracle: exhaustive pure-strategy enumeration over a tree ---

inline void collect_decisions(const lifecycle::TreeNode& node,
                              std::vector<const lifecycle::TreeNode*>& decisions) {
    if (node.kind == lifecycle::TreeNode::Kind::Decision) {
        decisions.push_back(&node);
    }
    for (const auto& child : node.children) {
        collect_decisions(child, decisions);
    }
}

inline double forward_value(
    const lifecycle::TreeNode& node,
    const std::unordered_map<const lifecycle::TreeNode*, std::size_t>& choice) {
    switch (node.kind) {
        case lifecycle::TreeNode::Kind::Terminal:
            return node.payoff;
        case lifecycle::TreeNode::Kind::Chance: {
            double acc = 0.0;
            for (std::size_t b = 0; b < node.children.size(); ++b) {
                acc += node.probabilities[b] * forward_value(node.children[b], choice);
            }
            return acc;
        }
        case lifecycle::TreeNode::Kind::Decision: {
            const std::size_t b = choice.at(&node);
            return node.cash_adjustments[b] + forward_value(node.children[b], choice);
        }
    }
    return 0.0;
}

inline double best_strategy_value(const lifecycle::TreeNode& root) {
    std::vector<const lifecycle::TreeNode*> decisions;
    collect_decisions(root, decisions);
    std::vector<std::size_t> assignment(decisions.size(), 0);
    std::unordered_map<const lifecycle::TreeNode*, std::size_t> choice;
    double best = 0.0;
    bool have_best = false;
    while (true) {
        choice.clear();
        for (std::size_t d = 0; d < decisions.size(); ++d) {
            choice[decisions[d]] = assignment[d];
        }
        const double value = forward_value(root, choice);
        if (!have_best || value > best) {
            best = value;
            have_best = true;
        }
        std::size_t pos = assignment.size();
        bool advanced = false;
        while (pos-- > 0) {
            if (++assignment[pos] < decisions[pos]->children.size()) {
                advanced = true;
                break;
            }
            assignment[pos] = 0;
        }
        if (!advanced) {
            return best;
        }
    }
}

// --- independent oracle: exhaustive control-assignment enumeration ---------

inline lifecycle::StagedModel random_staged_model(std::mt19937_64& rng) {
    lifecycle::StagedModel model;
    const std::size_t horizon = 3 + rng() % 2;
    model.stages.resize(horizon);
    for (std::size_t t = 0; t < horizon; ++t) {
        const std::size_t count = 1 + rng() % 2;
        for (std::size_t s = 0; s < count; ++s) {
            lifecycle::StagedState state;
            state.label = "t" + std::to_string(t) + "s" + std::to_string(s + 1);
            model.stages[t].push_back(std::move(state));
        }
    }
    for (std::size_t t = 0; t + 1 < horizon; ++t) {
        for (auto& state : model.stages[t]) {
            const std::size_t controls = 1 + rng() % 2;
            for (std::size_t c = 0; c < controls; ++c) {
                lifecycle::StagedControl control;
                control.label = "u" + std::to_string(c + 1);
                control.reward = static_cast<double>(static_cast<int>(rng() % 21) - 10);
                double sum = 0.0;
                for (std::size_t j = 0; j < model.stages[t + 1].size(); ++j) {
                    const double weight = 0.1 + uniform01(rng);
                    control.dist.push_back(weight);
                    sum += weight;
                }
                for (double& value : control.dist) {
                    value /= sum;
                }
                state.controls.push_back(std::move(control));
            }
        }
    }
    for (auto& state : model.stages.back()) {
        state.terminal_reward = static_cast<double>(static_cast<int>(rng() % 21) - 10);
    }
    double sum = 0.0;
    for (std::size_t s = 0; s < model.stages.front().size(); ++s) {
        const double weight = 0.1 + uniform01(rng);
        model.initial_distribution.push_back(weight);
        sum += weight;
    }
    for (double& value : model.initial_distribution) {
        value /= sum;
    }
    return lifecycle::validate_staged(std::move(model));
}

// Evaluates one fixed control assignment; sigma[t][s] picks the control.
inline std::vector<std::vector<double>> staged_eval(
    const lifecycle::StagedModel& model,
    const std::vector<std::vector<std::size_t>>& sigma) {
    const std::size_t horizon = model.stages.size();
    std::vector<std::vector<double>> values(horizon);
    for (const auto& state : model.stages[horizon - 1]) {
        values[horizon - 1].push_back(state.terminal_reward);
    }
    for (std::size_t t = horizon - 1; t-- > 0;) {
        for (std::size_t s = 0; s < model.stages[t].size(); ++s) {
            const auto& control = model.stages[t][s].controls[sigma[t][s]];
            double acc = control.reward;
            for (std::size_t j = 0; j < control.dist.size(); ++j) {
                acc += control.dist[j] * values[t + 1][j];
            }
            values[t].push_back(acc);
        }
    }
    return values;
}

// Per-state maxima over every control assignment.
inline std::vector<std::vector<double>> staged_brute_force(const lifecycle::StagedModel& model) {
    const std::size_t horizon = model.stages.size();
    std::vector<std::pair<std::size_t, std::size_t>> slots;  // (stage, state)
    for (std::size_t t = 0; t + 1 < horizon; ++t) {
        for (std::size_t s = 0; s < model.stages[t].size(); ++s) {
            slots.emplace_back(t, s);
        }
    }
    std::vector<std::size_t> assignment(slots.size(), 0);
    std::vector<std::vector<double>> best;
    bool have_best = false;
    while (true) {
        std::vector<std::vector<std::size_t>> sigma(horizon);
        for (std::size_t t = 0; t < horizon; ++t) {
            sigma[t].assign(model.stages[t].size(), 0);
        }
        for (std::size_t slot = 0; slot < slots.size(); ++slot) {
            sigma[slots[slot].first][slots[slot].second] = assignment[slot];
        }
        const auto values = staged_eval(model, sigma);
        if (!have_best) {
            best = values;
            have_best = true;
        } else {
            for (std::size_t t = 0; t < horizon; ++t) {
                for (std::size_t s = 0; s < values[t].size(); ++s) {
                    best[t][s] = std::max(best[t][s], values[t][s]);
                }
            }
        }
        std::size_t pos = assignment.size();
        bool advanced = false;
        while (pos-- > 0) {
            const auto [t, s] = slots[pos];
            if (++assignment[pos] < model.stages[t][s].controls.size()) {
                advanced = true;
                break;
            }
            assignment[pos] = 0;
        }
        if (!advanced) {
            return best;
        }
    }
}

}  // namespace testutil
