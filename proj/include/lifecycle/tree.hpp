#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lifecycle/errors.hpp"

namespace lifecycle {

// Finite decision tree. Decision branches carry a label and a signed cash
// adjustment, chance branches a probability, terminals a payoff. Children
// are held by value, so a tree is acyclic by construction.
struct TreeNode {
    enum class Kind { Decision, Chance, Terminal };

    Kind kind = Kind::Terminal;
    double payoff = 0.0;                   // Terminal
    std::vector<TreeNode> children;        // Decision / Chance
    std::vector<std::string> labels;       // Decision, aligned with children
    std::vector<double> cash_adjustments;  // Decision, aligned with children
    std::vector<double> probabilities;     // Chance, aligned with children

    std::size_t num_branches() const { return children.size(); }

    bool operator==(const TreeNode&) const = default;
};

TreeNode make_terminal(double payoff);
TreeNode make_chance(std::vector<double> probabilities, std::vector<TreeNode> children);
TreeNode make_decision(std::vector<std::string> labels,
                       std::vector<double> cash_adjustments,
                       std::vector<TreeNode> children);

std::vector<Issue> check_tree(const TreeNode& root);
TreeNode validate_tree(TreeNode root);

// Mirror of the input tree annotated with a value per node and, at each
// decision node, the index of the optimal branch.
struct RolledBackNode {
    double value = 0.0;
    std::size_t best_branch = 0;  // decision nodes only
    std::vector<RolledBackNode> children;
};

// Expectation at chance nodes, max of (cash adjustment + child value) at
// decision nodes; ties break toward the earliest branch.
RolledBackNode rollback(const TreeNode& root);

// marginal[j] = sum_i prior[i] * conditional[i][j].
std::vector<double> total_probability(const std::vector<double>& prior,
                                      const std::vector<std::vector<double>>& conditional);

// Inputs for the product-launch tree: costs, per-unit profit, sales volumes
// for (successful, mediocre, negative) outcomes, prior outcome
// probabilities for the regional test and the conditional national-outcome
// rows given each regional outcome.
struct LaunchParameters {
    double regional_cost = 0.0;
    double national_cost = 0.0;
    double unit_profit = 0.0;
    std::array<double, 3> regional_volumes{};
    std::array<double, 3> national_volumes{};
    std::array<double, 3> prior{};
    std::array<std::array<double, 3>, 3> conditional{};
};

std::vector<Issue> check_launch_parameters(const LaunchParameters& params);

// Root decision: launch nationally right away, run the regional test
// first, or do nothing. Under the test branch each regional outcome leads
// to a stop-or-launch decision whose cash already includes the regional
// profit, so every node value is the total expected profit of the
// corresponding plan.
TreeNode build_product_launch_tree(const LaunchParameters& params);

}  // namespace lifecycle
