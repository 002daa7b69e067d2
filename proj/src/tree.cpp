#include "lifecycle/tree.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace lifecycle {

namespace {

constexpr double kProbabilityTolerance = 1e-9;

void check_node(const TreeNode& node, const std::string& path, std::vector<Issue>& issues) {
    switch (node.kind) {
        case TreeNode::Kind::Terminal:
            if (!std::isfinite(node.payoff)) {
                issues.push_back({IssueKind::NonFiniteNumber, path, "terminal payoff is not finite"});
            }
            return;
        case TreeNode::Kind::Decision: {
            if (node.children.empty()) {
                issues.push_back({IssueKind::EmptyActionSet, path, "decision node has no branches"});
                return;
            }
            if (node.labels.size() != node.children.size() ||
                node.cash_adjustments.size() != node.children.size()) {
                issues.push_back({IssueKind::ShapeMismatch, path,
                                  "decision branch metadata does not match branch count"});
                return;
            }
            for (std::size_t b = 0; b < node.children.size(); ++b) {
                if (!std::isfinite(node.cash_adjustments[b])) {
                    issues.push_back({IssueKind::NonFiniteNumber, path,
                                      "cash adjustment of branch " + std::to_string(b + 1) +
                                          " is not finite"});
                }
                check_node(node.children[b], path + "/" + node.labels[b], issues);
            }
            return;
        }
        case TreeNode::Kind::Chance: {
            if (node.children.empty()) {
                issues.push_back({IssueKind::EmptyActionSet, path, "chance node has no branches"});
                return;
            }
            if (node.probabilities.size() != node.children.size()) {
                issues.push_back({IssueKind::ShapeMismatch, path,
                                  "chance probabilities do not match branch count"});
                return;
            }
            double sum = 0.0;
            for (std::size_t b = 0; b < node.children.size(); ++b) {
                if (node.probabilities[b] < 0.0) {
                    issues.push_back({IssueKind::NegativeProbability, path,
                                      "branch " + std::to_string(b + 1) + " probability " +
                                          std::to_string(node.probabilities[b])});
                }
                sum += node.probabilities[b];
            }
            if (!(std::abs(sum - 1.0) <= kProbabilityTolerance)) {
                issues.push_back({IssueKind::RowSumError, path,
                                  "branch probabilities sum to " + std::to_string(sum)});
            }
            for (std::size_t b = 0; b < node.children.size(); ++b) {
                check_node(node.children[b], path + "/#" + std::to_string(b + 1), issues);
            }
            return;
        }
    }
}

}  // namespace

TreeNode make_terminal(double payoff) {
    TreeNode node;
    node.kind = TreeNode::Kind::Terminal;
    node.payoff = payoff;
    return node;
}

TreeNode make_chance(std::vector<double> probabilities, std::vector<TreeNode> children) {
    if (probabilities.size() != children.size()) {
        throw std::invalid_argument("make_chance: probabilities do not match children");
    }
    TreeNode node;
    node.kind = TreeNode::Kind::Chance;
    node.probabilities = std::move(probabilities);
    node.children = std::move(children);
    return node;
}

TreeNode make_decision(std::vector<std::string> labels,
                       std::vector<double> cash_adjustments,
                       std::vector<TreeNode> children) {
    if (labels.size() != children.size() || cash_adjustments.size() != children.size()) {
        throw std::invalid_argument("make_decision: branch metadata does not match children");
    }
    TreeNode node;
    node.kind = TreeNode::Kind::Decision;
    node.labels = std::move(labels);
    node.cash_adjustments = std::move(cash_adjustments);
    node.children = std::move(children);
    return node;
}

std::vector<Issue> check_tree(const TreeNode& root) {
    std::vector<Issue> issues;
    check_node(root, "<root>", issues);
    return issues;
}

TreeNode validate_tree(TreeNode root) {
    auto issues = check_tree(root);
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }
    return root;
}

RolledBackNode rollback(const TreeNode& root) {
    RolledBackNode rolled;
    rolled.children.reserve(root.children.size());
    for (const auto& child : root.children) {
        rolled.children.push_back(rollback(child));
    }
    switch (root.kind) {
        case TreeNode::Kind::Terminal:
            rolled.value = root.payoff;
            break;
        case TreeNode::Kind::Chance: {
            double acc = 0.0;
            for (std::size_t b = 0; b < rolled.children.size(); ++b) {
                acc += root.probabilities[b] * rolled.children[b].value;
            }
            rolled.value = acc;
            break;
        }
        case TreeNode::Kind::Decision: {
            if (rolled.children.empty()) {
                throw std::invalid_argument("rollback: decision node has no branches");
            }
            double best = root.cash_adjustments[0] + rolled.children[0].value;
            std::size_t best_branch = 0;
            for (std::size_t b = 1; b < rolled.children.size(); ++b) {
                const double candidate = root.cash_adjustments[b] + rolled.children[b].value;
                if (candidate > best) {
                    best = candidate;
                    best_branch = b;
                }
            }
            rolled.value = best;
            rolled.best_branch = best_branch;
            break;
        }
    }
    return rolled;
}

std::vector<double> total_probability(const std::vector<double>& prior,
                                      const std::vector<std::vector<double>>& conditional) {
    std::vector<Issue> issues;
    if (prior.size() != conditional.size() || prior.empty()) {
        throw std::invalid_argument("total_probability: prior does not match conditional rows");
    }
    const std::size_t m = conditional.front().size();
    double prior_sum = 0.0;
    for (double value : prior) {
        if (value < 0.0) {
            issues.push_back({IssueKind::NegativeProbability, "prior", std::to_string(value)});
        }
        prior_sum += value;
    }
    if (!(std::abs(prior_sum - 1.0) <= kProbabilityTolerance)) {
        issues.push_back({IssueKind::RowSumError, "prior",
                          "sums to " + std::to_string(prior_sum)});
    }
    for (std::size_t i = 0; i < conditional.size(); ++i) {
        const auto& row = conditional[i];
        if (row.size() != m) {
            issues.push_back({IssueKind::ShapeMismatch, "conditional row " + std::to_string(i + 1),
                              "ragged matrix"});
            continue;
        }
        double sum = 0.0;
        for (double value : row) {
            if (value < 0.0) {
                issues.push_back({IssueKind::NegativeProbability,
                                  "conditional row " + std::to_string(i + 1),
                                  std::to_string(value)});
            }
            sum += value;
        }
        if (!(std::abs(sum - 1.0) <= kProbabilityTolerance)) {
            issues.push_back({IssueKind::RowSumError, "conditional row " + std::to_string(i + 1),
                              "sums to " + std::to_string(sum)});
        }
    }
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }

    std::vector<double> marginal(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < prior.size(); ++i) {
            acc += prior[i] * conditional[i][j];
        }
        marginal[j] = acc;
    }
    return marginal;
}

std::vector<Issue> check_launch_parameters(const LaunchParameters& params) {
    std::vector<Issue> issues;
    double prior_sum = 0.0;
    for (double value : params.prior) {
        if (value < 0.0) {
            issues.push_back({IssueKind::NegativeProbability, "prior", std::to_string(value)});
        }
        prior_sum += value;
    }
    if (!(std::abs(prior_sum - 1.0) <= kProbabilityTolerance)) {
        issues.push_back({IssueKind::RowSumError, "prior", "sums to " + std::to_string(prior_sum)});
    }
    for (std::size_t i = 0; i < params.conditional.size(); ++i) {
        double sum = 0.0;
        for (double value : params.conditional[i]) {
            if (value < 0.0) {
                issues.push_back({IssueKind::NegativeProbability,
                                  "conditional row " + std::to_string(i + 1),
                                  std::to_string(value)});
            }
            sum += value;
        }
        if (!(std::abs(sum - 1.0) <= kProbabilityTolerance)) {
            issues.push_back({IssueKind::RowSumError, "conditional row " + std::to_string(i + 1),
                              "sums to " + std::to_string(sum)});
        }
    }
    for (double volume : params.regional_volumes) {
        if (!(volume > 0.0)) {
            issues.push_back({IssueKind::ShapeMismatch, "regional volumes",
                              "volumes must be positive"});
            break;
        }
    }
    for (double volume : params.national_volumes) {
        if (!(volume > 0.0)) {
            issues.push_back({IssueKind::ShapeMismatch, "national volumes",
                              "volumes must be positive"});
            break;
        }
    }
    if (!std::isfinite(params.regional_cost) || !std::isfinite(params.national_cost) ||
        !std::isfinite(params.unit_profit)) {
        issues.push_back({IssueKind::NonFiniteNumber, "costs", "costs and profit must be finite"});
    }
    return issues;
}

TreeNode build_product_launch_tree(const LaunchParameters& params) {
    auto issues = check_launch_parameters(params);
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }

    const std::vector<double> prior(params.prior.begin(), params.prior.end());
    std::vector<std::vector<double>> conditional;
    for (const auto& row : params.conditional) {
        conditional.emplace_back(row.begin(), row.end());
    }
    const auto marginal = total_probability(prior, conditional);

    std::array<double, 3> national_revenue{};
    std::array<double, 3> regional_profit{};
    for (std::size_t j = 0; j < 3; ++j) {
        national_revenue[j] = params.national_volumes[j] * params.unit_profit;
        regional_profit[j] = params.regional_volumes[j] * params.unit_profit - params.regional_cost;
    }

    // Launching without a test: chance over the marginal national outcomes.
    std::vector<TreeNode> direct_outcomes;
    for (std::size_t j = 0; j < 3; ++j) {
        direct_outcomes.push_back(make_terminal(national_revenue[j]));
    }
    TreeNode direct = make_chance(marginal, std::move(direct_outcomes));

    // Testing first: every regional outcome leads to a stop-or-launch
    // decision. The regional profit of the observed outcome is folded into
    // the stop terminal and the national payoffs, so each branch value is
    // the total profit of that plan.
    std::vector<TreeNode> outcome_decisions;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<TreeNode> national_outcomes;
        for (std::size_t j = 0; j < 3; ++j) {
            national_outcomes.push_back(make_terminal(national_revenue[j] + regional_profit[i]));
        }
        TreeNode go = make_chance(conditional[i], std::move(national_outcomes));
        outcome_decisions.push_back(make_decision(
            {"stop", "launch-national"},
            {0.0, -params.national_cost},
            {make_terminal(regional_profit[i]), std::move(go)}));
    }
    TreeNode tested = make_chance(prior, std::move(outcome_decisions));

    std::vector<TreeNode> root_children;
    root_children.push_back(std::move(direct));
    root_children.push_back(std::move(tested));
    root_children.push_back(make_terminal(0.0));
    return make_decision({"launch-national", "test-regional", "do-nothing"},
                         {-params.national_cost, 0.0, 0.0},
                         std::move(root_children));
}

}  // namespace lifecycle
