#include "lifecycle/model.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace lifecycle {

namespace {

std::string coord(std::size_t state, std::size_t k) {
    return "state " + std::to_string(state + 1) + ", action " + std::to_string(k + 1);
}

}  // namespace

std::size_t ControlledMarkovProblem::num_actions(std::size_t state) const {
    if (state >= actions.size()) {
        throw std::out_of_range("state index " + std::to_string(state + 1) + " out of range");
    }
    return actions[state].size();
}

const ActionSpec& ControlledMarkovProblem::action(std::size_t state, std::size_t k) const {
    if (state >= actions.size()) {
        throw std::out_of_range("state index " + std::to_string(state + 1) + " out of range");
    }
    if (k >= actions[state].size()) {
        throw std::out_of_range("action index " + std::to_string(k + 1) + " out of range in state " +
                                std::to_string(state + 1));
    }
    return actions[state][k];
}

std::vector<Issue> check_problem(const ControlledMarkovProblem& problem) {
    std::vector<Issue> issues;
    const std::size_t n = problem.state_labels.size();
    if (n == 0) {
        issues.push_back({IssueKind::ShapeMismatch, "", "problem has no states"});
        return issues;
    }
    if (problem.actions.size() != n) {
        issues.push_back({IssueKind::ShapeMismatch, "",
                          "have " + std::to_string(problem.actions.size()) + " action lists for " +
                              std::to_string(n) + " states"});
        return issues;
    }

    for (std::size_t i = 0; i < n; ++i) {
        const auto& list = problem.actions[i];
        if (list.empty()) {
            issues.push_back({IssueKind::EmptyActionSet, "state " + std::to_string(i + 1),
                              "state has no actions"});
            continue;
        }
        for (std::size_t k = 0; k < list.size(); ++k) {
            const auto& act = list[k];
            if (act.p.size() != n || act.r.size() != n) {
                issues.push_back({IssueKind::ShapeMismatch, coord(i, k),
                                  "p has " + std::to_string(act.p.size()) + " and r has " +
                                      std::to_string(act.r.size()) + " entries, expected " +
                                      std::to_string(n)});
                continue;
            }
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (act.p[j] < 0.0) {
                    issues.push_back({IssueKind::NegativeProbability, coord(i, k),
                                      "p[" + std::to_string(j + 1) + "] = " +
                                          std::to_string(act.p[j])});
                }
                sum += act.p[j];
            }
            // Non-negative entries plus a unit row sum imply every p is in [0,1].
            if (!(std::abs(sum - 1.0) <= kRowSumTolerance)) {
                issues.push_back({IssueKind::RowSumError, coord(i, k),
                                  "row sums to " + std::to_string(sum)});
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (!std::isfinite(act.r[j])) {
                    issues.push_back({IssueKind::NonFiniteNumber, coord(i, k),
                                      "r[" + std::to_string(j + 1) + "] is not finite"});
                }
            }
        }
    }
    return issues;
}

ControlledMarkovProblem validate_problem(ControlledMarkovProblem raw) {
    auto issues = check_problem(raw);
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }
    return raw;
}

void require_policy(const ControlledMarkovProblem& problem, const PolicyVector& policy) {
    if (policy.size() != problem.num_states()) {
        throw std::out_of_range("policy has " + std::to_string(policy.size()) +
                                " choices for " + std::to_string(problem.num_states()) + " states");
    }
    for (std::size_t i = 0; i < policy.size(); ++i) {
        if (policy[i] >= problem.actions[i].size()) {
            throw std::out_of_range("policy chooses action " + std::to_string(policy[i] + 1) +
                                    " in state " + std::to_string(i + 1) + " which has only " +
                                    std::to_string(problem.actions[i].size()) + " actions");
        }
    }
}

double expected_immediate_reward(const ControlledMarkovProblem& problem,
                                 std::size_t state, std::size_t k) {
    const auto& act = problem.action(state, k);
    double acc = 0.0;
    for (std::size_t j = 0; j < act.p.size(); ++j) {
        acc += act.p[j] * act.r[j];
    }
    return acc;
}

PolicyMatrices policy_matrices(const ControlledMarkovProblem& problem,
                               const PolicyVector& policy) {
    require_policy(problem, policy);
    const std::size_t n = problem.num_states();
    PolicyMatrices result;
    result.p.reserve(n);
    result.q.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        result.p.push_back(problem.actions[i][policy[i]].p);
        result.q.push_back(expected_immediate_reward(problem, i, policy[i]));
    }
    return result;
}

}  // namespace lifecycle
