#include "lifecycle/staged.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace lifecycle {

namespace {

constexpr double kDistTolerance = 1e-9;

std::string coord(std::size_t stage, const StagedState& state) {
    return "stage " + std::to_string(stage) + ", state " + state.label;
}

}  // namespace

std::vector<Issue> check_staged(const StagedModel& model) {
    std::vector<Issue> issues;
    if (model.stages.empty()) {
        issues.push_back({IssueKind::ShapeMismatch, "", "model has no stages"});
        return issues;
    }
    for (std::size_t t = 0; t < model.stages.size(); ++t) {
        if (model.stages[t].empty()) {
            issues.push_back({IssueKind::ShapeMismatch, "stage " + std::to_string(t),
                              "stage has no states"});
        }
    }
    const std::size_t last = model.stages.size() - 1;
    for (std::size_t t = 0; t < model.stages.size(); ++t) {
        for (const auto& state : model.stages[t]) {
            if (t == last) {
                if (!state.controls.empty()) {
                    issues.push_back({IssueKind::ShapeMismatch, coord(t, state),
                                      "final-stage state has controls"});
                }
                if (!std::isfinite(state.terminal_reward)) {
                    issues.push_back({IssueKind::NonFiniteNumber, coord(t, state),
                                      "terminal reward is not finite"});
                }
                continue;
            }
            if (state.controls.empty()) {
                issues.push_back({IssueKind::EmptyActionSet, coord(t, state),
                                  "non-final state has no controls"});
                continue;
            }
            const std::size_t next_count = model.stages[t + 1].size();
            for (std::size_t c = 0; c < state.controls.size(); ++c) {
                const auto& control = state.controls[c];
                const std::string where = coord(t, state) + ", control " + std::to_string(c + 1);
                if (!std::isfinite(control.reward)) {
                    issues.push_back({IssueKind::NonFiniteNumber, where, "reward is not finite"});
                }
                if (control.dist.size() != next_count) {
                    issues.push_back({IssueKind::ShapeMismatch, where,
                                      "distribution has " + std::to_string(control.dist.size()) +
                                          " entries for " + std::to_string(next_count) +
                                          " next-stage states"});
                    continue;
                }
                double sum = 0.0;
                for (std::size_t j = 0; j < control.dist.size(); ++j) {
                    if (control.dist[j] < 0.0) {
                        issues.push_back({IssueKind::NegativeProbability, where,
                                          "dist[" + std::to_string(j + 1) + "] = " +
                                              std::to_string(control.dist[j])});
                    }
                    sum += control.dist[j];
                }
                const bool unit = std::abs(sum - 1.0) <= kDistTolerance;
                const bool sub = sum <= 1.0 + kDistTolerance;
                if (!(unit || (model.allow_substochastic && sub))) {
                    issues.push_back({IssueKind::RowSumError, where,
                                      "distribution sums to " + std::to_string(sum)});
                }
            }
        }
    }
    if (model.initial_distribution.size() != model.stages.front().size()) {
        issues.push_back({IssueKind::ShapeMismatch, "initial distribution",
                          "has " + std::to_string(model.initial_distribution.size()) +
                              " entries for " + std::to_string(model.stages.front().size()) +
                              " initial states"});
    } else {
        double sum = 0.0;
        for (double value : model.initial_distribution) {
            if (value < 0.0) {
                issues.push_back({IssueKind::NegativeProbability, "initial distribution",
                                  std::to_string(value)});
            }
            sum += value;
        }
        if (!(std::abs(sum - 1.0) <= kDistTolerance)) {
            issues.push_back({IssueKind::RowSumError, "initial distribution",
                              "sums to " + std::to_string(sum)});
        }
    }
    return issues;
}

StagedModel validate_staged(StagedModel raw) {
    auto issues = check_staged(raw);
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }
    return raw;
}

std::vector<std::string> substochastic_warnings(const StagedModel& model) {
    std::vector<std::string> warnings;
    if (model.stages.empty()) {
        return warnings;
    }
    for (std::size_t t = 0; t + 1 < model.stages.size(); ++t) {
        for (const auto& state : model.stages[t]) {
            for (std::size_t c = 0; c < state.controls.size(); ++c) {
                double sum = 0.0;
                for (double value : state.controls[c].dist) {
                    sum += value;
                }
                if (sum < 1.0 - kDistTolerance) {
                    warnings.push_back(coord(t, state) + ", control " + std::to_string(c + 1) +
                                       ": distribution sums to " + std::to_string(sum) +
                                       " (annotated sub-stochastic)");
                }
            }
        }
    }
    return warnings;
}

StageValues backward_induction(const StagedModel& model) {
    auto issues = check_staged(model);
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }

    const std::size_t horizon = model.stages.size();
    StageValues values;
    values.value.resize(horizon);
    values.optimal_control.resize(horizon);
    values.control_values.resize(horizon);

    const std::size_t last = horizon - 1;
    values.value[last].reserve(model.stages[last].size());
    for (const auto& state : model.stages[last]) {
        values.value[last].push_back(state.terminal_reward);
    }

    for (std::size_t t = last; t-- > 0;) {
        const auto& next_values = values.value[t + 1];
        auto& stage_values = values.value[t];
        auto& stage_optimal = values.optimal_control[t];
        auto& stage_control_values = values.control_values[t];
        for (const auto& state : model.stages[t]) {
            std::vector<double> candidates;
            candidates.reserve(state.controls.size());
            for (const auto& control : state.controls) {
                double acc = 0.0;
                for (std::size_t j = 0; j < control.dist.size(); ++j) {
                    acc += control.dist[j] * next_values[j];
                }
                candidates.push_back(control.reward + acc);
            }
            std::size_t best = 0;
            for (std::size_t c = 1; c < candidates.size(); ++c) {
                if (candidates[c] > candidates[best]) {
                    best = c;
                }
            }
            stage_values.push_back(candidates[best]);
            stage_optimal.push_back(best);
            stage_control_values.push_back(std::move(candidates));
        }
    }
    return values;
}

double evaluate_initial(const StagedModel& model, const StageValues& values) {
    if (values.value.empty() || values.value.front().size() != model.initial_distribution.size()) {
        throw std::invalid_argument("evaluate_initial: values do not match the model");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < model.initial_distribution.size(); ++i) {
        acc += model.initial_distribution[i] * values.value.front()[i];
    }
    return acc;
}

}  // namespace lifecycle
