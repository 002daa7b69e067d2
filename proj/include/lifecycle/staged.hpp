#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lifecycle/errors.hpp"

namespace lifecycle {

// One control available in one state: immediate reward plus a distribution
// over the next stage's states (dense, aligned with that stage's order).
struct StagedControl {
    std::string label;
    double reward = 0.0;
    std::vector<double> dist;

    bool operator==(const StagedControl&) const = default;
};

struct StagedState {
    std::string label;
    std::vector<StagedControl> controls;  // empty exactly in the final stage
    double terminal_reward = 0.0;         // final stage only

    bool operator==(const StagedState&) const = default;
};

// Finite-horizon model: per-stage state sets, controls owned by their state
// (so control sets never overlap), terminal rewards and an initial
// distribution over stage-0 states. allow_substochastic admits annotated
// data whose control distributions sum to less than one.
struct StagedModel {
    std::vector<std::vector<StagedState>> stages;
    std::vector<double> initial_distribution;
    bool allow_substochastic = false;

    std::size_t num_stages() const { return stages.size(); }

    bool operator==(const StagedModel&) const = default;
};

std::vector<Issue> check_staged(const StagedModel& model);
StagedModel validate_staged(StagedModel raw);

// One line per control whose distribution falls short of one; only
// possible on models loaded with allow_substochastic.
std::vector<std::string> substochastic_warnings(const StagedModel& model);

// Values and chosen controls for every stage; control_values keeps the
// per-control evaluations behind each maximum.
struct StageValues {
    std::vector<std::vector<double>> value;                        // [stage][state]
    std::vector<std::vector<std::size_t>> optimal_control;         // [stage][state]
    std::vector<std::vector<std::vector<double>>> control_values;  // [stage][state][control]
};

// v(x) = terminal reward on the last stage, elsewhere the maximum over
// controls of reward + expected next-stage value; ties break toward the
// earliest-listed control.
StageValues backward_induction(const StagedModel& model);

// Expected optimal value under the initial distribution.
double evaluate_initial(const StagedModel& model, const StageValues& values);

}  // namespace lifecycle
