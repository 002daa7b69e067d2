#pragma once

#include <cstddef>
#include <vector>

#include "lifecycle/linalg.hpp"
#include "lifecycle/model.hpp"

namespace lifecycle {

// Two test values within this distance count as tied during improvement.
inline constexpr double kImprovementTolerance = 1e-9;

// Test quantities T_i^k = q_i^k + sum_j p_ij^k v_j for every state/action
// pair, plus the action selected per state.
struct ImprovementTable {
    std::vector<std::vector<double>> test_values;  // [state][action]
    PolicyVector chosen;
};

struct IterationStep {
    PolicyVector policy;
    GainBiasSolution solution;
    ImprovementTable improvement;
};

struct IterationTrace {
    std::vector<IterationStep> steps;
    PolicyVector final_policy;
};

// Assembles the value-determination system for a fixed policy's transition
// matrix and expected rewards: g + v_i = q_i + sum_j p_ij v_j with
// v[reference_state] = 0. Unknown order is (g, v_free...) by state index.
DenseSystem value_determination_system(const std::vector<std::vector<double>>& p,
                                       const std::vector<double>& q,
                                       std::size_t reference_state);

// Solves the assembled system; SingularMatrix surfaces as MultichainSuspected.
GainBiasSolution solve_gain_bias(const std::vector<std::vector<double>>& p,
                                 const std::vector<double>& q,
                                 std::size_t reference_state);

GainBiasSolution value_determination(const ControlledMarkovProblem& problem,
                                     const PolicyVector& policy,
                                     std::size_t reference_state);

// chosen[i] keeps the incumbent action when its test value lies within
// kImprovementTolerance of the row maximum, otherwise the smallest
// maximizing action.
ImprovementTable improve_policy(const ControlledMarkovProblem& problem,
                                const std::vector<double>& v,
                                const PolicyVector& incumbent);

// Alternates value determination and policy improvement until the chosen
// policy repeats. Throws MaxIterationsExceeded if the loop does not settle.
IterationTrace policy_iteration(const ControlledMarkovProblem& problem,
                                const PolicyVector& initial_policy,
                                std::size_t reference_state,
                                std::size_t max_iterations = 1000);

// All-first-actions start with the last state as reference.
IterationTrace policy_iteration(const ControlledMarkovProblem& problem);

}  // namespace lifecycle
