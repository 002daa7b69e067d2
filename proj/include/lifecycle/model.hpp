#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lifecycle/errors.hpp"

namespace lifecycle {

// Transition rows must sum to one within this tolerance; exact decimal
// tables pass verbatim.
inline constexpr double kRowSumTolerance = 1e-9;

// One alternative available in one state: a transition row p over all
// destination states and the signed capitalization change r per destination.
struct ActionSpec {
    std::string label;
    std::vector<double> p;
    std::vector<double> r;

    bool operator==(const ActionSpec&) const = default;
};

// Finite-state control problem: every state offers at least one action,
// each action carrying its own transition and reward rows.
struct ControlledMarkovProblem {
    std::vector<std::string> state_labels;
    std::vector<std::vector<ActionSpec>> actions;  // [state][action]

    std::size_t num_states() const { return state_labels.size(); }
    std::size_t num_actions(std::size_t state) const;
    const ActionSpec& action(std::size_t state, std::size_t k) const;

    bool operator==(const ControlledMarkovProblem&) const = default;
};

// One chosen action index per state. 0-based in memory; all external
// formats are 1-based.
using PolicyVector = std::vector<std::size_t>;

// Gain g plus relative values v with v[reference_state] pinned to zero.
struct GainBiasSolution {
    double gain = 0.0;
    std::vector<double> v;
    std::size_t reference_state = 0;
};

// Returns every invariant violation; empty means valid.
std::vector<Issue> check_problem(const ControlledMarkovProblem& problem);

// Passes the problem through iff it is valid, otherwise throws
// ValidationError listing all violations with state/action coordinates.
ControlledMarkovProblem validate_problem(ControlledMarkovProblem raw);

// Throws std::out_of_range unless policy has one in-range choice per state.
void require_policy(const ControlledMarkovProblem& problem, const PolicyVector& policy);

// q_i^k: dot product of the action's transition and reward rows.
double expected_immediate_reward(const ControlledMarkovProblem& problem,
                                 std::size_t state, std::size_t k);

struct PolicyMatrices {
    std::vector<std::vector<double>> p;  // row i = chosen action's transition row
    std::vector<double> q;               // q[i] = expected immediate reward
};

// Restriction of the problem to one policy: transition matrix P and
// expected-reward vector q. Rows are copied verbatim from the actions.
PolicyMatrices policy_matrices(const ControlledMarkovProblem& problem,
                               const PolicyVector& policy);

}  // namespace lifecycle
