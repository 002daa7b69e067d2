#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lifecycle/model.hpp"

namespace lifecycle {

// pi with pi*P = pi and sum(pi) = 1, computed by replacing the last balance
// equation with the normalization constraint. Throws NonUniqueStationary
// when the system is singular or produces a negative component.
std::vector<double> stationary_distribution(const std::vector<std::vector<double>>& p);

// Long-run average reward of a fixed policy via the stationary route
// (pi dot q) -- deliberately disjoint from the gain/bias solve.
double stationary_gain(const ControlledMarkovProblem& problem, const PolicyVector& policy);

struct EnumerationResult {
    PolicyVector best_policy;
    double best_gain = 0.0;
    std::size_t total_policies = 0;
    // Present when the policy space has at most 1e5 elements.
    std::optional<std::vector<std::pair<PolicyVector, double>>> per_policy;
    // Policies whose stationary system was singular; reported, not dropped.
    std::vector<PolicyVector> skipped;

    std::size_t policies_evaluated() const { return total_policies - skipped.size(); }
};

// Brute-force ground truth: evaluates every policy's gain via the
// stationary distribution. Guards against more than 1e7 policies.
EnumerationResult exhaustive_gain_max(const ControlledMarkovProblem& problem);

struct SimulationReport {
    std::uint64_t seed = 0;
    std::size_t steps = 0;
    std::size_t start_state = 0;
    double total_reward = 0.0;
    double empirical_gain = 0.0;  // total_reward / steps
    std::vector<double> state_visit_frequencies;
};

// Seeded chain simulation. Destinations are sampled by inverse CDF over the
// chosen action's row, walking left to right with strict-less-than
// boundaries; u is drawn as the top 53 bits of std::mt19937_64 scaled to
// [0,1). Identical inputs give bit-identical reports.
SimulationReport simulate(const ControlledMarkovProblem& problem,
                          const PolicyVector& policy,
                          std::size_t start_state,
                          std::size_t steps,
                          std::uint64_t seed);

}  // namespace lifecycle
