#include "lifecycle/validation.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "lifecycle/linalg.hpp"

namespace lifecycle {

std::vector<double> stationary_distribution(const std::vector<std::vector<double>>& p) {
    const std::size_t n = p.size();
    if (n == 0) {
        throw std::invalid_argument("stationary_distribution: empty matrix");
    }
    for (const auto& row : p) {
        if (row.size() != n) {
            throw std::invalid_argument("stationary_distribution: matrix is not square");
        }
    }

    // Balance equations (P^T - I) pi = 0 with the last one replaced by the
    // normalization sum(pi) = 1.
    DenseSystem system;
    system.a.assign(n, std::vector<double>(n, 0.0));
    system.b.assign(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            system.a[j][i] = p[i][j] - (i == j ? 1.0 : 0.0);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        system.a[n - 1][i] = 1.0;
    }
    system.b[n - 1] = 1.0;

    std::vector<double> pi;
    try {
        pi = solve_dense(std::move(system));
    } catch (const SingularMatrix&) {
        throw NonUniqueStationary(
            "stationary distribution is not unique (multiple recurrent classes)");
    }
    for (double& value : pi) {
        if (value < -1e-9) {
            throw NonUniqueStationary("stationary solve produced a negative component");
        }
        if (value < 0.0) {
            value = 0.0;
        }
    }
    return pi;
}

double stationary_gain(const ControlledMarkovProblem& problem, const PolicyVector& policy) {
    const auto matrices = policy_matrices(problem, policy);
    const auto pi = stationary_distribution(matrices.p);
    double gain = 0.0;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        gain += pi[i] * matrices.q[i];
    }
    return gain;
}

EnumerationResult exhaustive_gain_max(const ControlledMarkovProblem& problem) {
    auto issues = check_problem(problem);
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }

    const std::size_t n = problem.num_states();
    constexpr std::size_t kMaxPolicies = 10'000'000;
    constexpr std::size_t kPerPolicyLimit = 100'000;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t count = problem.actions[i].size();
        if (total > kMaxPolicies / count) {
            throw TooManyPolicies("policy space exceeds " + std::to_string(kMaxPolicies));
        }
        total *= count;
    }

    EnumerationResult result;
    result.total_policies = total;
    if (total <= kPerPolicyLimit) {
        result.per_policy.emplace();
        result.per_policy->reserve(total);
    }

    // Lexicographic odometer; strict improvement keeps the smallest policy
    // on exact gain ties.
    PolicyVector policy(n, 0);
    bool have_best = false;
    while (true) {
        try {
            const double gain = stationary_gain(problem, policy);
            if (result.per_policy) {
                result.per_policy->emplace_back(policy, gain);
            }
            if (!have_best || gain > result.best_gain) {
                have_best = true;
                result.best_gain = gain;
                result.best_policy = policy;
            }
        } catch (const NonUniqueStationary&) {
            result.skipped.push_back(policy);
        }

        std::size_t pos = n;
        while (pos-- > 0) {
            if (++policy[pos] < problem.actions[pos].size()) {
                break;
            }
            policy[pos] = 0;
            if (pos == 0) {
                if (!have_best) {
                    throw NonUniqueStationary("every policy was flagged multichain");
                }
                return result;
            }
        }
    }
}

SimulationReport simulate(const ControlledMarkovProblem& problem,
                          const PolicyVector& policy,
                          std::size_t start_state,
                          std::size_t steps,
                          std::uint64_t seed) {
    require_policy(problem, policy);
    const std::size_t n = problem.num_states();
    if (start_state >= n) {
        throw std::out_of_range("start state out of range");
    }
    if (steps < 1) {
        throw std::invalid_argument("simulate: steps must be at least 1");
    }

    std::mt19937_64 rng(seed);
    const auto draw = [&rng]() {
        // Top 53 bits scaled to [0,1); fully deterministic across platforms.
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    std::vector<std::size_t> counts(n, 0);
    double total = 0.0;
    std::size_t state = start_state;
    for (std::size_t step = 0; step < steps; ++step) {
        ++counts[state];
        const auto& act = problem.actions[state][policy[state]];
        const double u = draw();
        double cum = 0.0;
        std::size_t next = state;
        bool found = false;
        std::size_t last_positive = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (act.p[j] > 0.0) {
                last_positive = j;
            }
            cum += act.p[j];
            if (u < cum) {
                next = j;
                found = true;
                break;
            }
        }
        if (!found) {
            // Rounding pushed the cumulative sum below u; take the last
            // reachable destination.
            for (std::size_t j = 0; j < n; ++j) {
                if (act.p[j] > 0.0) {
                    last_positive = j;
                }
            }
            next = last_positive;
        }
        total += act.r[next];
        state = next;
    }

    SimulationReport report;
    report.seed = seed;
    report.steps = steps;
    report.start_state = start_state;
    report.total_reward = total;
    report.empirical_gain = total / static_cast<double>(steps);
    report.state_visit_frequencies.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        report.state_visit_frequencies.push_back(static_cast<double>(counts[i]) /
                                                 static_cast<double>(steps));
    }
    return report;
}

}  // namespace lifecycle
