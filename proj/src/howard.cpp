#include "lifecycle/howard.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lifecycle {

DenseSystem value_determination_system(const std::vector<std::vector<double>>& p,
                                       const std::vector<double>& q,
                                       std::size_t reference_state) {
    const std::size_t n = p.size();
    if (q.size() != n) {
        throw std::invalid_argument("value determination: q length does not match P");
    }
    if (reference_state >= n) {
        throw std::out_of_range("reference state out of range");
    }

    // g + v_i - sum_{j != ref} p_ij v_j = q_i, with the v_ref column dropped.
    DenseSystem system;
    system.a.assign(n, std::vector<double>(n, 0.0));
    system.b.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i].size() != n) {
            throw std::invalid_argument("value determination: P is not square");
        }
        system.a[i][0] = 1.0;
        std::size_t col = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == reference_state) {
                continue;
            }
            system.a[i][col] = (i == j ? 1.0 : 0.0) - p[i][j];
            ++col;
        }
        system.b[i] = q[i];
    }
    return system;
}

GainBiasSolution solve_gain_bias(const std::vector<std::vector<double>>& p,
                                 const std::vector<double>& q,
                                 std::size_t reference_state) {
    const std::size_t n = p.size();
    std::vector<double> x;
    try {
        x = solve_dense(value_determination_system(p, q, reference_state));
    } catch (const SingularMatrix&) {
        throw MultichainSuspected(
            "value determination system is singular; the policy's chain appears to have "
            "more than one recurrent class");
    }

    GainBiasSolution solution;
    solution.gain = x[0];
    solution.reference_state = reference_state;
    solution.v.assign(n, 0.0);
    std::size_t col = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == reference_state) {
            continue;
        }
        solution.v[j] = x[col];
        ++col;
    }
    return solution;
}

GainBiasSolution value_determination(const ControlledMarkovProblem& problem,
                                     const PolicyVector& policy,
                                     std::size_t reference_state) {
    const auto matrices = policy_matrices(problem, policy);
    return solve_gain_bias(matrices.p, matrices.q, reference_state);
}

ImprovementTable improve_policy(const ControlledMarkovProblem& problem,
                                const std::vector<double>& v,
                                const PolicyVector& incumbent) {
    const std::size_t n = problem.num_states();
    if (v.size() != n) {
        throw std::invalid_argument("improve_policy: v length does not match problem");
    }
    require_policy(problem, incumbent);

    ImprovementTable table;
    table.test_values.resize(n);
    table.chosen.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& list = problem.actions[i];
        auto& row = table.test_values[i];
        row.reserve(list.size());
        for (std::size_t k = 0; k < list.size(); ++k) {
            double acc = expected_immediate_reward(problem, i, k);
            for (std::size_t j = 0; j < n; ++j) {
                acc += list[k].p[j] * v[j];
            }
            row.push_back(acc);
        }
        double best = row[0];
        for (double value : row) {
            best = std::max(best, value);
        }
        // Keep the incumbent on ties so the iteration cannot cycle.
        if (row[incumbent[i]] >= best - kImprovementTolerance) {
            table.chosen[i] = incumbent[i];
        } else {
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (row[k] >= best - kImprovementTolerance) {
                    table.chosen[i] = k;
                    break;
                }
            }
        }
    }
    return table;
}

IterationTrace policy_iteration(const ControlledMarkovProblem& problem,
                                const PolicyVector& initial_policy,
                                std::size_t reference_state,
                                std::size_t max_iterations) {
    if (max_iterations < 1) {
        throw std::invalid_argument("policy_iteration: max_iterations must be at least 1");
    }
    require_policy(problem, initial_policy);
    if (reference_state >= problem.num_states()) {
        throw std::out_of_range("reference state out of range");
    }

    IterationTrace trace;
    PolicyVector current = initial_policy;
    for (std::size_t iteration = 0; iteration < max_iterations; ++iteration) {
        auto solution = value_determination(problem, current, reference_state);
        auto improvement = improve_policy(problem, solution.v, current);
        const PolicyVector next = improvement.chosen;
        trace.steps.push_back({current, std::move(solution), std::move(improvement)});
        if (next == current) {
            trace.final_policy = current;
            return trace;
        }
        current = next;
    }
    throw MaxIterationsExceeded("policy iteration did not converge within " +
                                std::to_string(max_iterations) + " iterations");
}

IterationTrace policy_iteration(const ControlledMarkovProblem& problem) {
    PolicyVector initial(problem.num_states(), 0);
    return policy_iteration(problem, initial, problem.num_states() - 1);
}

}  // namespace lifecycle
