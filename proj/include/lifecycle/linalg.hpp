#pragma once

#include <vector>

#include "lifecycle/errors.hpp"

namespace lifecycle {

struct DenseSystem {
    std::vector<std::vector<double>> a;  // n x n coefficients
    std::vector<double> b;               // right-hand side, length n
};

/// Solves a*x = b by Gaussian elimination with partial (row) pivoting.
/// Throws SingularMatrix when a pivot magnitude falls to 1e-10 of the
/// largest initial magnitude in its column, and std::invalid_argument on a
/// non-square system. The systems here are tiny (about 6x6), so nothing
/// fancier is warranted.
std::vector<double> solve_dense(DenseSystem system);

}  // namespace lifecycle
