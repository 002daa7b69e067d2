#include "lifecycle/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace lifecycle {

std::vector<double> solve_dense(DenseSystem system) {
    auto& a = system.a;
    auto& b = system.b;
    const std::size_t n = a.size();
    if (b.size() != n) {
        throw std::invalid_argument("solve_dense: rhs length does not match matrix");
    }
    for (const auto& row : a) {
        if (row.size() != n) {
            throw std::invalid_argument("solve_dense: matrix is not square");
        }
    }

    // Scale-invariant singularity threshold per column.
    std::vector<double> column_max(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            column_max[j] = std::max(column_max[j], std::abs(a[i][j]));
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a[i][k]) > std::abs(a[pivot][k])) {
                pivot = i;
            }
        }
        if (std::abs(a[pivot][k]) <= 1e-10 * column_max[k]) {
            throw SingularMatrix("solve_dense: pivot below threshold in column " +
                                 std::to_string(k + 1));
        }
        if (pivot != k) {
            std::swap(a[k], a[pivot]);
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0.0) {
                continue;
            }
            const double factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) {
                a[i][j] -= factor * a[k][j];
            }
            b[i] -= factor * b[k];
        }
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double sum = b[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            sum -= a[i][j] * x[j];
        }
        x[i] = sum / a[i][i];
    }
    return x;
}

}  // namespace lifecycle
