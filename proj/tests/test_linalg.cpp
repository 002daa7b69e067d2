#include <doctest.h>

#include <cmath>
#include <random>

#include "lifecycle/howard.hpp"
#include "lifecycle/linalg.hpp"

#include "helpers.hpp"

using namespace lifecycle;

namespace {

double residual_norm(const DenseSystem& system, const std::vector<double>& x) {
    double worst = 0.0;
    for (std::size_t i = 0; i < system.a.size(); ++i) {
        double acc = -system.b[i];
        for (std::size_t j = 0; j < x.size(); ++j) {
            acc += system.a[i][j] * x[j];
        }
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

}  // namespace

TEST_CASE("identity system returns the rhs") {
    DenseSystem system;
    system.a = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    system.b = {3.5, -2.0, 7.0};
    CHECK(solve_dense(system) == std::vector<double>{3.5, -2.0, 7.0});
}

TEST_CASE("diagonal system") {
    DenseSystem system;
    system.a = {{2, 0}, {0, 4}};
    system.b = {2, 8};
    CHECK(solve_dense(system) == std::vector<double>{1.0, 2.0});
}

TEST_CASE("first-iteration value-determination system matches the printed solution") {
    // P of the all-first-actions policy with v_5 pinned to zero.
    const std::vector<std::vector<double>> p = {
        {0.1, 0.2, 0.4, 0.1, 0.2},
        {0.1, 0.2, 0.2, 0.2, 0.3},
        {0.3, 0.0, 0.4, 0.2, 0.1},
        {0.2, 0.2, 0.1, 0.1, 0.4},
        {0.1, 0.3, 0.1, 0.4, 0.1},
    };
    const std::vector<double> q = {-142, 271, 91, 299, 209};
    const auto x = solve_dense(value_determination_system(p, q, 4));
    REQUIRE(x.size() == 5);
    CHECK(std::abs(x[0] - 150.78) <= 0.01);
    CHECK(std::abs(x[1] - (-458.25)) <= 0.01);
    CHECK(std::abs(x[2] - 21.58) <= 0.01);
    CHECK(std::abs(x[3] - (-317.98)) <= 0.01);
    CHECK(std::abs(x[4] - 32.32) <= 0.01);
}

TEST_CASE("residuals stay small on random well-conditioned systems") {
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 1 + rng() % 10;
        DenseSystem system;
        system.a.assign(n, std::vector<double>(n, 0.0));
        system.b.assign(n, 0.0);
        double b_norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                system.a[i][j] = 2.0 * testutil::uniform01(rng) - 1.0;
            }
            system.a[i][i] += static_cast<double>(n);  // diagonally dominant
            system.b[i] = 20.0 * testutil::uniform01(rng) - 10.0;
            b_norm = std::max(b_norm, std::abs(system.b[i]));
        }
        const auto x = solve_dense(system);
        CHECK(residual_norm(system, x) <= 1e-8 * (1.0 + b_norm));
    }
}

TEST_CASE("permuting equations leaves the solution unchanged") {
    std::mt19937_64 rng(99);
    DenseSystem system;
    const std::size_t n = 5;
    system.a.assign(n, std::vector<double>(n, 0.0));
    system.b.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            system.a[i][j] = 2.0 * testutil::uniform01(rng) - 1.0;
        }
        system.a[i][i] += 4.0;
        system.b[i] = 10.0 * testutil::uniform01(rng);
    }
    const auto x = solve_dense(system);

    DenseSystem shuffled = system;
    const std::vector<std::size_t> order = {3, 0, 4, 1, 2};
    for (std::size_t i = 0; i < n; ++i) {
        shuffled.a[i] = system.a[order[i]];
        shuffled.b[i] = system.b[order[i]];
    }
    const auto y = solve_dense(shuffled);
    for (std::size_t j = 0; j < n; ++j) {
        CHECK(std::abs(x[j] - y[j]) <= 1e-9);
    }
}

TEST_CASE("duplicate rows raise SingularMatrix") {
    DenseSystem system;
    system.a = {{1, 2, 3}, {1, 2, 3}, {0, 1, 4}};
    system.b = {1, 1, 2};
    CHECK_THROWS_AS(solve_dense(system), SingularMatrix);
}

TEST_CASE("all-zero column raises SingularMatrix") {
    DenseSystem system;
    system.a = {{1, 0}, {2, 0}};
    system.b = {1, 2};
    CHECK_THROWS_AS(solve_dense(system), SingularMatrix);
}

TEST_CASE("non-square input is rejected") {
    DenseSystem system;
    system.a = {{1, 2}, {3, 4}};
    system.b = {1, 2, 3};
    CHECK_THROWS_AS(solve_dense(system), std::invalid_argument);
    system.a = {{1, 2, 3}, {4, 5, 6}};
    system.b = {1, 2};
    CHECK_THROWS_AS(solve_dense(system), std::invalid_argument);
}
