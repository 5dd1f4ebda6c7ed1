// Copyright 2026 The semirel Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "doctest.h"

#include "semirel/quadrature.hpp"
#include "semirel/tridiagonal.hpp"

using namespace semirel;

TEST_SUITE("quadrature")
{
    TEST_CASE("sixteen-node rule is exact for polynomials up to degree 31")
    {
        const auto rule = composite_gauss_legendre(-1.0, 1.0, 1);
        REQUIRE(rule.size() == 16);
        for (int p = 0; p <= 31; ++p) {
            const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
            CHECK(rule.integrate([p](double x) { return std::pow(x, p); }) ==
                  doctest::Approx(exact).epsilon(1e-14));
        }
        const auto sorted = std::is_sorted(rule.nodes.begin(), rule.nodes.end());
        CHECK(sorted);
        CHECK(rule.nodes.front() > -1.0);
        CHECK(rule.nodes.back() < 1.0);
    }

    TEST_CASE("composite rules on panels and breakpoints")
    {
        const auto rule = composite_gauss_legendre(0.0, std::numbers::pi, 5);
        CHECK(rule.size() == 80);
        CHECK(rule.integrate([](double x) { return std::sin(x); }) == doctest::Approx(2.0).epsilon(1e-14));
        const std::vector<double> breaks{0.0, 0.1, 1.0, 5.0};
        const auto graded = composite_gauss_legendre(breaks);
        CHECK(graded.integrate([](double x) { return std::exp(-x); }) ==
              doctest::Approx(1.0 - std::exp(-5.0)).epsilon(1e-14));
        const std::vector<double> bad{0.0, 1.0, 1.0};
        CHECK_THROWS(composite_gauss_legendre(bad));
    }
}

TEST_SUITE("tridiagonal")
{
    TEST_CASE("lowest eigenvalue and vector match a dense solver")
    {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (std::size_t n : {2u, 9u, 64u, 300u}) {
            std::vector<double> d(n);
            std::vector<double> e(n - 1);
            for (double& x : d) {
                x = dist(rng);
            }
            for (double& x : e) {
                x = dist(rng);
            }
            Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                A(i, i) = d[i];
                if (i + 1 < n) {
                    A(i, i + 1) = A(i + 1, i) = e[i];
                }
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
            const double ref = es.eigenvalues()(0);

            const SymmetricTridiagonal t(d, e);
            const double lo = t.gershgorin_lower();
            CHECK(lo <= ref);
            CHECK(t.gershgorin_upper() >= es.eigenvalues()(n - 1));
            const auto bracket = t.lowest_eigenvalue(lo, t.gershgorin_upper(), 1e-13);
            REQUIRE(bracket);
            CHECK(std::abs(bracket->midpoint() - ref) < 1e-12);
            CHECK(t.count_below(bracket->lower) == 0);
            CHECK(t.count_below(bracket->upper) >= 1);

            const auto y = t.inverse_iteration(bracket->lower - 1e-13, 3);
            double overlap = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                overlap += y[i] * es.eigenvectors()(i, 0);
            }
            CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-9);
        }
    }

    TEST_CASE("count below is the number of eigenvalues below the shift")
    {
        // Second-difference matrix: eigenvalues 2 - 2 cos(k pi / (n + 1)).
        const std::size_t n = 50;
        const SymmetricTridiagonal t(std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0));
        for (std::size_t k = 1; k <= n; ++k) {
            const double lambda = 2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1));
            CHECK(t.count_below(lambda - 1e-9) == k - 1);
            CHECK(t.count_below(lambda + 1e-9) == k);
        }
        CHECK_FALSE(t.lowest_eigenvalue(-1.0, 0.0, 1e-12));
    }
}
