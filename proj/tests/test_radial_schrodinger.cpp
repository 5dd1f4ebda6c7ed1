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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "semirel/errors.hpp"
#include "semirel/radial_schrodinger.hpp"

using namespace semirel;

namespace {

RadialFunction exponential_well(double v)
{
    return [v](double r) { return -v * std::exp(-r); };
}

GridConfig box(double r_max, std::size_t n, int levels)
{
    GridConfig g;
    g.r_max = r_max;
    g.n_points = n;
    g.refinement_levels = levels;
    return g;
}

}  // namespace

TEST_SUITE("radial_schrodinger")
{
    TEST_CASE("oracle values are frozen")
    {
        CHECK(oracle::exponential_ground(2.5) == doctest::Approx(-0.066203098030747).epsilon(1e-12));
        CHECK(oracle::exponential_ground(4.5) == doctest::Approx(-0.428038257713163).epsilon(1e-12));
    }

    TEST_CASE("exponential well against the Bessel-zero oracle")
    {
        for (double v : {2.5, 4.5}) {
            const auto res = lowest_eigenvalue(exponential_well(v), box(60.0, 4096, 3));
            const double exact = oracle::exponential_ground(v);
            CHECK(std::abs(res.eigenvalue - exact) <= 1e-8 * std::abs(exact));
            CHECK(res.error_estimate < 1e-9);
            CHECK(res.converged);
        }
    }

    TEST_CASE("unextrapolated levels rise monotonically towards the limit")
    {
        const auto res = lowest_eigenvalue(exponential_well(4.5), box(40.0, 512, 4));
        REQUIRE(res.levels.size() == 4);
        for (std::size_t k = 1; k < res.levels.size(); ++k) {
            CHECK(res.levels[k].eigenvalue > res.levels[k - 1].eigenvalue);
            CHECK(res.levels[k].spacing == doctest::Approx(0.5 * res.levels[k - 1].spacing));
        }
        CHECK(res.levels.back().eigenvalue < res.eigenvalue);
        const double exact = oracle::exponential_ground(4.5);
        CHECK(std::abs(res.eigenvalue - exact) < std::abs(res.levels.back().eigenvalue - exact));
        CHECK(res.exponents == std::vector<double>{2.0, 4.0, 6.0});
    }

    TEST_CASE("eigenfunction normalization, sign and Rayleigh quotient")
    {
        const auto W = exponential_well(2.5);
        GridConfig g = box(60.0, 1024, 2);
        g.tolerance = 1e-6;
        const auto res = lowest_eigenvalue(W, g);
        const auto& fine = res.finest();
        double norm = 0.0;
        for (double u : fine.eigenfunction) {
            norm += u * u;
            CHECK(u >= -1e-12);
        }
        CHECK(fine.spacing * norm == doctest::Approx(1.0).epsilon(1e-12));
        // The discrete quotient of the discrete eigenvector is that level's eigenvalue.
        CHECK(rayleigh_quotient(res, W) == doctest::Approx(fine.eigenvalue).epsilon(1e-10));
        CHECK(expectation(res, [](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-12));
    }

    TEST_CASE("virial-type identity: <W> from the extrapolated expectation")
    {
        // Hellmann-Feynman in the coupling: d lambda / d v = <-e^{-r}>.
        const double v = 4.5;
        const double h = 1e-4;
        const auto g = box(50.0, 2048, 3);
        const auto res = lowest_eigenvalue(exponential_well(v), g);
        const double mean = extrapolated_expectation(res, [](double r) { return -std::exp(-r); });
        const double fd = (oracle::exponential_ground(v + h) - oracle::exponential_ground(v - h)) / (2.0 * h);
        CHECK(mean == doctest::Approx(fd).epsilon(1e-7));
    }

    TEST_CASE("Kratzer potential with the singular exponent sequence")
    {
        // -2e v / r - v^2 / r^2 at e = 1, v = 0.4: eigenvalue -(v / gamma)^2 = -0.25.
        const double v = 0.4;
        const double gamma = oracle::kratzer_gamma(v);
        const RadialFunction W = [v](double r) { return -2.0 * v / r - v * v / (r * r); };
        GridConfig g = box(60.0, 4096, 6);
        g.singular_exponent = 2.0 * gamma - 1.0;
        g.tolerance = 1e-6;
        const auto res = lowest_eigenvalue(W, g);
        CHECK(res.eigenvalue == doctest::Approx(-(v / gamma) * (v / gamma)).epsilon(1e-6));
        const auto exps = extrapolation_exponents(g);
        REQUIRE(exps.size() == 5);
        CHECK(exps[0] == doctest::Approx(0.6));
        CHECK(exps[1] == doctest::Approx(1.2));
    }

    TEST_CASE("richardson tableau removes the listed powers exactly")
    {
        // T(h) = 1 + 3 h^2 - 2 h^4 at h = 1, 1/2, 1/4.
        std::vector<double> values;
        for (double h : {1.0, 0.5, 0.25}) {
            values.push_back(1.0 + 3.0 * h * h - 2.0 * std::pow(h, 4));
        }
        const std::vector<double> exps{2.0, 4.0};
        const auto row = richardson_row(values, exps);
        REQUIRE(row.size() == 3);
        CHECK(row.back() == doctest::Approx(1.0).epsilon(1e-14));
    }

    TEST_CASE("errors")
    {
        CHECK_THROWS_AS(lowest_eigenvalue([](double) { return 1.0; }, box(10.0, 128, 2)), NoBoundState);
        CHECK_THROWS_AS(lowest_eigenvalue(exponential_well(1.0), box(10.0, 32, 2)), std::invalid_argument);
        CHECK_THROWS_AS(lowest_eigenvalue(exponential_well(1.0), box(0.0, 128, 2)), std::invalid_argument);
        CHECK_THROWS_AS(lowest_eigenvalue(exponential_well(1.0), box(10.0, 128, 9)), std::invalid_argument);
        // A barely bound state in a box too small for it binds on no level.
        CHECK_THROWS_AS(lowest_eigenvalue(exponential_well(1.5), box(3.0, 128, 2)), NoBoundState);
        const std::vector<double> wrong(10, -1.0);
        CHECK_THROWS_AS(lowest_eigenvalue(wrong, box(10.0, 128, 2)), std::invalid_argument);
    }

    TEST_CASE("zero-energy probe decides binding on the half line")
    {
        // Threshold of -v e^{-r}: J_0(2 sqrt(v)) = 0, v = 1.4458.
        CHECK(zero_energy_probe(exponential_well(1.40), 60.0, 0.005).bound() == false);
        CHECK(zero_energy_probe(exponential_well(1.50), 60.0, 0.005).bound() == true);
        const auto deep = zero_energy_probe(exponential_well(40.0), 60.0, 0.005);
        CHECK(deep.nodes >= 1);
        CHECK(deep.bound());
        CHECK_THROWS_AS(zero_energy_probe(exponential_well(1.0), 1.0, 2.0), std::invalid_argument);
    }
}
