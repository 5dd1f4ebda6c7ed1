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
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "semirel/errors.hpp"
#include "semirel/gaussian_bound.hpp"
#include "semirel/quadrature.hpp"

using namespace semirel;

TEST_SUITE("gaussian_bound")
{
    TEST_CASE("density and its moments")
    {
        CHECK(rho(0.0) == 0.0);
        CHECK_THROWS_AS(rho(-1e-3), DomainError);
        const auto rule = composite_gauss_legendre(0.0, gaussian_cutoff, 24);
        CHECK(std::abs(rule.integrate(rho) - 1.0) < 1e-12);
        CHECK(rule.integrate([](double t) { return t * rho(t); }) ==
              doctest::Approx(2.0 / std::sqrt(std::numbers::pi)).epsilon(1e-13));
        CHECK(rule.integrate([](double t) { return t * t * rho(t); }) == doctest::Approx(1.5).epsilon(1e-13));
        CHECK(oracle::rho_cdf(gaussian_cutoff) == doctest::Approx(1.0).epsilon(1e-15));
    }

    TEST_CASE("derivative identities J3 = -J1' and J4 = -J2'")
    {
        for (int i = 0; i < 10; ++i) {
            const double s = 0.2 * std::pow(25.0, i / 9.0);
            const double h = 1e-4 * s;
            const auto j = j_integrals(1.0, 1.0, 0.2, s);
            const auto up = j_integrals(1.0, 1.0, 0.2, s + h);
            const auto dn = j_integrals(1.0, 1.0, 0.2, s - h);
            CHECK(-(up.J1 - dn.J1) / (2.0 * h) == doctest::Approx(j.J3).epsilon(1e-6));
            CHECK(-(up.J2 - dn.J2) / (2.0 * h) == doctest::Approx(j.J4).epsilon(1e-6));
            CHECK(j.J2 > 0.0);
            CHECK(j.J2 < 1.0);
            CHECK(j.J3 > 0.0);
            CHECK(j.J4 > 0.0);
        }
    }

    TEST_CASE("limits of J1")
    {
        for (double s : {0.3, 1.0, 4.0}) {
            CHECK(std::abs(j_integrals(1e-12, 1.0, 0.2, s).J1 - 2.0 / (std::sqrt(std::numbers::pi) * s)) < 1e-8);
        }
        // m s = 100: J1 = m + 3 / (4 m s^2) - 15 / (32 m^3 s^4) + ...
        const auto j = j_integrals(1.0, 1.0, 0.2, 100.0);
        CHECK(std::abs(j.J1 - (1.0 + 3.0 / 4e4)) < 1e-8);
        CHECK(std::abs(j.J1 - (1.0 + 3.0 / 4e4 - 15.0 / 32e8)) < 1e-11);
    }

    TEST_CASE("wide and sharp wells")
    {
        const auto wide = j_integrals(1.0, 100.0, 0.2, 1.0);
        CHECK(wide.J2 == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(wide.J4 < 1e-14);
        // b -> 0: J2 tends to the density mass inside r < a.
        for (double s : {0.5, 1.0, 2.0}) {
            const auto sharp = j_integrals(1.0, 1.0, 1e-4, s);
            CHECK(sharp.J2 == doctest::Approx(oracle::rho_cdf(1.0 / s)).epsilon(1e-6));
        }
    }

    TEST_CASE("eg_at is linear in v and bounded by m at v = 0")
    {
        for (double s : {0.1, 0.8, 3.0}) {
            const double j1 = j_integrals(1.0, 1.0, 0.2, s).J1;
            CHECK(eg_at(1.0, 1.0, 0.2, 0.0, s) >= 1.0);
            CHECK(eg_at(1.0, 1.0, 0.2, 3.0, s) == doctest::Approx(2.0 * eg_at(1.0, 1.0, 0.2, 1.5, s) - j1));
        }
        CHECK_THROWS_AS(eg_at(1.0, 1.0, 0.2, 1.0, 0.0), DomainError);
        CHECK_THROWS_AS(eg_at(1.0, 1.0, -0.2, 1.0, 1.0), DomainError);
    }

    TEST_CASE("parametric curve: stationarity, storage invariants and branch shape")
    {
        const auto grid = default_s_grid();
        REQUIRE(grid.size() == 200);
        CHECK(grid.front() == 0.05);
        CHECK(grid.back() == 10.0);
        const auto curve = optimal_curve(1.0, 1.0, 0.2, grid);
        std::size_t turn = 0;
        while (turn + 1 < curve.size() && curve[turn + 1].v < curve[turn].v) {
            ++turn;
        }
        CHECK(turn > 50);
        CHECK(turn + 1 < curve.size());
        for (std::size_t i = 0; i < curve.size(); i += 13) {
            const auto& p = curve[i];
            CHECK(p.E_g == p.J1 - p.v * p.J2);
            CHECK(p.v == p.J3 / p.J4);
            const double h = 1e-4 * p.s;
            const double slope = (eg_at(1.0, 1.0, 0.2, p.v, p.s + h) - eg_at(1.0, 1.0, 0.2, p.v, p.s - h)) / (2.0 * h);
            CHECK(std::abs(slope) < 1e-6 * (1.0 + std::abs(p.J3)));
        }
        // The upper branch covers the bounds sweep couplings above the turning point.
        CHECK(curve[turn].v < 1.25);
        CHECK(curve.front().v > 3.5);
        const std::vector<double> unsorted{1.0, 0.5};
        CHECK_THROWS_AS(optimal_curve(1.0, 1.0, 0.2, unsorted), DomainError);
    }

    TEST_CASE("scale optimization agrees with the parametric route")
    {
        const auto curve = optimal_curve(1.0, 1.0, 0.2, default_s_grid());
        for (std::size_t i : {10u, 40u, 80u}) {
            CHECK(std::abs(eg_optimized(1.0, 1.0, 0.2, curve[i].v) - curve[i].E_g) < 1e-8);
            CHECK(eg_optimal_scale(1.0, 1.0, 0.2, curve[i].v) == doctest::Approx(curve[i].s).epsilon(1e-6));
        }
        const double e1 = eg_optimized(1.0, 1.0, 0.2, 2.0);
        const double e2 = eg_optimized(1.0, 1.0, 0.2, 2.5);
        CHECK(e2 < e1);
    }

    TEST_CASE("couplings outside the parametric span")
    {
        const auto curve = optimal_curve(1.0, 1.0, 0.2, default_s_grid());
        CHECK_THROWS_AS(eg_optimized(1.0, 1.0, 0.2, curve.front().v), CouplingOutOfRange);
        CHECK_THROWS_AS(eg_optimized(1.0, 1.0, 0.2, 1e5), CouplingOutOfRange);
        CHECK_THROWS_AS(eg_optimized(1.0, 1.0, 0.2, 1.0), CouplingOutOfRange);
    }

    TEST_CASE("curve export")
    {
        const std::vector<double> s{0.5, 1.0};
        const auto curve = optimal_curve(1.0, 1.0, 0.2, s);
        std::ostringstream out;
        write_curve_csv(out, curve);
        CHECK(out.str().rfind("s,v,E_g,J1,J2,J3,J4\n0.5,", 0) == 0);
    }
}
