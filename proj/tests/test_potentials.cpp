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
#include <limits>
#include <numbers>

#include "doctest.h"

#include "semirel/errors.hpp"
#include "semirel/format.hpp"
#include "semirel/potentials.hpp"

using namespace semirel;

TEST_SUITE("potentials")
{
    TEST_CASE("shapes at reference points")
    {
        CHECK(evaluate(PotentialSpec::exponential(2.0), 1.0) == doctest::Approx(-2.0 / std::numbers::e));
        CHECK(evaluate(PotentialSpec::woods_saxon(3.0, 1.0, 0.2), 1.0) == doctest::Approx(-1.5));
        CHECK(evaluate(PotentialSpec::coulomb(0.3), 2.0) == doctest::Approx(-0.15));
    }

    TEST_CASE("potentials are attractive and rise monotonically to zero")
    {
        for (const auto& spec : {PotentialSpec::exponential(4.5), PotentialSpec::woods_saxon(2.0, 1.0, 0.2),
                                 PotentialSpec::coulomb(0.4)}) {
            double prev = evaluate(spec, 0.01);
            CHECK(prev < 0.0);
            for (double r = 0.02; r < 50.0; r *= 1.1) {
                const double now = evaluate(spec, r);
                CHECK(now <= 0.0);
                CHECK(now >= prev);
                prev = now;
            }
        }
    }

    TEST_CASE("evaluation outside the domain")
    {
        CHECK_THROWS_AS(evaluate(PotentialSpec::exponential(1.0), 0.0), DomainError);
        CHECK_THROWS_AS(evaluate(PotentialSpec::exponential(1.0), -1.0), DomainError);
        CHECK_THROWS_AS(evaluate(PotentialSpec::exponential(1.0), std::nan("")), DomainError);
        CHECK_THROWS_AS(evaluate(PotentialSpec::coulomb(0.1), 1e-13), DomainError);
        CHECK_NOTHROW(evaluate(PotentialSpec::coulomb(0.1), 1e-12));
    }

    TEST_CASE("fermi factor is overflow safe")
    {
        CHECK(fermi(0.0) == 0.5);
        CHECK(fermi(800.0) >= 0.0);
        CHECK(fermi(800.0) < 1e-300);
        CHECK(fermi(-800.0) == 1.0);
        CHECK(fermi_slope(0.0) == 0.25);
        CHECK(fermi_slope(1500.0) == 0.0);
        CHECK(fermi_slope(-1500.0) == 0.0);
        for (double x : {-30.0, -3.0, -0.5, 0.7, 4.0, 25.0}) {
            const double h = 1e-5;
            const double fd = -(fermi(x + h) - fermi(x - h)) / (2.0 * h);
            CHECK(fd == doctest::Approx(fermi_slope(x)).epsilon(1e-7));
            CHECK(fermi(x) + fermi(-x) == doctest::Approx(1.0));
        }
    }

    TEST_CASE("validation per theory")
    {
        CHECK(validate(PotentialSpec::coulomb(0.49), Theory::KleinGordon));
        CHECK_FALSE(validate(PotentialSpec::coulomb(0.5), Theory::KleinGordon));
        CHECK(validate(PotentialSpec::coulomb(0.6), Theory::Salpeter));
        CHECK_FALSE(validate(PotentialSpec::coulomb(0.64), Theory::Salpeter));
        CHECK_FALSE(validate(PotentialSpec::exponential(0.0), Theory::Salpeter));
        CHECK_FALSE(validate(PotentialSpec::exponential(-1.0), Theory::KleinGordon));
        CHECK_FALSE(validate(PotentialSpec::woods_saxon(1.0, 0.0, 0.2), Theory::KleinGordon));
        CHECK_FALSE(validate(PotentialSpec::woods_saxon(1.0, 1.0, -0.2), Theory::Salpeter));
        const auto bad = validate(PotentialSpec::coulomb(0.7), Theory::Salpeter);
        CHECK_FALSE(bad.accepted);
        CHECK_FALSE(bad.reason.empty());
    }

    TEST_CASE("tail radius")
    {
        // |V| = eps exactly at ln(v / eps) for the exponential, v / eps for Coulomb.
        CHECK(tail_radius(PotentialSpec::exponential(1.0), std::exp(-10.0)) ==
              doctest::Approx(10.0).epsilon(1e-12));
        CHECK(tail_radius(PotentialSpec::coulomb(0.4), 0.01) == doctest::Approx(40.0).epsilon(1e-12));
        const auto ws = PotentialSpec::woods_saxon(2.0, 1.0, 0.2);
        const double r = tail_radius(ws, 1e-12);
        CHECK(std::abs(evaluate(ws, r)) <= 1e-12);
        CHECK(std::abs(evaluate(ws, r * (1.0 - 1e-9))) > 1e-12 * (1.0 - 1e-6));
        CHECK(tail_radius(PotentialSpec::exponential(1.0), 2.0) == 1.0);
        CHECK_THROWS_AS(tail_radius(ws, 0.0), DomainError);
    }

    TEST_CASE("names round trip")
    {
        for (auto kind : {PotentialKind::Exponential, PotentialKind::WoodsSaxon, PotentialKind::Coulomb}) {
            CHECK(parse_kind(to_string(kind)) == kind);
        }
        CHECK_THROWS_AS(parse_kind("harmonic"), ConfigError);
        CHECK(PotentialSpec::woods_saxon(1.0, 2.0, 0.3).with_coupling(4.0) ==
              PotentialSpec::woods_saxon(4.0, 2.0, 0.3));
    }

    TEST_CASE("number formatting")
    {
        CHECK(format_number(0.1) == "0.1");
        CHECK(format_number(-0.0) == "0");
        CHECK(format_number(1.0 / 3.0) == "0.333333333333");
        CHECK(format_number(std::numeric_limits<double>::quiet_NaN()).empty());
    }
}
