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

#include "semirel/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semirel/errors.hpp"

namespace semirel {

double fermi(double x)
{
    if (x > 0.0) {
        const double t = std::exp(-x);
        return t / (1.0 + t);
    }
    return 1.0 / (1.0 + std::exp(x));
}

double fermi_slope(double x)
{
    // exp(x)/(1+exp(x))^2 == 1/(4 cosh^2(x/2)); cosh overflow yields 0.
    const double c = std::cosh(0.5 * x);
    return 0.25 / (c * c);
}

double evaluate(const PotentialSpec& spec, double r)
{
    if (!std::isfinite(r) || r <= 0.0) {
        throw DomainError("potential evaluated at r = " + std::to_string(r));
    }
    switch (spec.kind) {
        case PotentialKind::Exponential:
            return -spec.v * std::exp(-r);
        case PotentialKind::WoodsSaxon:
            return -spec.v * fermi((r - spec.a) / spec.b);
        case PotentialKind::Coulomb:
            if (r < coulomb_min_radius) {
                throw DomainError("Coulomb potential evaluated below minimum radius");
            }
            return -spec.v / r;
    }
    return 0.0;
}

ValidityReport validate(const PotentialSpec& spec, Theory theory)
{
    if (!std::isfinite(spec.v) || spec.v <= 0.0) {
        return {false, "coupling v must be positive"};
    }
    if (spec.kind == PotentialKind::WoodsSaxon) {
        if (!std::isfinite(spec.a) || spec.a <= 0.0) {
            return {false, "Woods-Saxon radius a must be positive"};
        }
        if (!std::isfinite(spec.b) || spec.b <= 0.0) {
            return {false, "Woods-Saxon thickness b must be positive"};
        }
    }
    if (spec.kind == PotentialKind::Coulomb) {
        if (theory == Theory::KleinGordon && spec.v >= coulomb_kg_limit) {
            return {false, "Coulomb Klein-Gordon problem requires v < 1/2"};
        }
        if (theory == Theory::Salpeter && spec.v >= coulomb_salpeter_limit) {
            return {false, "Coulomb semirelativistic problem requires v < 2/pi"};
        }
    }
    return {true, {}};
}

double tail_radius(const PotentialSpec& spec, double epsilon)
{
    if (!std::isfinite(epsilon) || epsilon <= 0.0) {
        throw DomainError("tail_radius requires epsilon > 0");
    }
    const double r0 = spec.kind == PotentialKind::WoodsSaxon ? std::max(spec.a, 1.0) : 1.0;
    if (epsilon >= spec.v) {
        return r0;
    }
    auto below = [&](double r) { return std::abs(evaluate(spec, r)) < epsilon; };

    double lo = 0.0;
    double hi = r0;
    bool found = false;
    for (int k = 0; k <= 60; ++k) {
        hi = std::ldexp(r0, k);
        if (below(hi)) {
            lo = k == 0 ? 0.0 : 0.5 * hi;
            found = true;
            break;
        }
    }
    if (!found) {
        return hi;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid < coulomb_min_radius || !below(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

std::string_view to_string(PotentialKind kind)
{
    switch (kind) {
        case PotentialKind::Exponential:
            return "exponential";
        case PotentialKind::WoodsSaxon:
            return "woods-saxon";
        case PotentialKind::Coulomb:
            return "coulomb";
    }
    return "unknown";
}

std::string_view to_string(Theory theory)
{
    return theory == Theory::KleinGordon ? "klein-gordon" : "salpeter";
}

PotentialKind parse_kind(std::string_view name)
{
    if (name == "exponential") {
        return PotentialKind::Exponential;
    }
    if (name == "woods-saxon") {
        return PotentialKind::WoodsSaxon;
    }
    if (name == "coulomb") {
        return PotentialKind::Coulomb;
    }
    throw ConfigError("unknown potential kind '" + std::string(name) + "'");
}

}  // namespace semirel
