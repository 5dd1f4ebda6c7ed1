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

#pragma once

#include <string>
#include <string_view>

namespace semirel {

enum class PotentialKind
{
    Exponential,  ///< f(r) = -exp(-r)
    WoodsSaxon,   ///< f(r) = -1 / (1 + exp((r - a) / b))
    Coulomb,      ///< f(r) = -1 / r
};

enum class Theory
{
    KleinGordon,
    Salpeter,
};

/// Attractive central potential V(r) = v f(r), in units with hbar = c = 1.
///
/// The radius a and surface thickness b are only read for Woods-Saxon.
struct PotentialSpec
{
    PotentialKind kind = PotentialKind::Exponential;
    double v = 1.0;
    double a = 1.0;
    double b = 0.2;

    static PotentialSpec exponential(double v) { return {PotentialKind::Exponential, v, 1.0, 0.2}; }
    static PotentialSpec woods_saxon(double v, double a, double b)
    {
        return {PotentialKind::WoodsSaxon, v, a, b};
    }
    static PotentialSpec coulomb(double v) { return {PotentialKind::Coulomb, v, 1.0, 0.2}; }

    /// Same shape with a different coupling.
    PotentialSpec with_coupling(double coupling) const
    {
        PotentialSpec out = *this;
        out.v = coupling;
        return out;
    }

    friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;
};

struct ValidityReport
{
    bool accepted = false;
    std::string reason;

    explicit operator bool() const noexcept { return accepted; }
};

/// Coulomb evaluation below this radius is a domain error.
inline constexpr double coulomb_min_radius = 1e-12;

/// Coulomb coupling windows: discrete Klein-Gordon spectrum requires
/// v < 1/2, the semirelativistic operator is bounded below for v < 2/pi.
inline constexpr double coulomb_kg_limit = 0.5;
inline constexpr double coulomb_salpeter_limit = 0.63661977236758134308;

/// V(r). Throws DomainError for non-finite or non-positive r.
double evaluate(const PotentialSpec& spec, double r);

/// Structural checks (positive parameters) plus the Coulomb coupling window.
/// Binding and supercriticality of the other shapes are left to the solvers.
ValidityReport validate(const PotentialSpec& spec, Theory theory);

/// Smallest radius beyond which |V| stays below epsilon.
///
/// A geometric grid r0 * 2^k (r0 = max(a, 1) for Woods-Saxon, 1 otherwise)
/// brackets the crossing, and bisection on the monotone |V| refines it.
/// Returns r0 when epsilon >= v.
double tail_radius(const PotentialSpec& spec, double epsilon);

/// Numerically safe 1 / (1 + exp(x)).
double fermi(double x);

/// Numerically safe exp(x) / (1 + exp(x))^2.
double fermi_slope(double x);

std::string_view to_string(PotentialKind kind);
std::string_view to_string(Theory theory);

/// Accepts "exponential", "woods-saxon" and "coulomb". Throws ConfigError otherwise.
PotentialKind parse_kind(std::string_view name);

}  // namespace semirel
