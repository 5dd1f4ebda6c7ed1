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

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "semirel/potentials.hpp"
#include "semirel/radial_schrodinger.hpp"

namespace semirel {

/// How F(e) is computed for the Coulomb shape. Other shapes always use the grid.
enum class SpectralMethod
{
    Automatic,  ///< Kratzer closed form for Coulomb
    Grid,       ///< finite-difference engine for every shape
};

/// Grid control for the spectral curve.
///
/// When grid.r_max <= 0 the box is chosen per parameter value: at least the
/// radius where |V| < 1e-12, extended to 20 decay lengths of the ground
/// state, capped at max_radius; n_points is raised so that the coarsest
/// spacing stays below max_spacing.
struct SpectralOptions
{
    GridConfig grid{};
    double max_spacing = 0.02;
    double max_radius = 2000.0;
    SpectralMethod method = SpectralMethod::Automatic;
};

/// One sample of the lowest eigenvalue of h(e) = p^2 + 2eV - V^2.
struct SpectralCurvePoint
{
    double e = 0.0;
    double F = 0.0;
    double F_prime = 0.0;  ///< 2 <V>
    double mean_V = 0.0;
    double delta = 0.0;    ///< e - F_prime / 2
    double error_estimate = 0.0;
};

/// F(e). Throws NoBoundState when h(e) has no negative eigenvalue, and
/// DomainError when the spec is not admissible for the Klein-Gordon problem.
SpectralCurvePoint spectral_point(const PotentialSpec& spec, double e,
                                  const SpectralOptions& options = {});

/// True when h(e) binds on the half-line (W treated as zero past the
/// potential's 1e-12 tail radius), decided by zero-energy integration.
bool spectral_point_exists(const PotentialSpec& spec, double e, double spacing = 0.02);

/// Samples F over a grid of e values; absent entries where h(e) does not bind.
std::vector<std::optional<SpectralCurvePoint>> sample_curve(const PotentialSpec& spec,
                                                            std::span<const double> e_values,
                                                            const SpectralOptions& options = {});

enum class KgStatus
{
    Bound,
    NoBinding,      ///< F lies above the parabola e^2 - m^2 across (-m, m)
    Supercritical,  ///< F lies below the parabola: the intersection left through e = -m
};

struct KgSolution
{
    double e = 0.0;
    double m = 0.0;
    KgStatus status = KgStatus::NoBinding;
    std::optional<double> e0;  ///< F(e0) = 0 inside the scanned window
    double delta_at_e = 0.0;
    /// Second intersection when the curves meet twice (smallest is primary).
    std::optional<double> second_root;
    /// Defined scan samples, ascending in e.
    std::vector<SpectralCurvePoint> curve_samples;
};

/// Smallest e in (-m, m) with F(e) = e^2 - m^2.
///
/// G(e) = F(e) - e^2 + m^2 is sampled at 64 points of (-m + eps, m - eps),
/// eps = 1e-6 m, with F taken as 0 where h(e) does not bind (the bottom of
/// its continuum), so G is continuous and concave; the leftmost sign change
/// is refined to 1e-10.
KgSolution solve(const PotentialSpec& spec, double m, const SpectralOptions& options = {});

/// Coupling at which a bound state first appears: F(m; v) = 0.
/// Exponential or Woods-Saxon only; spec.v is ignored.
double critical_coupling_lower(const PotentialSpec& shape, double m,
                               const SpectralOptions& options = {});

/// Coupling at which the intersection reaches e = -m: F(-m; v) = 0.
/// Exponential or Woods-Saxon only; spec.v is ignored.
double critical_coupling_upper(const PotentialSpec& shape, double m,
                               const SpectralOptions& options = {});

/// Bisection tolerance on v for the critical couplings, per grid level.
inline constexpr double critical_coupling_tolerance = 1e-9;

struct ConcavityViolation
{
    enum class Kind
    {
        Midpoint,    ///< F(mid) < (F(left) + F(right)) / 2 - tol
        Tangent,     ///< F(e) > F(e1) + (e - e1) F'(e1) + tol
        DeltaSlope,  ///< finite-difference delta'(e) <= 1
    };
    Kind kind;
    double e;
    double margin;  ///< amount by which the inequality fails
};

struct ConcavityReport
{
    std::vector<SpectralCurvePoint> points;
    std::size_t midpoint_checks = 0;
    std::size_t tangent_checks = 0;
    std::size_t delta_checks = 0;
    double min_delta_slope = 0.0;
    std::vector<ConcavityViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Midpoint and tangent-line concavity of F, plus delta'(e) = 1 - F''(e)/2 > 1
/// from central differences of F_prime. Needs at least three defined samples.
ConcavityReport concavity_scan(const PotentialSpec& spec, std::span<const double> e_grid,
                               const SpectralOptions& options = {}, double tolerance = 1e-8);

/// CSV rows "e,F,F_prime,delta" with 12 significant digits, header first.
void write_curve_csv(std::ostream& out, std::span<const SpectralCurvePoint> points);

std::string_view to_string(KgStatus status);

}  // namespace semirel
