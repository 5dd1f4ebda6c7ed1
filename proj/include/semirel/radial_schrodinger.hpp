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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace semirel {

using RadialFunction = std::function<double(double)>;

/// Uniform Dirichlet grid on [0, r_max].
///
/// r_max = 0 means "not chosen yet": callers that know the potential
/// (the spectral-curve code) pick a box; the eigenvalue solver itself
/// requires r_max > 0.
///
/// The coarsest level has `n_points` interior points (spacing
/// r_max / (n_points + 1)); each further level halves the spacing, so the
/// grids are nested and level k has (n_points + 1) 2^k - 1 points.
struct GridConfig
{
    double r_max = 0.0;
    std::size_t n_points = 4096;
    int refinement_levels = 3;
    /// Target for the extrapolation error estimate; levels disagreeing by
    /// more than 1e3 times this raise NonConvergence.
    double tolerance = 1e-9;
    /// Leading error exponent p for potentials singular like 1/r^2 at the
    /// origin (p = 2 gamma - 1 when u ~ r^gamma). Zero selects the smooth
    /// expansion in h^2, h^4, ...; otherwise the tableau eliminates the
    /// ascending sequence p, 2p, 3p, p + 1, 2p + 1, 2, ...
    double singular_exponent = 0.0;
};

/// Error exponents eliminated by the extrapolation tableau, one per level
/// beyond the first.
std::vector<double> extrapolation_exponents(const GridConfig& grid);

/// Throws std::invalid_argument unless n_points >= 64, r_max > 0 and
/// 1 <= refinement_levels <= 8.
void check(const GridConfig& grid);

/// Discrete ground state on one grid level. The eigenfunction is sampled at
/// r_i = i h, i = 1..n, and normalized so that h sum u_i^2 = 1.
struct GridLevel
{
    double spacing = 0.0;
    double eigenvalue = 0.0;
    std::vector<double> eigenfunction;

    double radius(std::size_t i) const noexcept { return spacing * static_cast<double>(i + 1); }
};

struct SchrodingerResult
{
    /// Richardson-extrapolated eigenvalue.
    double eigenvalue = 0.0;
    /// |T(L,L) - T(L,L-1)| from the extrapolation tableau.
    double error_estimate = 0.0;
    bool converged = false;
    /// Coarse to fine.
    std::vector<GridLevel> levels;
    /// Error exponents used by the extrapolation.
    std::vector<double> exponents;

    const GridLevel& finest() const { return levels.back(); }
    std::span<const double> eigenfunction() const { return levels.back().eigenfunction; }
};

/// Lowest eigenvalue of -d^2/dr^2 + W(r) with u(0) = u(r_max) = 0.
///
/// Each level is a symmetric tridiagonal second-order finite-difference
/// matrix whose lowest eigenvalue is located by Sturm-count multisection to
/// 1e-12 absolute; the eigenvector follows from two steps of inverse
/// iteration. Throws NoBoundState when no level has a negative eigenvalue.
SchrodingerResult lowest_eigenvalue(const RadialFunction& W, const GridConfig& grid);

/// Same, with W pre-sampled on the finest interior grid (length
/// (n_points + 1) 2^(levels-1) - 1).
SchrodingerResult lowest_eigenvalue(std::span<const double> w_finest, const GridConfig& grid);

/// Trapezoid-rule integral of g(r) u(r)^2 on the finest stored eigenfunction.
double expectation(const SchrodingerResult& result, const RadialFunction& g);

/// Per-level trapezoid expectations combined by the same Richardson
/// elimination as the eigenvalue.
double extrapolated_expectation(const SchrodingerResult& result, const RadialFunction& g);

/// Discrete Rayleigh quotient of the finest eigenfunction, kinetic term by
/// forward differences: (sum (u_{i+1}-u_i)^2 / h + h sum W u^2) / (h sum u^2).
double rayleigh_quotient(const SchrodingerResult& result, const RadialFunction& W);

/// Richardson tableau for values computed at spacings h, h/2, h/4, ...
/// eliminating error terms h^exponents[j] in order. Returns the last row
/// (least to most extrapolated).
std::vector<double> richardson_row(std::span<const double> values,
                                   std::span<const double> exponents);

/// Outward zero-energy integration of the discrete equation
/// -(u_{i+1} - 2u_i + u_{i-1})/h^2 + W_i u_i = 0 from u(0) = 0 to r_far.
struct ZeroEnergyProbe
{
    std::size_t nodes = 0;
    double value = 0.0;  ///< u(r_far), sign of the final branch
    double slope = 0.0;  ///< u'(r_far) with the same scaling

    /// True when the half-line operator (W ~ 0 beyond r_far) has a negative
    /// eigenvalue: the zero-energy solution has a node, at or past r_far.
    bool bound() const noexcept
    {
        return nodes > 0 || (value > 0.0 ? slope < 0.0 : slope > 0.0);
    }
};

ZeroEnergyProbe zero_energy_probe(const RadialFunction& W, double r_far, double spacing);

}  // namespace semirel
