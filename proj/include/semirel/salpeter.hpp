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
#include <optional>
#include <string>
#include <vector>

#include "semirel/kleingordon.hpp"
#include "semirel/potentials.hpp"
#include "semirel/radial_schrodinger.hpp"

namespace semirel {

/// Dirichlet sine basis phi_j(r) = sqrt(2/R) sin(j pi r / R), j = 1..N, on [0, R].
///
/// box_radius = 0 lets ground_energy choose R from the potential tail and a
/// coarse estimate of the decay length. quad_points = 0 selects 20 N
/// quadrature nodes; an explicit value must be at least 4 N.
struct BasisConfig
{
    double box_radius = 0.0;
    std::size_t basis_size = 256;
    std::size_t quad_points = 0;
};

/// Throws std::invalid_argument unless N >= 32, R >= 0 and quad_points is 0 or >= 4 N.
void check(const BasisConfig& cfg);

/// Doubling test used by ground_energy.
struct ConvergenceControl
{
    double tolerance = 1e-7;
    std::size_t max_basis = 2048;
    double max_radius = 1000.0;
};

struct BasisSample
{
    std::size_t N = 0;
    double R = 0.0;
    double E = 0.0;
};

/// Lowest eigenvalue of the N x N matrix in a fixed box.
struct BoxSolution
{
    double E = 0.0;
    /// |c_N| of the normalized ground vector.
    double basis_tail = 0.0;
    std::vector<double> coefficients;
};

struct SalpeterSolution
{
    double E = 0.0;
    double m = 0.0;
    double basis_tail = 0.0;
    bool converged = false;
    std::vector<BasisSample> convergence_history;
    /// Coulomb only: every basis doubling lowered E by more than the tolerance,
    /// the signature of a coupling too close to 2/pi.
    bool coulomb_drift = false;
};

/// Fixed-box Rayleigh-Ritz solve for an arbitrary potential V (finite at the
/// quadrature nodes). V == 0 gives sqrt((pi/R)^2 + m^2) exactly.
BoxSolution box_energy(const RadialFunction& V, double m, const BasisConfig& cfg);

/// Ground state of sqrt(p^2 + m^2) + V(r) for a validated spec.
///
/// Starting from (N, R), E(N, R), E(2N, R) and E(2N, 2R) are compared; the
/// basis or the box is doubled until both moves fall below the tolerance,
/// and E(2N, R) of the final triple is returned. Throws NonConvergence when
/// 2N would exceed max_basis (Coulomb specs return converged = false with
/// coulomb_drift set instead), NoBoundState when no box up to max_radius
/// gives E < m, DomainError for invalid specs or m <= 0.
SalpeterSolution ground_energy(const PotentialSpec& spec, double m, const BasisConfig& cfg = {},
                               const ConvergenceControl& control = {});

/// E^2 - m^2 >= F(E) at a converged solution.
struct SquaredInequalityReport
{
    bool checked = false;
    std::optional<double> F;
    double slack = 0.0;  ///< E^2 - m^2 - F(E)
    bool violated = false;
    std::string note;
};

SquaredInequalityReport squared_inequality_check(const SalpeterSolution& solution,
                                                 const PotentialSpec& spec,
                                                 const SpectralOptions& options = {},
                                                 double tolerance = 1e-6);

}  // namespace semirel
