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
#include <span>
#include <vector>

namespace semirel {

/// Radial density of the Gaussian trial state in the scaled variable t = r / s.
double rho(double t);

/// The four integrals of the scale-s Gaussian bound for the Woods-Saxon well.
struct JIntegrals
{
    double J1 = 0.0;  ///< <sqrt(p^2 + m^2)>
    double J2 = 0.0;  ///< <fermi((r - a) / b)>
    double J3 = 0.0;  ///< -dJ1/ds
    double J4 = 0.0;  ///< -dJ2/ds
};

/// Upper limit of the t integrals.
inline constexpr double gaussian_cutoff = 8.0;

/// Fixed 24-panel 16-node Gauss-Legendre rule on [0, 8], with extra
/// breakpoints graded geometrically around the Fermi edge t = a / s.
JIntegrals j_integrals(double m, double a, double b, double s);

double eg_at(double m, double a, double b, double v, double s);

struct GaussianBoundPoint
{
    double s = 0.0;
    double v = 0.0;    ///< J3 / J4, the coupling for which s is optimal
    double E_g = 0.0;  ///< J1 - v J2
    double J1 = 0.0;
    double J2 = 0.0;
    double J3 = 0.0;
    double J4 = 0.0;
};

/// 200 logarithmically spaced scales on [0.05, 10].
std::vector<double> default_s_grid();

std::vector<GaussianBoundPoint> optimal_curve(double m, double a, double b,
                                              std::span<const double> s_grid);

/// min over s of eg_at(m, a, b, v, s) on the branch where v(s) falls with s.
/// Throws CouplingOutOfRange unless v lies strictly inside the span of v(s)
/// over that branch of the default grid.
double eg_optimized(double m, double a, double b, double v);

/// Scale at the minimum found by eg_optimized.
double eg_optimal_scale(double m, double a, double b, double v);

/// Golden-section tolerance on s.
inline constexpr double eg_scale_tolerance = 1e-10;

/// CSV "s,v,E_g,J1,J2,J3,J4" with 12 significant digits, header first.
void write_curve_csv(std::ostream& out, std::span<const GaussianBoundPoint> points);

}  // namespace semirel
