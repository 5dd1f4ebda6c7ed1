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

#include "semirel/radial_schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "semirel/errors.hpp"
#include "semirel/kernels.hpp"
#include "semirel/tridiagonal.hpp"

namespace semirel {
namespace {

constexpr double bisection_tolerance = 1e-12;
constexpr int inverse_iterations = 2;

std::size_t finest_size(const GridConfig& grid)
{
    return ((grid.n_points + 1) << (grid.refinement_levels - 1)) - 1;
}

}  // namespace

void check(const GridConfig& grid)
{
    if (!(grid.r_max > 0.0) || !std::isfinite(grid.r_max)) {
        throw std::invalid_argument("GridConfig: r_max must be positive");
    }
    if (grid.n_points < 64) {
        throw std::invalid_argument("GridConfig: n_points must be at least 64");
    }
    if (grid.refinement_levels < 1 || grid.refinement_levels > 8) {
        throw std::invalid_argument("GridConfig: refinement_levels must be in [1, 8]");
    }
    if (!(grid.tolerance > 0.0)) {
        throw std::invalid_argument("GridConfig: tolerance must be positive");
    }
}

std::vector<double> extrapolation_exponents(const GridConfig& grid)
{
    const auto count = static_cast<std::size_t>(std::max(grid.refinement_levels - 1, 0));
    std::vector<double> out;
    if (grid.singular_exponent <= 0.0) {
        for (std::size_t j = 1; j <= count; ++j) {
            out.push_back(2.0 * static_cast<double>(j));
        }
        return out;
    }
    const double p = grid.singular_exponent;
    std::vector<double> candidates;
    for (int i = 1; i <= 8; ++i) {
        for (int k = 0; k <= 8; ++k) {
            candidates.push_back(static_cast<double>(i) * p + static_cast<double>(k));
        }
    }
    for (int k = 1; k <= 8; ++k) {
        candidates.push_back(2.0 * static_cast<double>(k));
    }
    std::sort(candidates.begin(), candidates.end());
    for (double c : candidates) {
        if (out.size() == count) {
            break;
        }
        if (out.empty() || c - out.back() > 1e-9) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<double> richardson_row(std::span<const double> values,
                                   std::span<const double> exponents)
{
    std::vector<double> prev(values.begin(), values.end());
    if (prev.empty()) {
        return prev;
    }
    if (exponents.size() + 1 < values.size()) {
        throw std::invalid_argument("richardson_row: not enough exponents");
    }
    // Column j of the tableau overwrites prev; its last entry is kept.
    std::vector<double> last_row{prev.back()};
    for (std::size_t j = 1; j < values.size(); ++j) {
        const double factor = std::pow(2.0, exponents[j - 1]);
        std::vector<double> next(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
            next[i] = prev[i + 1] + (prev[i + 1] - prev[i]) / (factor - 1.0);
        }
        last_row.push_back(next.back());
        prev = std::move(next);
    }
    return last_row;
}

SchrodingerResult lowest_eigenvalue(const RadialFunction& W, const GridConfig& grid)
{
    check(grid);
    const std::size_t n = finest_size(grid);
    const double h = grid.r_max / static_cast<double>(n + 1);
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = W(h * static_cast<double>(i + 1));
        if (!std::isfinite(w[i])) {
            throw DomainError("W is not finite on the grid");
        }
    }
    return lowest_eigenvalue(w, grid);
}

SchrodingerResult lowest_eigenvalue(std::span<const double> w_finest, const GridConfig& grid)
{
    check(grid);
    const std::size_t n_fine = finest_size(grid);
    if (w_finest.size() != n_fine) {
        throw std::invalid_argument("lowest_eigenvalue: sampled W has wrong length");
    }
    const int levels = grid.refinement_levels;
    const double h_fine = grid.r_max / static_cast<double>(n_fine + 1);

    SchrodingerResult result;
    result.levels.reserve(static_cast<std::size_t>(levels));
    std::size_t bound_levels = 0;
    for (int k = 0; k < levels; ++k) {
        const std::size_t stride = std::size_t{1} << (levels - 1 - k);
        const std::size_t n = ((grid.n_points + 1) << k) - 1;
        const double h = h_fine * static_cast<double>(stride);
        const double inv_h2 = 1.0 / (h * h);
        std::vector<double> diag(n);
        for (std::size_t j = 0; j < n; ++j) {
            diag[j] = 2.0 * inv_h2 + w_finest[(j + 1) * stride - 1];
        }
        SymmetricTridiagonal t(std::move(diag), std::vector<double>(n - 1, -inv_h2));
        const double lower = t.gershgorin_lower() - bisection_tolerance;
        const auto bracket = t.lowest_eigenvalue(lower, 0.0, bisection_tolerance);
        GridLevel level;
        level.spacing = h;
        if (bracket) {
            ++bound_levels;
            level.eigenvalue = bracket->midpoint();
            level.eigenfunction = t.inverse_iteration(bracket->lower, inverse_iterations);
            const double scale = 1.0 / std::sqrt(h);
            for (double& u : level.eigenfunction) {
                u *= scale;
            }
        } else {
            level.eigenvalue = 0.0;
        }
        result.levels.push_back(std::move(level));
    }
    if (bound_levels == 0) {
        throw NoBoundState("no negative eigenvalue on any grid level");
    }
    if (bound_levels < static_cast<std::size_t>(levels)) {
        throw NonConvergence("bound state present on only some grid levels");
    }

    std::vector<double> raw(result.levels.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
        raw[k] = result.levels[k].eigenvalue;
    }
    result.exponents = extrapolation_exponents(grid);
    const auto row = richardson_row(raw, result.exponents);
    result.eigenvalue = row.back();
    if (row.size() >= 2) {
        result.error_estimate = std::abs(row[row.size() - 1] - row[row.size() - 2]);
    } else {
        result.error_estimate = std::abs(result.eigenvalue) * 0.25;
    }
    if (result.error_estimate > 1e3 * grid.tolerance) {
        throw NonConvergence("extrapolation levels disagree by " +
                             std::to_string(result.error_estimate));
    }
    result.converged = result.error_estimate <= grid.tolerance;
    return result;
}

namespace {

double level_expectation(const GridLevel& level, const RadialFunction& g)
{
    const auto& u = level.eigenfunction;
    std::vector<double> gu(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        gu[i] = g(level.radius(i)) * u[i];
    }
    return level.spacing * kernels::dot(gu, u);
}

}  // namespace

double expectation(const SchrodingerResult& result, const RadialFunction& g)
{
    return level_expectation(result.finest(), g);
}

double extrapolated_expectation(const SchrodingerResult& result, const RadialFunction& g)
{
    std::vector<double> values;
    values.reserve(result.levels.size());
    for (const auto& level : result.levels) {
        values.push_back(level_expectation(level, g));
    }
    return richardson_row(values, result.exponents).back();
}

double rayleigh_quotient(const SchrodingerResult& result, const RadialFunction& W)
{
    const GridLevel& level = result.finest();
    const auto& u = level.eigenfunction;
    const double h = level.spacing;
    double kinetic = 0.0;
    double potential = 0.0;
    double norm = 0.0;
    double prev = 0.0;  // u(0) = 0
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double du = u[i] - prev;
        kinetic += du * du;
        potential += W(level.radius(i)) * u[i] * u[i];
        norm += u[i] * u[i];
        prev = u[i];
    }
    kinetic += prev * prev;  // u(r_max) = 0
    return (kinetic / h + h * potential) / (h * norm);
}

ZeroEnergyProbe zero_energy_probe(const RadialFunction& W, double r_far, double spacing)
{
    if (!(r_far > 0.0) || !(spacing > 0.0) || spacing >= r_far) {
        throw std::invalid_argument("zero_energy_probe: need 0 < spacing < r_far");
    }
    const auto steps = static_cast<std::size_t>(std::ceil(r_far / spacing));
    const double h = r_far / static_cast<double>(steps);
    const double h2 = h * h;
    ZeroEnergyProbe probe;
    double prev = 0.0;
    double cur = h;
    for (std::size_t i = 1; i < steps; ++i) {
        const double next = (2.0 + h2 * W(h * static_cast<double>(i))) * cur - prev;
        if ((cur > 0.0 && next <= 0.0) || (cur < 0.0 && next >= 0.0)) {
            ++probe.nodes;
        }
        prev = cur;
        cur = next;
        if (std::abs(cur) > 1e200) {
            prev *= 1e-200;
            cur *= 1e-200;
        }
    }
    probe.value = cur;
    probe.slope = (cur - prev) / h;
    return probe;
}

}  // namespace semirel
