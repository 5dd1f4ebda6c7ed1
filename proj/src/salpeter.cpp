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

#include "semirel/salpeter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "semirel/errors.hpp"
#include "semirel/kernels.hpp"
#include "semirel/quadrature.hpp"
#include "semirel/tridiagonal.hpp"

namespace semirel {
namespace {

constexpr std::size_t auto_nodes_per_mode = 20;
constexpr int coulomb_grading_levels = 8;
constexpr double decay_lengths = 12.0;
constexpr double eigen_tolerance = 1e-14;

std::size_t node_count(const BasisConfig& cfg)
{
    return cfg.quad_points > 0 ? cfg.quad_points : auto_nodes_per_mode * cfg.basis_size;
}

std::vector<double> panel_breaks(double R, std::size_t panels, double max_width, bool graded)
{
    panels = std::max(panels, static_cast<std::size_t>(std::ceil(R / max_width)));
    std::vector<double> breaks;
    breaks.reserve(panels + coulomb_grading_levels + 1);
    const double width = R / static_cast<double>(panels);
    breaks.push_back(0.0);
    if (graded) {
        for (int k = coulomb_grading_levels; k >= 1; --k) {
            breaks.push_back(std::ldexp(width, -k));
        }
    }
    for (std::size_t i = 1; i <= panels; ++i) {
        breaks.push_back(i == panels ? R : width * static_cast<double>(i));
    }
    return breaks;
}

BoxSolution solve_box(const RadialFunction& V, double m, const BasisConfig& cfg,
                      double max_width, bool graded)
{
    check(cfg);
    if (!(cfg.box_radius > 0.0)) {
        throw std::invalid_argument("box_energy: box_radius must be positive");
    }
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw DomainError("mass must be positive");
    }
    const std::size_t N = cfg.basis_size;
    const double R = cfg.box_radius;
    const std::size_t panels =
        (node_count(cfg) + gauss_nodes_per_panel - 1) / gauss_nodes_per_panel;
    const auto breaks = panel_breaks(R, panels, max_width, graded);
    const QuadratureRule rule = composite_gauss_legendre(breaks);

    const double k1 = std::numbers::pi / R;
    std::vector<double> weight(rule.size());
    std::vector<double> angle(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
        weight[i] = rule.weights[i] * V(rule.nodes[i]);
        angle[i] = k1 * rule.nodes[i];
    }
    // phi_j phi_k = (cos((j-k) x) - cos((j+k) x)) / R with x = pi r / R.
    std::vector<double> moments(2 * N + 1);
    kernels::cosine_moments(weight, angle, moments);

    Eigen::MatrixXd H(N, N);
    for (std::size_t j = 1; j <= N; ++j) {
        for (std::size_t k = 1; k <= j; ++k) {
            const double v = (moments[j - k] - moments[j + k]) / R;
            H(j - 1, k - 1) = v;
            H(k - 1, j - 1) = v;
        }
        const double p = k1 * static_cast<double>(j);
        H(j - 1, j - 1) += std::sqrt(p * p + m * m);
    }

    Eigen::Tridiagonalization<Eigen::MatrixXd> tri(H);
    const Eigen::VectorXd d = tri.diagonal();
    const Eigen::VectorXd e = tri.subDiagonal();
    SymmetricTridiagonal t(std::vector<double>(d.data(), d.data() + d.size()),
                           std::vector<double>(e.data(), e.data() + e.size()));
    const double lower = t.gershgorin_lower();
    const double upper = t.gershgorin_upper();
    const double tol = eigen_tolerance * std::max({1.0, std::abs(lower), std::abs(upper)});
    const auto bracket = t.lowest_eigenvalue(lower - tol, upper + tol, tol);
    if (!bracket) {
        throw NonConvergence("Sturm bisection found no eigenvalue");
    }
    const auto y = t.inverse_iteration(bracket->lower - tol, 3);
    const Eigen::VectorXd c =
        tri.matrixQ() * Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(N));

    BoxSolution out;
    out.E = bracket->midpoint();
    out.coefficients.assign(c.data(), c.data() + c.size());
    out.basis_tail = std::abs(out.coefficients.back());
    return out;
}

double max_panel_width(const PotentialSpec& spec)
{
    return spec.kind == PotentialKind::WoodsSaxon ? 0.5 * spec.b
                                                  : std::numeric_limits<double>::infinity();
}

}  // namespace

void check(const BasisConfig& cfg)
{
    if (cfg.basis_size < 32) {
        throw std::invalid_argument("BasisConfig: basis_size must be at least 32");
    }
    if (!(cfg.box_radius >= 0.0) || !std::isfinite(cfg.box_radius)) {
        throw std::invalid_argument("BasisConfig: box_radius must be finite and nonnegative");
    }
    if (cfg.quad_points != 0 && cfg.quad_points < 4 * cfg.basis_size) {
        throw std::invalid_argument("BasisConfig: quad_points must be at least 4 * basis_size");
    }
}

BoxSolution box_energy(const RadialFunction& V, double m, const BasisConfig& cfg)
{
    return solve_box(V, m, cfg, std::numeric_limits<double>::infinity(), false);
}

SalpeterSolution ground_energy(const PotentialSpec& spec, double m, const BasisConfig& cfg,
                               const ConvergenceControl& control)
{
    if (auto report = validate(spec, Theory::Salpeter); !report) {
        throw DomainError(report.reason);
    }
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw DomainError("mass must be positive");
    }
    check(cfg);
    const bool coulomb = spec.kind == PotentialKind::Coulomb;
    const RadialFunction V = [spec](double r) { return evaluate(spec, r); };
    const double width = max_panel_width(spec);

    SalpeterSolution sol;
    sol.m = m;
    std::map<std::pair<std::size_t, double>, BoxSolution> cache;
    auto at = [&](std::size_t N, double R) -> const BoxSolution& {
        const auto key = std::make_pair(N, R);
        auto it = cache.find(key);
        if (it == cache.end()) {
            BasisConfig c = cfg;
            c.basis_size = N;
            c.box_radius = R;
            if (cfg.quad_points > 0) {
                const std::size_t scaled =
                    (cfg.quad_points * N + cfg.basis_size - 1) / cfg.basis_size;
                c.quad_points = std::max(scaled, 4 * N);
            }
            it = cache.emplace(key, solve_box(V, m, c, width, coulomb)).first;
            sol.convergence_history.push_back({N, R, it->second.E});
        }
        return it->second;
    };

    const double tail = coulomb ? 1.0 : tail_radius(spec, 1e-12);
    std::size_t N = cfg.basis_size;
    double R = cfg.box_radius;
    if (R <= 0.0) {
        // Coarse pass: grow the box until the level drops below m, then size
        // it to cover the decay length 1 / sqrt(m^2 - E^2).
        auto coarse = [&](double radius) {
            const auto n = static_cast<std::size_t>(std::ceil(8.0 * radius));
            return at(std::clamp<std::size_t>(n, 64, 1024), radius).E;
        };
        double r0 = std::max(tail, 10.0);
        double E = coarse(r0);
        while (!(E < m)) {
            r0 *= 2.0;
            if (r0 > control.max_radius) {
                throw NoBoundState("no level below m for boxes up to max_radius");
            }
            E = coarse(r0);
        }
        R = r0;
        for (int pass = 0; pass < 4; ++pass) {
            const double kappa = std::sqrt((m - E) * (m + E));
            const double next =
                std::min(std::max({tail, 10.0, decay_lengths / kappa}), control.max_radius);
            const bool settled = std::abs(next - R) < 0.1 * next;
            R = next;
            if (settled) {
                break;
            }
            E = std::min(E, coarse(R));
        }
        sol.convergence_history.clear();
    }

    bool always_falling = true;
    for (;;) {
        if (2 * N > control.max_basis) {
            break;
        }
        const double a = at(N, R).E;
        const BoxSolution& b = at(2 * N, R);
        const double c = at(2 * N, 2.0 * R).E;
        const double dN = std::abs(b.E - a);
        const double dR = std::abs(c - a);
        if (b.E >= a - control.tolerance) {
            always_falling = false;
        }
        sol.E = b.E;
        sol.basis_tail = b.basis_tail;
        if (dN < control.tolerance && dR < control.tolerance) {
            sol.converged = true;
            break;
        }
        if (dR >= control.tolerance) {
            if (2.0 * R > control.max_radius) {
                break;
            }
            R *= 2.0;
        }
        N *= 2;
    }
    if (!sol.converged) {
        if (coulomb) {
            sol.coulomb_drift = always_falling;
            return sol;
        }
        throw NonConvergence("basis doubling did not settle below " +
                             std::to_string(control.tolerance) + " at N = " + std::to_string(N) +
                             ", R = " + std::to_string(R));
    }
    if (!(sol.E < m)) {
        throw NoBoundState("converged level is not below m");
    }
    return sol;
}

SquaredInequalityReport squared_inequality_check(const SalpeterSolution& solution,
                                                 const PotentialSpec& spec,
                                                 const SpectralOptions& options, double tolerance)
{
    SquaredInequalityReport report;
    if (!solution.converged) {
        report.note = "solution not converged; check skipped";
        return report;
    }
    try {
        const auto p = spectral_point(spec, solution.E, options);
        report.F = p.F;
    } catch (const NoBoundState&) {
        report.note = "F(E) undefined; check skipped";
        return report;
    } catch (const DomainError& e) {
        report.note = std::string("F(E) not available: ") + e.what();
        return report;
    }
    report.checked = true;
    report.slack = solution.E * solution.E - solution.m * solution.m - *report.F;
    report.violated = report.slack < -tolerance;
    return report;
}

}  // namespace semirel
