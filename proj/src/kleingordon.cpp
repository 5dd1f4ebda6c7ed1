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

#include "semirel/kleingordon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "semirel/errors.hpp"
#include "semirel/format.hpp"

namespace semirel {
namespace {

constexpr double tail_epsilon = 1e-12;
constexpr double root_tolerance = 1e-10;
constexpr std::size_t scan_points = 64;
constexpr double box_decay_lengths = 20.0;
constexpr int threshold_levels = 3;

void require_kg(const PotentialSpec& spec)
{
    if (auto report = validate(spec, Theory::KleinGordon); !report) {
        throw DomainError(report.reason);
    }
}

double kratzer_gamma(double v)
{
    return 0.5 + std::sqrt(0.25 - v * v);
}

RadialFunction effective_potential(const PotentialSpec& spec, double e)
{
    return [spec, e](double r) {
        const double V = evaluate(spec, r);
        return 2.0 * e * V - V * V;
    };
}

double coarse_spacing(const PotentialSpec& spec, double max_spacing)
{
    if (spec.kind == PotentialKind::WoodsSaxon) {
        return std::min(max_spacing, spec.b / 10.0);
    }
    return max_spacing;
}

double far_radius(const PotentialSpec& spec)
{
    return std::max(tail_radius(spec, tail_epsilon), 1.0);
}

SpectralCurvePoint closed_form_point(const PotentialSpec& spec, double e)
{
    // h(e) = p^2 - 2ev/r - v^2/r^2 is a Kratzer operator; u ~ r^gamma exp(-kappa r).
    if (e <= 0.0) {
        throw NoBoundState("Coulomb h(e) does not bind for e <= 0");
    }
    const double gamma = kratzer_gamma(spec.v);
    const double kappa = e * spec.v / gamma;
    SpectralCurvePoint p;
    p.e = e;
    p.F = -kappa * kappa;
    p.F_prime = -2.0 * e * spec.v * spec.v / (gamma * gamma);
    p.mean_V = 0.5 * p.F_prime;
    p.delta = e - p.mean_V;
    return p;
}

bool binds_at(const PotentialSpec& spec, double e, double r_far, double spacing)
{
    return zero_energy_probe(effective_potential(spec, e), r_far, spacing).bound();
}

GridConfig resolve_grid(const PotentialSpec& spec, double e, const SpectralOptions& options)
{
    GridConfig grid = options.grid;
    const bool coulomb = spec.kind == PotentialKind::Coulomb;
    if (coulomb) {
        grid.singular_exponent = 2.0 * kratzer_gamma(spec.v) - 1.0;
        grid.refinement_levels = std::max(grid.refinement_levels, 6);
    }
    if (grid.r_max > 0.0) {
        return grid;
    }
    const double h0 = coarse_spacing(spec, options.max_spacing);
    const double r_tail = coulomb ? 1.0 : far_radius(spec);
    const RadialFunction W = effective_potential(spec, e);

    double box = std::max(r_tail, 10.0);
    double lambda = 0.0;
    for (;;) {
        GridConfig pre;
        pre.r_max = box;
        pre.n_points = std::max<std::size_t>(64, static_cast<std::size_t>(box / (4.0 * h0)));
        pre.refinement_levels = 1;
        pre.tolerance = std::numeric_limits<double>::max();
        try {
            lambda = lowest_eigenvalue(W, pre).eigenvalue;
            break;
        } catch (const NoBoundState&) {
            box *= 2.0;
            if (box > options.max_radius) {
                throw NoBoundState("h(e) binds too weakly for the largest box");
            }
        }
    }
    const double kappa = std::sqrt(-lambda);
    grid.r_max = std::min(std::max(r_tail, box_decay_lengths / kappa), options.max_radius);
    if (coulomb) {
        grid.r_max = std::max(grid.r_max, 40.0 / kappa);
    }
    const auto needed = static_cast<std::size_t>(std::ceil(grid.r_max / h0));
    grid.n_points = std::max(grid.n_points, needed);
    return grid;
}

// Root x of a boolean threshold crossing (pred false below, true above),
// bisected at spacings h0, h0/2, h0/4 and extrapolated in h^2.
double extrapolated_threshold(const std::function<bool(double, double)>& pred, double lo,
                              double hi, double h0, double tolerance)
{
    std::vector<double> roots;
    for (int k = 0; k < threshold_levels; ++k) {
        const double h = h0 / static_cast<double>(1 << k);
        double a = lo;
        double b = hi;
        double width = b - a;
        while (pred(a, h) && a > lo - 64.0 * width) {
            a -= width;
        }
        while (!pred(b, h) && b < hi + 64.0 * width) {
            b += width;
        }
        while (b - a > tolerance) {
            const double mid = 0.5 * (a + b);
            if (pred(mid, h)) {
                b = mid;
            } else {
                a = mid;
            }
        }
        roots.push_back(0.5 * (a + b));
    }
    const double exponents[] = {2.0, 4.0};
    return richardson_row(roots, exponents).back();
}

void require_threshold_shape(const PotentialSpec& shape, double m)
{
    if (shape.kind == PotentialKind::Coulomb) {
        throw DomainError("critical couplings are defined for exponential and Woods-Saxon shapes");
    }
    if (!(m > 0.0)) {
        throw DomainError("mass must be positive");
    }
    if (shape.kind == PotentialKind::WoodsSaxon && !validate(shape.with_coupling(1.0), Theory::KleinGordon)) {
        throw DomainError("Woods-Saxon parameters must be positive");
    }
}

// Coupling where binding of h(e) starts at fixed e, between a coupling
// known not to bind and a doubling search upward.
double coupling_threshold(const PotentialSpec& shape, double e, double v_unbound,
                          const SpectralOptions& options)
{
    const double h0 = coarse_spacing(shape, options.max_spacing);
    double v_bound = std::max(2.0 * v_unbound, 0.5);
    while (!binds_at(shape.with_coupling(v_bound), e, far_radius(shape.with_coupling(v_bound)), h0)) {
        v_unbound = v_bound;
        v_bound *= 2.0;
        if (v_bound > 1e6) {
            throw NonConvergence("no binding coupling found below 1e6");
        }
    }
    const double r_far = far_radius(shape.with_coupling(v_bound));
    auto pred = [&](double v, double h) {
        return v > 0.0 && binds_at(shape.with_coupling(v), e, r_far, h);
    };
    return extrapolated_threshold(pred, v_unbound, v_bound, h0, critical_coupling_tolerance);
}

}  // namespace

bool spectral_point_exists(const PotentialSpec& spec, double e, double spacing)
{
    require_kg(spec);
    if (spec.kind == PotentialKind::Coulomb) {
        return e > 0.0;
    }
    return binds_at(spec, e, far_radius(spec), coarse_spacing(spec, spacing));
}

SpectralCurvePoint spectral_point(const PotentialSpec& spec, double e, const SpectralOptions& options)
{
    require_kg(spec);
    if (!std::isfinite(e)) {
        throw DomainError("spectral parameter e must be finite");
    }
    const bool coulomb = spec.kind == PotentialKind::Coulomb;
    if (coulomb && options.method == SpectralMethod::Automatic) {
        return closed_form_point(spec, e);
    }
    if (coulomb && e <= 0.0) {
        throw NoBoundState("Coulomb h(e) does not bind for e <= 0");
    }
    if (!coulomb && !spectral_point_exists(spec, e, options.max_spacing)) {
        throw NoBoundState("h(e) has no bound state at e = " + std::to_string(e));
    }
    const GridConfig grid = resolve_grid(spec, e, options);
    const SchrodingerResult result = lowest_eigenvalue(effective_potential(spec, e), grid);
    const double mean_v =
        extrapolated_expectation(result, [&spec](double r) { return evaluate(spec, r); });
    SpectralCurvePoint p;
    p.e = e;
    p.F = result.eigenvalue;
    p.mean_V = mean_v;
    p.F_prime = 2.0 * mean_v;
    p.delta = e - 0.5 * p.F_prime;
    p.error_estimate = result.error_estimate;
    return p;
}

std::vector<std::optional<SpectralCurvePoint>> sample_curve(const PotentialSpec& spec,
                                                            std::span<const double> e_values,
                                                            const SpectralOptions& options)
{
    std::vector<std::optional<SpectralCurvePoint>> out;
    out.reserve(e_values.size());
    for (double e : e_values) {
        try {
            out.emplace_back(spectral_point(spec, e, options));
        } catch (const NoBoundState&) {
            out.emplace_back(std::nullopt);
        }
    }
    return out;
}

KgSolution solve(const PotentialSpec& spec, double m, const SpectralOptions& options)
{
    require_kg(spec);
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw DomainError("mass must be positive");
    }
    std::map<double, std::optional<SpectralCurvePoint>> cache;
    auto point_at = [&](double e) -> const std::optional<SpectralCurvePoint>& {
        auto it = cache.find(e);
        if (it == cache.end()) {
            std::optional<SpectralCurvePoint> p;
            try {
                p = spectral_point(spec, e, options);
            } catch (const NoBoundState&) {
            }
            it = cache.emplace(e, p).first;
        }
        return it->second;
    };
    auto G = [&](double e) {
        const auto& p = point_at(e);
        return (p ? p->F : 0.0) - e * e + m * m;
    };

    const double eps = 1e-6 * m;
    const double lo = -m + eps;
    const double hi = m - eps;
    std::vector<double> es(scan_points);
    std::vector<double> gs(scan_points);
    for (std::size_t i = 0; i < scan_points; ++i) {
        es[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(scan_points - 1);
        gs[i] = G(es[i]);
    }

    KgSolution sol;
    sol.m = m;
    sol.e = std::numeric_limits<double>::quiet_NaN();
    sol.delta_at_e = std::numeric_limits<double>::quiet_NaN();
    for (double e : es) {
        if (const auto& p = point_at(e)) {
            sol.curve_samples.push_back(*p);
        }
    }

    auto refine = [&](std::size_t i) {
        if (gs[i] == 0.0) {
            return es[i];
        }
        if (gs[i + 1] == 0.0) {
            return es[i + 1];
        }
        std::uintmax_t max_iter = 200;
        const auto bracket = boost::math::tools::toms748_solve(
            G, es[i], es[i + 1], gs[i], gs[i + 1],
            [](double a, double b) { return std::abs(b - a) <= root_tolerance; }, max_iter);
        return 0.5 * (bracket.first + bracket.second);
    };

    std::vector<std::size_t> crossings;
    for (std::size_t i = 0; i + 1 < scan_points; ++i) {
        if ((gs[i] > 0.0) != (gs[i + 1] > 0.0) || gs[i] == 0.0) {
            crossings.push_back(i);
        }
    }
    if (crossings.empty()) {
        sol.status = gs.front() > 0.0 ? KgStatus::NoBinding : KgStatus::Supercritical;
    } else {
        sol.status = KgStatus::Bound;
        sol.e = refine(crossings.front());
        if (crossings.size() > 1) {
            sol.second_root = refine(crossings[1]);
        }
        const auto& p = point_at(sol.e);
        sol.delta_at_e = p ? p->delta : sol.e;
    }

    // e0: edge of the region where h(e) binds, when it falls inside the window.
    if (spec.kind != PotentialKind::Coulomb || options.method == SpectralMethod::Grid) {
        for (std::size_t i = 1; i < scan_points; ++i) {
            if (!point_at(es[i - 1]) && point_at(es[i])) {
                if (spec.kind == PotentialKind::Coulomb) {
                    sol.e0 = 0.0;
                    break;
                }
                const double h0 = coarse_spacing(spec, options.max_spacing);
                const double r_far = far_radius(spec);
                auto pred = [&](double e, double h) { return binds_at(spec, e, r_far, h); };
                sol.e0 = extrapolated_threshold(pred, es[i - 1], es[i], h0, root_tolerance);
                break;
            }
        }
    } else if (lo < 0.0) {
        sol.e0 = 0.0;  // Kratzer F(e) = -(e v / gamma)^2 vanishes at e = 0
    }
    return sol;
}

double critical_coupling_lower(const PotentialSpec& shape, double m, const SpectralOptions& options)
{
    require_threshold_shape(shape, m);
    return coupling_threshold(shape, m, 0.0, options);
}

double critical_coupling_upper(const PotentialSpec& shape, double m, const SpectralOptions& options)
{
    require_threshold_shape(shape, m);
    // With v |f| <= 2m everywhere, h(-m) = p^2 + v|f| (2m - v|f|) >= p^2 cannot bind.
    double max_shape = 1.0;
    if (shape.kind == PotentialKind::WoodsSaxon) {
        max_shape = fermi(-shape.a / shape.b);
    }
    return coupling_threshold(shape, -m, 2.0 * m / max_shape, options);
}

ConcavityReport concavity_scan(const PotentialSpec& spec, std::span<const double> e_grid,
                               const SpectralOptions& options, double tolerance)
{
    ConcavityReport report;
    for (const auto& p : sample_curve(spec, e_grid, options)) {
        if (p) {
            report.points.push_back(*p);
        }
    }
    const auto& pts = report.points;
    if (pts.size() < 3) {
        throw std::invalid_argument("concavity_scan: fewer than three points where F exists");
    }
    report.min_delta_slope = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        const double left = pts[i].e - pts[i - 1].e;
        const double right = pts[i + 1].e - pts[i].e;
        if (std::abs(left - right) > 1e-9 * std::max(left, right)) {
            continue;
        }
        ++report.midpoint_checks;
        const double chord = 0.5 * (pts[i - 1].F + pts[i + 1].F);
        if (pts[i].F < chord - tolerance) {
            report.violations.push_back({ConcavityViolation::Kind::Midpoint, pts[i].e,
                                         chord - tolerance - pts[i].F});
        }
        ++report.delta_checks;
        const double f2 = (pts[i + 1].F_prime - pts[i - 1].F_prime) / (left + right);
        const double delta_slope = 1.0 - 0.5 * f2;
        report.min_delta_slope = std::min(report.min_delta_slope, delta_slope);
        if (!(delta_slope > 1.0)) {
            report.violations.push_back(
                {ConcavityViolation::Kind::DeltaSlope, pts[i].e, 1.0 - delta_slope});
        }
    }
    for (const auto& at : pts) {
        for (const auto& base : pts) {
            if (&at == &base) {
                continue;
            }
            ++report.tangent_checks;
            const double tangent = base.F + (at.e - base.e) * base.F_prime;
            if (at.F > tangent + tolerance) {
                report.violations.push_back(
                    {ConcavityViolation::Kind::Tangent, at.e, at.F - tangent - tolerance});
            }
        }
    }
    return report;
}

void write_curve_csv(std::ostream& out, std::span<const SpectralCurvePoint> points)
{
    out << "e,F,F_prime,delta\n";
    for (const auto& p : points) {
        out << format_number(p.e) << ',' << format_number(p.F) << ',' << format_number(p.F_prime)
            << ',' << format_number(p.delta) << '\n';
    }
}

std::string_view to_string(KgStatus status)
{
    switch (status) {
        case KgStatus::Bound:
            return "bound";
        case KgStatus::NoBinding:
            return "no-binding";
        case KgStatus::Supercritical:
            return "supercritical";
    }
    return "unknown";
}

}  // namespace semirel
