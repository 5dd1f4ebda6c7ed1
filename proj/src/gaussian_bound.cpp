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

#include "semirel/gaussian_bound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "semirel/errors.hpp"
#include "semirel/format.hpp"
#include "semirel/potentials.hpp"
#include "semirel/quadrature.hpp"

namespace semirel {
namespace {

constexpr std::size_t base_panels = 24;
constexpr double breakpoint_gap = 1e-14;

void require_positive(double x, const char* name)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(name) + " must be positive");
    }
}

QuadratureRule rule_for(double a, double b, double s)
{
    std::vector<double> breaks;
    for (std::size_t i = 0; i <= base_panels; ++i) {
        breaks.push_back(gaussian_cutoff * static_cast<double>(i) / base_panels);
    }
    const double edge = a / s;
    const double width = b / s;
    if (edge < gaussian_cutoff) {
        breaks.push_back(edge);
    }
    for (double d = width; d < gaussian_cutoff; d *= 2.0) {
        breaks.push_back(edge - d);
        breaks.push_back(edge + d);
    }
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> kept;
    for (double x : breaks) {
        if (x < 0.0 || x > gaussian_cutoff) {
            continue;
        }
        if (kept.empty() || x - kept.back() > breakpoint_gap) {
            kept.push_back(x);
        }
    }
    kept.back() = gaussian_cutoff;
    return composite_gauss_legendre(kept);
}

// Leading run of the default curve on which v falls with s.
std::vector<GaussianBoundPoint> physical_branch(double m, double a, double b)
{
    const auto grid = default_s_grid();
    auto curve = optimal_curve(m, a, b, grid);
    std::size_t end = 1;
    while (end < curve.size() && curve[end].v < curve[end - 1].v) {
        ++end;
    }
    curve.resize(end);
    return curve;
}

}  // namespace

double rho(double t)
{
    if (!(t >= 0.0)) {
        throw DomainError("rho requires t >= 0");
    }
    return 4.0 / std::sqrt(std::numbers::pi) * t * t * std::exp(-t * t);
}

JIntegrals j_integrals(double m, double a, double b, double s)
{
    require_positive(m, "m");
    require_positive(a, "a");
    require_positive(b, "b");
    require_positive(s, "s");
    const QuadratureRule rule = rule_for(a, b, s);
    const double ms = m * s;
    JIntegrals j;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double t = rule.nodes[i];
        const double w = rule.weights[i] * rho(t);
        const double root = std::sqrt(ms * ms + t * t);
        const double x = (t * s - a) / b;
        j.J1 += w * root;
        j.J2 += w * fermi(x);
        j.J3 += w * t * t / root;
        j.J4 += w * t * fermi_slope(x);
    }
    j.J1 /= s;
    j.J3 /= s * s;
    j.J4 /= b;
    return j;
}

double eg_at(double m, double a, double b, double v, double s)
{
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw DomainError("v must be nonnegative");
    }
    const JIntegrals j = j_integrals(m, a, b, s);
    return j.J1 - v * j.J2;
}

std::vector<double> default_s_grid()
{
    constexpr std::size_t count = 200;
    const double lo = std::log(0.05);
    const double hi = std::log(10.0);
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
    }
    grid.front() = 0.05;
    grid.back() = 10.0;
    return grid;
}

std::vector<GaussianBoundPoint> optimal_curve(double m, double a, double b,
                                              std::span<const double> s_grid)
{
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        require_positive(s_grid[i], "s");
        if (i > 0 && !(s_grid[i] > s_grid[i - 1])) {
            throw DomainError("s_grid must be strictly increasing");
        }
    }
    std::vector<GaussianBoundPoint> out;
    out.reserve(s_grid.size());
    for (double s : s_grid) {
        const JIntegrals j = j_integrals(m, a, b, s);
        GaussianBoundPoint p;
        p.s = s;
        p.v = j.J3 / j.J4;
        p.E_g = j.J1 - p.v * j.J2;
        p.J1 = j.J1;
        p.J2 = j.J2;
        p.J3 = j.J3;
        p.J4 = j.J4;
        out.push_back(p);
    }
    return out;
}

double eg_optimal_scale(double m, double a, double b, double v)
{
    const auto pts = physical_branch(m, a, b);
    if (pts.size() < 2 || !(v < pts.front().v) || !(v > pts.back().v)) {
        throw CouplingOutOfRange("coupling " + format_number(v) +
                                 " outside the parametric Gaussian span");
    }
    std::size_t i = 0;
    while (pts[i + 1].v > v) {
        ++i;
    }
    double lo = pts[i == 0 ? 0 : i - 1].s;
    double hi = pts[std::min(i + 2, pts.size() - 1)].s;
    auto f = [&](double s) { return eg_at(m, a, b, v, s); };

    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > eg_scale_tolerance) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

double eg_optimized(double m, double a, double b, double v)
{
    return eg_at(m, a, b, v, eg_optimal_scale(m, a, b, v));
}

void write_curve_csv(std::ostream& out, std::span<const GaussianBoundPoint> points)
{
    out << "s,v,E_g,J1,J2,J3,J4\n";
    for (const auto& p : points) {
        out << format_number(p.s) << ',' << format_number(p.v) << ',' << format_number(p.E_g)
            << ',' << format_number(p.J1) << ',' << format_number(p.J2) << ','
            << format_number(p.J3) << ',' << format_number(p.J4) << '\n';
    }
}

}  // namespace semirel
