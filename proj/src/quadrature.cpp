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

#include "semirel/quadrature.hpp"

#include <array>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "semirel/kernels.hpp"

namespace semirel {
namespace {

struct ReferenceRule
{
    std::array<double, gauss_nodes_per_panel> x;
    std::array<double, gauss_nodes_per_panel> w;
};

// Full 16-point rule on [-1, 1], ascending; Boost stores only the
// non-negative half of the symmetric rule.
const ReferenceRule& reference_rule()
{
    static const ReferenceRule rule = [] {
        using gauss = boost::math::quadrature::gauss<double, gauss_nodes_per_panel>;
        const auto& abscissa = gauss::abscissa();
        const auto& weights = gauss::weights();
        constexpr std::size_t half = gauss_nodes_per_panel / 2;
        ReferenceRule r{};
        for (std::size_t j = 0; j < half; ++j) {
            r.x[half - 1 - j] = -abscissa[j];
            r.w[half - 1 - j] = weights[j];
            r.x[half + j] = abscissa[j];
            r.w[half + j] = weights[j];
        }
        return r;
    }();
    return rule;
}

}  // namespace

double QuadratureRule::integrate(const std::function<double(double)>& f) const
{
    std::vector<double> values(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        values[i] = f(nodes[i]);
    }
    return kernels::dot(weights, values);
}

QuadratureRule composite_gauss_legendre(std::span<const double> breaks)
{
    if (breaks.size() < 2) {
        throw std::invalid_argument("composite_gauss_legendre: need at least two breakpoints");
    }
    const ReferenceRule& ref = reference_rule();
    QuadratureRule rule;
    rule.nodes.reserve((breaks.size() - 1) * gauss_nodes_per_panel);
    rule.weights.reserve((breaks.size() - 1) * gauss_nodes_per_panel);
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double lo = breaks[p];
        const double hi = breaks[p + 1];
        if (!(hi > lo)) {
            throw std::invalid_argument("composite_gauss_legendre: breakpoints not increasing");
        }
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        for (std::size_t j = 0; j < gauss_nodes_per_panel; ++j) {
            rule.nodes.push_back(mid + half * ref.x[j]);
            rule.weights.push_back(half * ref.w[j]);
        }
    }
    return rule;
}

QuadratureRule composite_gauss_legendre(double lo, double hi, std::size_t panels)
{
    if (panels == 0 || !(hi > lo)) {
        throw std::invalid_argument("composite_gauss_legendre: empty interval");
    }
    std::vector<double> breaks(panels + 1);
    for (std::size_t p = 0; p <= panels; ++p) {
        breaks[p] = lo + (hi - lo) * static_cast<double>(p) / static_cast<double>(panels);
    }
    breaks[panels] = hi;
    return composite_gauss_legendre(breaks);
}

}  // namespace semirel
