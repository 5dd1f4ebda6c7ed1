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

/// Nodes and weights of a composite rule; sum_i w_i f(x_i) approximates the integral.
struct QuadratureRule
{
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }

    /// Applies the rule to f through the active dot-product kernel.
    double integrate(const std::function<double(double)>& f) const;
};

/// Gauss-Legendre nodes per panel in every composite rule.
inline constexpr std::size_t gauss_nodes_per_panel = 16;

/// 16-node Gauss-Legendre on each interval [breaks[i], breaks[i+1]].
/// Breakpoints must be strictly increasing.
QuadratureRule composite_gauss_legendre(std::span<const double> breaks);

/// 16-node Gauss-Legendre on `panels` equal panels of [lo, hi].
QuadratureRule composite_gauss_legendre(double lo, double hi, std::size_t panels);

}  // namespace semirel
