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

#include "semirel/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "semirel/kernels.hpp"

namespace semirel {

SymmetricTridiagonal::SymmetricTridiagonal(std::vector<double> diag, std::vector<double> off)
    : diag_(std::move(diag))
    , off_(std::move(off))
{
    if (diag_.empty() || off_.size() + 1 != diag_.size()) {
        throw std::invalid_argument("SymmetricTridiagonal: inconsistent sizes");
    }
    off_sq_.resize(off_.size());
    double max_sq = 1.0;
    for (std::size_t i = 0; i < off_.size(); ++i) {
        off_sq_[i] = off_[i] * off_[i];
        max_sq = std::max(max_sq, off_sq_[i]);
    }
    pivmin_ = std::numeric_limits<double>::min() * max_sq;
}

std::size_t SymmetricTridiagonal::count_below(double x) const
{
    return kernels::sturm_count(diag_, off_sq_, x, pivmin_);
}

double SymmetricTridiagonal::gershgorin_lower() const
{
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < diag_.size(); ++i) {
        double radius = 0.0;
        if (i > 0) {
            radius += std::abs(off_[i - 1]);
        }
        if (i < off_.size()) {
            radius += std::abs(off_[i]);
        }
        lo = std::min(lo, diag_[i] - radius);
    }
    return lo;
}

double SymmetricTridiagonal::gershgorin_upper() const
{
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < diag_.size(); ++i) {
        double radius = 0.0;
        if (i > 0) {
            radius += std::abs(off_[i - 1]);
        }
        if (i < off_.size()) {
            radius += std::abs(off_[i]);
        }
        hi = std::max(hi, diag_[i] + radius);
    }
    return hi;
}

std::optional<SymmetricTridiagonal::Bracket>
SymmetricTridiagonal::lowest_eigenvalue(double lower, double upper, double tolerance) const
{
    if (count_below(upper) == 0) {
        return std::nullopt;
    }
    double lo = lower;
    double hi = upper;
    constexpr std::size_t lanes = kernels::sturm_lanes;
    // Each pass splits the bracket into lanes + 1 pieces.
    for (int pass = 0; pass < 200 && hi - lo > tolerance; ++pass) {
        std::array<double, lanes> shifts{};
        const double step = (hi - lo) / static_cast<double>(lanes + 1);
        for (std::size_t k = 0; k < lanes; ++k) {
            shifts[k] = lo + step * static_cast<double>(k + 1);
        }
        const auto counts = kernels::sturm_count4(diag_, off_sq_, shifts, pivmin_);
        double new_lo = lo;
        double new_hi = hi;
        for (std::size_t k = 0; k < lanes; ++k) {
            if (counts[k] >= 1) {
                new_hi = shifts[k];
                break;
            }
            new_lo = shifts[k];
        }
        if (new_lo == lo && new_hi == hi) {
            break;  // bracket below floating-point resolution
        }
        lo = new_lo;
        hi = new_hi;
    }
    return Bracket{lo, hi};
}

std::vector<double> SymmetricTridiagonal::inverse_iteration(double shift, int iterations) const
{
    const std::size_t n = diag_.size();
    std::vector<double> x(n, 1.0);
    std::vector<double> pivot(n);
    std::vector<double> y(n);

    // LDL^T of T - shift; positive definite when shift is below the spectrum.
    pivot[0] = diag_[0] - shift;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(pivot[i - 1]) < pivmin_) {
            pivot[i - 1] = pivmin_;
        }
        pivot[i] = (diag_[i] - shift) - off_sq_[i - 1] / pivot[i - 1];
    }
    if (std::abs(pivot[n - 1]) < pivmin_) {
        pivot[n - 1] = pivmin_;
    }

    for (int it = 0; it < iterations; ++it) {
        // Forward: L z = x with L unit lower bidiagonal, l_i = off[i-1]/pivot[i-1].
        y[0] = x[0];
        for (std::size_t i = 1; i < n; ++i) {
            y[i] = x[i] - off_[i - 1] / pivot[i - 1] * y[i - 1];
        }
        // Backward: D L^T x = z.
        x[n - 1] = y[n - 1] / pivot[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) {
            x[i] = y[i] / pivot[i] - off_[i] / pivot[i] * x[i + 1];
        }
        const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
        for (double& xi : x) {
            xi /= norm;
        }
    }
    if (std::accumulate(x.begin(), x.end(), 0.0) < 0.0) {
        for (double& xi : x) {
            xi = -xi;
        }
    }
    return x;
}

}  // namespace semirel
