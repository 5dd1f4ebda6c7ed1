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
#include <span>
#include <vector>

namespace semirel {

/// Real symmetric tridiagonal matrix with eigenvalue counting by Sturm sequences.
class SymmetricTridiagonal
{
  public:
    /// `off[i]` couples rows i and i+1; off.size() must be diag.size() - 1.
    SymmetricTridiagonal(std::vector<double> diag, std::vector<double> off);

    std::size_t size() const noexcept { return diag_.size(); }
    std::span<const double> diag() const noexcept { return diag_; }
    std::span<const double> off() const noexcept { return off_; }

    /// Number of eigenvalues strictly below x.
    std::size_t count_below(double x) const;

    /// Gershgorin interval containing the whole spectrum.
    double gershgorin_lower() const;
    double gershgorin_upper() const;

    /// Smallest eigenvalue, if one lies below `upper`. The search runs by
    /// 4-way multisection of [lower, upper] until the bracket is narrower
    /// than `tolerance`; `lower` must bound the spectrum from below.
    struct Bracket
    {
        double lower;  ///< count_below(lower) == 0
        double upper;  ///< count_below(upper) >= 1
        double midpoint() const noexcept { return 0.5 * (lower + upper); }
    };
    std::optional<Bracket> lowest_eigenvalue(double lower, double upper, double tolerance) const;

    /// Inverse iteration with shift `shift` (kept below the lowest
    /// eigenvalue so that T - shift is positive definite). Returns the
    /// iterate with unit Euclidean norm and positive sum.
    std::vector<double> inverse_iteration(double shift, int iterations) const;

  private:
    std::vector<double> diag_;
    std::vector<double> off_;
    std::vector<double> off_sq_;
    double pivmin_;
};

}  // namespace semirel
