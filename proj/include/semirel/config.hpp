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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semirel/kleingordon.hpp"
#include "semirel/potentials.hpp"
#include "semirel/salpeter.hpp"

namespace semirel {

/// Sweep description read from a flat "key = value" file.
///
/// Keys: potential, a, b, m | m_min m_max m_step, v | v_min v_max v_steps,
/// e_min, e_max, e_steps, r_max, grid_points, basis_size, tol, out, threads.
/// v_steps and e_steps count intervals, so v_steps = 10 gives 11 couplings.
/// '#' starts a comment; blank lines are ignored.
struct SweepConfig
{
    PotentialKind potential = PotentialKind::WoodsSaxon;
    double a = 1.0;
    double b = 0.2;
    std::vector<double> masses{1.0};
    std::vector<double> couplings;
    std::optional<double> e_min;
    std::optional<double> e_max;
    std::size_t e_steps = 48;
    double r_max = 0.0;  ///< 0 lets each solver pick its box
    std::size_t grid_points = 4096;
    std::size_t basis_size = 256;
    double tol = 1e-7;  ///< Salpeter doubling tolerance
    std::string out;
    unsigned threads = 1;

    PotentialSpec spec(double v) const;
    SpectralOptions spectral_options() const;
    BasisConfig basis_config() const;
    ConvergenceControl convergence_control() const;
    /// e grid for the F-curves; defaults to [-max m, max m].
    std::vector<double> e_grid() const;
};

/// Parses the text, reporting the offending line in ConfigError.
/// `overrides` are further "key = value" assignments that replace keys of the
/// text; errors in them are reported without a line number.
SweepConfig parse_config(std::string_view text, std::span<const std::string> overrides = {});
SweepConfig load_config(const std::string& path, std::span<const std::string> overrides = {});

/// SALPETER_THREADS, when set to a positive integer, replaces cfg.threads.
void apply_environment(SweepConfig& cfg);

/// n + 1 points lo, lo + (hi - lo)/n, ..., hi.
std::vector<double> linear_grid(double lo, double hi, std::size_t intervals);

}  // namespace semirel
