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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semirel/config.hpp"

namespace semirel {

/// Tolerance of the per-row ordering check e_kg <= E_srs <= E_gauss.
inline constexpr double ordering_tolerance = 1e-6;

/// One line of the bounds table. Absent values print as empty fields.
struct BoundsRow
{
    double v = 0.0;
    double m = 0.0;
    std::optional<double> e_kg;
    std::optional<double> E_srs;
    std::optional<double> E_gauss;
    std::optional<double> e0;
    std::optional<double> delta;
    std::string status;  ///< bound, no-binding, supercritical or error
    std::string message;  ///< error text for status "error"
    bool violation = false;
};

struct BoundsReport
{
    std::vector<BoundsRow> rows;
    std::size_t violations = 0;
};

/// Computes one row; never throws for solver failures.
BoundsRow bounds_row(const SweepConfig& cfg, double v, double m);

/// Rows for every (m, v) pair, masses outer, couplings ascending, computed on
/// cfg.threads workers and returned in grid order.
BoundsReport compute_bounds(const SweepConfig& cfg);

/// Header "v,m,e_kg,E_srs,E_gauss,e0,delta,status", one line per row and a
/// closing "# violations: N" summary.
void write_bounds_csv(std::ostream& out, const BoundsReport& report);

/// compute_bounds + write_bounds_csv to cfg.out (stdout when empty).
BoundsReport run_bounds(const SweepConfig& cfg, std::ostream& fallback);

/// F-curve files fcurve_v<v>.csv for each coupling, parabolas.csv with
/// g(e) = e^2 - m^2 for each mass and intersections.csv with the Klein-Gordon
/// energies, written into directory cfg.out (created if needed). Returns the
/// paths written, in order.
std::vector<std::string> run_fcurves(const SweepConfig& cfg);

struct CriticalRow
{
    double m = 0.0;
    std::optional<double> v_lower;
    std::optional<double> v_upper;
    std::string message;
};

/// Binding and supercritical couplings for each mass. Throws ConfigError for Coulomb.
std::vector<CriticalRow> compute_critical(const SweepConfig& cfg);

/// CSV "m,v_lower,v_upper,tolerance" to cfg.out (stdout when empty).
std::vector<CriticalRow> run_critical(const SweepConfig& cfg, std::ostream& fallback);

/// Runs `task(i)` for i in [0, count) on `threads` workers. Each index is
/// visited exactly once; exceptions are rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task);

}  // namespace semirel
