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

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation; SIMD variants (AVX2 on x86-64, NEON on AArch64) are
// selected once at startup from the CPU features. SEMIREL_KERNELS=scalar
// (or avx2/neon) in the environment forces a specific table.

namespace semirel::kernels {

enum class Isa
{
    Scalar,
    Avx2,
    Neon,
};

/// Number of shifts evaluated by one call of sturm_count4.
inline constexpr std::size_t sturm_lanes = 4;

struct KernelTable
{
    Isa isa;

    /// sum_i a[i] * b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);

    /// Number of eigenvalues below `shift` of the symmetric tridiagonal
    /// matrix with diagonal `diag` and squared off-diagonal `off_sq`
    /// (off_sq[i] couples rows i and i+1; length n-1). `pivmin` is the
    /// smallest admissible pivot magnitude.
    std::size_t (*sturm_count)(const double* diag, const double* off_sq, std::size_t n,
                               double shift, double pivmin);

    /// Four Sturm counts at once, one per shift.
    void (*sturm_count4)(const double* diag, const double* off_sq, std::size_t n,
                         const double* shifts, double pivmin, std::size_t* counts);

    /// out[k] = sum_i weight[i] * cos(k * angle[i]) for k = 0..n_max.
    void (*cosine_moments)(const double* weight, const double* angle, std::size_t n_points,
                           std::size_t n_max, double* out);
};

/// Table chosen for this process.
const KernelTable& active();

/// Reference implementation, always available.
const KernelTable& scalar();

/// Table for a given ISA, or nullptr when not compiled in or unsupported by the CPU.
const KernelTable* table_for(Isa isa);

std::string_view to_string(Isa isa);

// Span front-ends over the active table.

double dot(std::span<const double> a, std::span<const double> b);

std::size_t sturm_count(std::span<const double> diag, std::span<const double> off_sq,
                        double shift, double pivmin);

std::array<std::size_t, sturm_lanes> sturm_count4(std::span<const double> diag,
                                                   std::span<const double> off_sq,
                                                   const std::array<double, sturm_lanes>& shifts,
                                                   double pivmin);

void cosine_moments(std::span<const double> weight, std::span<const double> angle,
                    std::span<double> out);

namespace detail {
// Chebyshev angle recurrences are reseeded from libm this often.
inline constexpr std::size_t cosine_reseed_interval = 64;

extern const KernelTable scalar_table;
#if defined(SEMIREL_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(SEMIREL_HAVE_NEON)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace semirel::kernels
