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

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "semirel/kernels.hpp"

namespace semirel::kernels {
namespace {

bool cpu_has_avx2()
{
#if defined(SEMIREL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable& select()
{
    if (const char* forced = std::getenv("SEMIREL_KERNELS")) {
        const std::string_view name(forced);
        for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
            if (name == to_string(isa)) {
                if (const KernelTable* t = table_for(isa)) {
                    return *t;
                }
            }
        }
    }
    if (const KernelTable* t = table_for(Isa::Avx2)) {
        return *t;
    }
    if (const KernelTable* t = table_for(Isa::Neon)) {
        return *t;
    }
    return detail::scalar_table;
}

}  // namespace

const KernelTable& scalar()
{
    return detail::scalar_table;
}

const KernelTable* table_for(Isa isa)
{
    switch (isa) {
        case Isa::Scalar:
            return &detail::scalar_table;
        case Isa::Avx2:
#if defined(SEMIREL_HAVE_AVX2)
            if (cpu_has_avx2()) {
                return &detail::avx2_table;
            }
#endif
            return nullptr;
        case Isa::Neon:
#if defined(SEMIREL_HAVE_NEON)
            return &detail::neon_table;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

const KernelTable& active()
{
    static const KernelTable& table = select();
    return table;
}

std::string_view to_string(Isa isa)
{
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
        case Isa::Neon:
            return "neon";
    }
    return "unknown";
}

double dot(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: length mismatch");
    }
    return active().dot(a.data(), b.data(), a.size());
}

std::size_t sturm_count(std::span<const double> diag, std::span<const double> off_sq,
                        double shift, double pivmin)
{
    if (!diag.empty() && off_sq.size() + 1 < diag.size()) {
        throw std::invalid_argument("sturm_count: off-diagonal too short");
    }
    return active().sturm_count(diag.data(), off_sq.data(), diag.size(), shift, pivmin);
}

std::array<std::size_t, sturm_lanes> sturm_count4(std::span<const double> diag,
                                                   std::span<const double> off_sq,
                                                   const std::array<double, sturm_lanes>& shifts,
                                                   double pivmin)
{
    if (!diag.empty() && off_sq.size() + 1 < diag.size()) {
        throw std::invalid_argument("sturm_count4: off-diagonal too short");
    }
    std::array<std::size_t, sturm_lanes> counts{};
    active().sturm_count4(diag.data(), off_sq.data(), diag.size(), shifts.data(), pivmin,
                          counts.data());
    return counts;
}

void cosine_moments(std::span<const double> weight, std::span<const double> angle,
                    std::span<double> out)
{
    if (weight.size() != angle.size()) {
        throw std::invalid_argument("cosine_moments: length mismatch");
    }
    if (out.empty()) {
        return;
    }
    active().cosine_moments(weight.data(), angle.data(), weight.size(), out.size() - 1,
                            out.data());
}

}  // namespace semirel::kernels
