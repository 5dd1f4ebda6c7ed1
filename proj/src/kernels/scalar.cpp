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

#include <cmath>
#include <cstddef>

#include "semirel/kernels.hpp"

namespace semirel::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

std::size_t sturm_count_scalar(const double* diag, const double* off_sq, std::size_t n,
                               double shift, double pivmin)
{
    if (n == 0) {
        return 0;
    }
    std::size_t count = 0;
    double d = diag[0] - shift;
    if (std::abs(d) < pivmin) {
        d = -pivmin;
    }
    count += d < 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        d = (diag[i] - shift) - off_sq[i - 1] / d;
        if (std::abs(d) < pivmin) {
            d = -pivmin;
        }
        count += d < 0.0;
    }
    return count;
}

void sturm_count4_scalar(const double* diag, const double* off_sq, std::size_t n,
                         const double* shifts, double pivmin, std::size_t* counts)
{
    for (std::size_t lane = 0; lane < sturm_lanes; ++lane) {
        counts[lane] = sturm_count_scalar(diag, off_sq, n, shifts[lane], pivmin);
    }
}

void cosine_moments_scalar(const double* weight, const double* angle, std::size_t n_points,
                           std::size_t n_max, double* out)
{
    for (std::size_t k = 0; k <= n_max; ++k) {
        out[k] = 0.0;
    }
    for (std::size_t i = 0; i < n_points; ++i) {
        const double w = weight[i];
        const double c1 = std::cos(angle[i]);
        const double s1 = std::sin(angle[i]);
        double c = 1.0;
        double s = 0.0;
        for (std::size_t k = 0; k <= n_max; ++k) {
            if (k % detail::cosine_reseed_interval == 0) {
                const double phase = static_cast<double>(k) * angle[i];
                c = std::cos(phase);
                s = std::sin(phase);
            }
            out[k] += w * c;
            const double cn = c * c1 - s * s1;
            const double sn = s * c1 + c * s1;
            c = cn;
            s = sn;
        }
    }
}

}  // namespace

namespace detail {
const KernelTable scalar_table{
    Isa::Scalar, dot_scalar, sturm_count_scalar, sturm_count4_scalar, cosine_moments_scalar,
};
}  // namespace detail

}  // namespace semirel::kernels
