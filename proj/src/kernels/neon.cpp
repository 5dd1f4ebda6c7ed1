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

#include <arm_neon.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "semirel/kernels.hpp"

namespace semirel::kernels {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n)
{
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        acc1 = vaddq_f64(acc1, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
    }
    double sum = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

void sturm_count4_neon(const double* diag, const double* off_sq, std::size_t n,
                       const double* shifts, double pivmin, std::size_t* counts)
{
    for (std::size_t lane = 0; lane < sturm_lanes; ++lane) {
        counts[lane] = 0;
    }
    if (n == 0) {
        return;
    }
    const float64x2_t x_lo = vld1q_f64(shifts);
    const float64x2_t x_hi = vld1q_f64(shifts + 2);
    const float64x2_t piv = vdupq_n_f64(pivmin);
    const float64x2_t neg_piv = vdupq_n_f64(-pivmin);
    const float64x2_t zero = vdupq_n_f64(0.0);

    auto clamp = [&](float64x2_t d) {
        const uint64x2_t small = vcltq_f64(vabsq_f64(d), piv);
        return vbslq_f64(small, neg_piv, d);
    };

    const float64x2_t a0 = vdupq_n_f64(diag[0]);
    float64x2_t d_lo = clamp(vsubq_f64(a0, x_lo));
    float64x2_t d_hi = clamp(vsubq_f64(a0, x_hi));
    uint64x2_t c_lo = vshrq_n_u64(vcltq_f64(d_lo, zero), 63);
    uint64x2_t c_hi = vshrq_n_u64(vcltq_f64(d_hi, zero), 63);
    for (std::size_t i = 1; i < n; ++i) {
        const float64x2_t a = vdupq_n_f64(diag[i]);
        const float64x2_t b2 = vdupq_n_f64(off_sq[i - 1]);
        d_lo = clamp(vsubq_f64(vsubq_f64(a, x_lo), vdivq_f64(b2, d_lo)));
        d_hi = clamp(vsubq_f64(vsubq_f64(a, x_hi), vdivq_f64(b2, d_hi)));
        c_lo = vaddq_u64(c_lo, vshrq_n_u64(vcltq_f64(d_lo, zero), 63));
        c_hi = vaddq_u64(c_hi, vshrq_n_u64(vcltq_f64(d_hi, zero), 63));
    }
    counts[0] = vgetq_lane_u64(c_lo, 0);
    counts[1] = vgetq_lane_u64(c_lo, 1);
    counts[2] = vgetq_lane_u64(c_hi, 0);
    counts[3] = vgetq_lane_u64(c_hi, 1);
}

std::size_t sturm_count_neon(const double* diag, const double* off_sq, std::size_t n,
                             double shift, double pivmin)
{
    const double shifts[sturm_lanes] = {shift, shift, shift, shift};
    std::size_t counts[sturm_lanes];
    sturm_count4_neon(diag, off_sq, n, shifts, pivmin, counts);
    return counts[0];
}

void cosine_moments_neon(const double* weight, const double* angle, std::size_t n_points,
                         std::size_t n_max, double* out)
{
    const std::size_t n_terms = n_max + 1;
    std::vector<double> acc(2 * n_terms, 0.0);
    std::size_t i = 0;
    double c_seed[2];
    double s_seed[2];
    for (; i + 2 <= n_points; i += 2) {
        const float64x2_t w = vld1q_f64(weight + i);
        const double c1s[2] = {std::cos(angle[i]), std::cos(angle[i + 1])};
        const double s1s[2] = {std::sin(angle[i]), std::sin(angle[i + 1])};
        const float64x2_t c1 = vld1q_f64(c1s);
        const float64x2_t s1 = vld1q_f64(s1s);
        float64x2_t c = vdupq_n_f64(1.0);
        float64x2_t s = vdupq_n_f64(0.0);
        for (std::size_t k = 0; k < n_terms; ++k) {
            if (k % detail::cosine_reseed_interval == 0) {
                for (int lane = 0; lane < 2; ++lane) {
                    const double phase = static_cast<double>(k) * angle[i + lane];
                    c_seed[lane] = std::cos(phase);
                    s_seed[lane] = std::sin(phase);
                }
                c = vld1q_f64(c_seed);
                s = vld1q_f64(s_seed);
            }
            double* slot = acc.data() + 2 * k;
            vst1q_f64(slot, vaddq_f64(vld1q_f64(slot), vmulq_f64(w, c)));
            const float64x2_t cn = vsubq_f64(vmulq_f64(c, c1), vmulq_f64(s, s1));
            const float64x2_t sn = vaddq_f64(vmulq_f64(s, c1), vmulq_f64(c, s1));
            c = cn;
            s = sn;
        }
    }
    for (std::size_t k = 0; k < n_terms; ++k) {
        out[k] = acc[2 * k] + acc[2 * k + 1];
    }
    if (i < n_points) {
        std::vector<double> tail(n_terms);
        detail::scalar_table.cosine_moments(weight + i, angle + i, n_points - i, n_max, tail.data());
        for (std::size_t k = 0; k < n_terms; ++k) {
            out[k] += tail[k];
        }
    }
}

}  // namespace

namespace detail {
const KernelTable neon_table{
    Isa::Neon, dot_neon, sturm_count_neon, sturm_count4_neon, cosine_moments_neon,
};
}  // namespace detail

}  // namespace semirel::kernels
