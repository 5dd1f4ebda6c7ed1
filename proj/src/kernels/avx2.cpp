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

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "semirel/kernels.hpp"

namespace semirel::kernels {
namespace {

inline double hsum(__m256d v)
{
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sw = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sw));
}

double dot_avx2(const double* a, const double* b, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
        acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
        acc2 = _mm256_add_pd(acc2, _mm256_mul_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8)));
        acc3 = _mm256_add_pd(acc3, _mm256_mul_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12)));
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    double sum = hsum(_mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
    for (; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

std::size_t sturm_count_avx2(const double* diag, const double* off_sq, std::size_t n,
                             double shift, double pivmin)
{
    // A single shift is a serial recurrence; broadcast it through the 4-lane path.
    const double shifts[sturm_lanes] = {shift, shift, shift, shift};
    std::size_t counts[sturm_lanes];
    detail::avx2_table.sturm_count4(diag, off_sq, n, shifts, pivmin, counts);
    return counts[0];
}

void sturm_count4_avx2(const double* diag, const double* off_sq, std::size_t n,
                       const double* shifts, double pivmin, std::size_t* counts)
{
    for (std::size_t lane = 0; lane < sturm_lanes; ++lane) {
        counts[lane] = 0;
    }
    if (n == 0) {
        return;
    }
    const __m256d x = _mm256_loadu_pd(shifts);
    const __m256d piv = _mm256_set1_pd(pivmin);
    const __m256d neg_piv = _mm256_set1_pd(-pivmin);
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();

    auto clamp = [&](__m256d d) {
        const __m256d mag = _mm256_andnot_pd(sign_mask, d);
        const __m256d small = _mm256_cmp_pd(mag, piv, _CMP_LT_OQ);
        return _mm256_blendv_pd(d, neg_piv, small);
    };

    __m256d d = clamp(_mm256_sub_pd(_mm256_set1_pd(diag[0]), x));
    __m256d count = _mm256_and_pd(_mm256_cmp_pd(d, zero, _CMP_LT_OQ), one);
    for (std::size_t i = 1; i < n; ++i) {
        const __m256d a = _mm256_sub_pd(_mm256_set1_pd(diag[i]), x);
        d = clamp(_mm256_sub_pd(a, _mm256_div_pd(_mm256_set1_pd(off_sq[i - 1]), d)));
        count = _mm256_add_pd(count, _mm256_and_pd(_mm256_cmp_pd(d, zero, _CMP_LT_OQ), one));
    }
    alignas(32) double out[sturm_lanes];
    _mm256_store_pd(out, count);
    for (std::size_t lane = 0; lane < sturm_lanes; ++lane) {
        counts[lane] = static_cast<std::size_t>(out[lane]);
    }
}

void cosine_moments_avx2(const double* weight, const double* angle, std::size_t n_points,
                         std::size_t n_max, double* out)
{
    const std::size_t n_terms = n_max + 1;
    // Per-lane partial sums, one 4-wide accumulator per moment.
    std::vector<double> acc(4 * n_terms, 0.0);
    std::size_t i = 0;
    alignas(32) double c_seed[4];
    alignas(32) double s_seed[4];
    for (; i + 4 <= n_points; i += 4) {
        const __m256d w = _mm256_loadu_pd(weight + i);
        alignas(32) double c1s[4];
        alignas(32) double s1s[4];
        for (int lane = 0; lane < 4; ++lane) {
            c1s[lane] = std::cos(angle[i + lane]);
            s1s[lane] = std::sin(angle[i + lane]);
        }
        const __m256d c1 = _mm256_load_pd(c1s);
        const __m256d s1 = _mm256_load_pd(s1s);
        __m256d c = _mm256_set1_pd(1.0);
        __m256d s = _mm256_setzero_pd();
        for (std::size_t k = 0; k < n_terms; ++k) {
            if (k % detail::cosine_reseed_interval == 0) {
                for (int lane = 0; lane < 4; ++lane) {
                    const double phase = static_cast<double>(k) * angle[i + lane];
                    c_seed[lane] = std::cos(phase);
                    s_seed[lane] = std::sin(phase);
                }
                c = _mm256_load_pd(c_seed);
                s = _mm256_load_pd(s_seed);
            }
            double* slot = acc.data() + 4 * k;
            _mm256_storeu_pd(slot, _mm256_add_pd(_mm256_loadu_pd(slot), _mm256_mul_pd(w, c)));
            const __m256d cn = _mm256_sub_pd(_mm256_mul_pd(c, c1), _mm256_mul_pd(s, s1));
            const __m256d sn = _mm256_add_pd(_mm256_mul_pd(s, c1), _mm256_mul_pd(c, s1));
            c = cn;
            s = sn;
        }
    }
    for (std::size_t k = 0; k < n_terms; ++k) {
        out[k] = hsum(_mm256_loadu_pd(acc.data() + 4 * k));
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
const KernelTable avx2_table{
    Isa::Avx2, dot_avx2, sturm_count_avx2, sturm_count4_avx2, cosine_moments_avx2,
};
}  // namespace detail

}  // namespace semirel::kernels
