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

// Reference values computed independently of the library: special
// functions from the standard library, closed forms and a plain RK4
// integrator.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

// Ground state of -u'' - v e^{-r} u = -k^2 u: u = J_{2k}(2 sqrt(v) e^{-r/2}),
// so u(0) = 0 puts 2 sqrt(v) at the first zero of J_{2k}.
inline double exponential_ground(double v)
{
    const double x = 2.0 * std::sqrt(v);
    double lo = 0.0;
    double hi = x;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (std::cyl_bessel_j(mid, x) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    const double k = 0.25 * (lo + hi);
    return -k * k;
}

inline double kratzer_gamma(double v)
{
    return 0.5 + std::sqrt(0.25 - v * v);
}

// Coulomb Klein-Gordon ground energy m / sqrt(1 + v^2 / gamma^2).
inline double coulomb_kg_energy(double v, double m)
{
    const double g = kratzer_gamma(v);
    return m / std::sqrt(1.0 + v * v / (g * g));
}

// True when u'' = W u, u(0) = 0, u'(0) = 1 has a node on (0, r_far] or is
// heading to one; RK4 with fixed step.
inline bool binds_rk4(const std::function<double(double)>& W, double r_far, double step)
{
    const int n = static_cast<int>(std::ceil(r_far / step));
    const double h = r_far / n;
    double u = 0.0;
    double p = 1.0;
    auto w_at = [&](double r) { return r <= 0.0 ? W(1e-300) : W(r); };
    for (int i = 0; i < n; ++i) {
        const double r = h * i;
        const double k1u = p;
        const double k1p = w_at(r) * u;
        const double k2u = p + 0.5 * h * k1p;
        const double k2p = w_at(r + 0.5 * h) * (u + 0.5 * h * k1u);
        const double k3u = p + 0.5 * h * k2p;
        const double k3p = w_at(r + 0.5 * h) * (u + 0.5 * h * k2u);
        const double k4u = p + h * k3p;
        const double k4p = w_at(r + h) * (u + h * k3u);
        const double un = u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        const double pn = p + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        if (un <= 0.0) {
            return true;
        }
        u = un;
        p = pn;
        if (u > 1e200) {
            u *= 1e-200;
            p *= 1e-200;
        }
    }
    return p < 0.0;
}

// Smallest v in [lo, hi] at which W(v) binds, by bisection.
inline double coupling_threshold_rk4(const std::function<std::function<double(double)>(double)>& W,
                                     double lo, double hi, double r_far, double step, double tol)
{
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (binds_rk4(W(mid), r_far, step)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Integral of the Gaussian density (4/sqrt(pi)) t^2 e^{-t^2} over [0, x].
inline double rho_cdf(double x)
{
    return std::erf(x) - 2.0 / std::sqrt(std::numbers::pi) * x * std::exp(-x * x);
}

}  // namespace oracle
